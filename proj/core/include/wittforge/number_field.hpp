#ifndef WITTFORGE_NUMBER_FIELD_HPP
#define WITTFORGE_NUMBER_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittforge {

// The field K = Q[y]/E(y) for an integer Eisenstein polynomial E at p.
// The valuation ring of the completion is O = Z_p[y]/E with uniformizer y,
// so exact O-coefficients of universal polynomials live here.
class NumberField {
public:
    using Elem = std::vector<mpq_class>;

    NumberField(std::int64_t p, std::vector<std::int64_t> eisenstein);
    // Q itself viewed as Q[y]/(y - p).
    static NumberField rationals(std::int64_t p) { return NumberField(p, {-p, 1}); }

    std::int64_t p() const { return p_; }
    int degree() const { return e_; }
    const std::vector<std::int64_t>& eisenstein() const { return eis_; }

    Elem zero() const { return Elem(e_, 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(const mpz_class& v) const;
    Elem from_rational(const mpq_class& v) const;
    Elem pi() const;
    Elem pi_inv() const { return pi_inv_; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, unsigned long k) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Denominators prime to p, i.e. a lies in O.
    bool is_integral(const Elem& a) const;
    // Reduction O -> O/pi = F_p; requires integrality.
    std::int64_t residue(const Elem& a) const;
    std::string to_string(const Elem& a) const;

private:
    std::int64_t p_;
    int e_;
    std::vector<std::int64_t> eis_;
    Elem pi_inv_;
};

}  // namespace wittforge

#endif
