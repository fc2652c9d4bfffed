#include "wittforge/number_field.hpp"

#include <sstream>
#include <stdexcept>

namespace wittforge {

NumberField::NumberField(std::int64_t p, std::vector<std::int64_t> eisenstein)
    : p_(p), e_(static_cast<int>(eisenstein.size()) - 1), eis_(std::move(eisenstein))
{
    if (e_ < 1 || eis_.back() != 1)
        throw std::invalid_argument("Eisenstein polynomial must be monic of degree >= 1");
    for (int i = 0; i < e_; ++i)
        if (eis_[i] % p_ != 0)
            throw std::invalid_argument("Eisenstein polynomial: coefficient not divisible by p");
    if ((eis_[0] / p_) % p_ == 0)
        throw std::invalid_argument("Eisenstein polynomial: constant term divisible by p^2");
    // y^{-1} = -(y^{e-1} + E_{e-1} y^{e-2} + ... + E_1) / E_0
    pi_inv_ = zero();
    for (int b = 0; b < e_; ++b)
        pi_inv_[b] = mpq_class(-eis_[b + 1], eis_[0]);
    for (auto& c : pi_inv_) c.canonicalize();
}

NumberField::Elem NumberField::from_int(const mpz_class& v) const
{
    Elem r = zero();
    r[0] = v;
    return r;
}

NumberField::Elem NumberField::from_rational(const mpq_class& v) const
{
    Elem r = zero();
    r[0] = v;
    return r;
}

NumberField::Elem NumberField::pi() const
{
    if (e_ == 1) return from_int(-eis_[0]);
    Elem r = zero();
    r[1] = 1;
    return r;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const
{
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = a[i] + b[i];
    return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const
{
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = a[i] - b[i];
    return r;
}

NumberField::Elem NumberField::neg(const Elem& a) const
{
    Elem r(e_);
    for (int i = 0; i < e_; ++i) r[i] = -a[i];
    return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const
{
    if (e_ == 1) return Elem{a[0] * b[0]};
    std::vector<mpq_class> t(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < e_; ++j)
            if (b[j] != 0) t[i + j] += a[i] * b[j];
    }
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        if (t[k] == 0) continue;
        for (int j = 0; j < e_; ++j) t[k - e_ + j] -= t[k] * eis_[j];
        t[k] = 0;
    }
    t.resize(e_);
    return t;
}

NumberField::Elem NumberField::pow(const Elem& a, unsigned long k) const
{
    Elem r = one(), b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k) b = mul(b, b);
    }
    return r;
}

bool NumberField::is_zero(const Elem& a) const
{
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

bool NumberField::is_integral(const Elem& a) const
{
    for (const auto& c : a)
        if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p_))) return false;
    return true;
}

std::int64_t NumberField::residue(const Elem& a) const
{
    if (!is_integral(a)) throw std::domain_error("residue of a non-integral element");
    mpz_class P = p_;
    mpz_class num = a[0].get_num() % P, den = a[0].get_den() % P;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    mpz_class r = (num * inv) % P;
    if (r < 0) r += P;
    return r.get_si();
}

std::string NumberField::to_string(const Elem& a) const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << a[i].get_str();
        if (i == 1) os << "*y";
        if (i > 1) os << "*y^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace wittforge
