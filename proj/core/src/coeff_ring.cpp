#include "wittforge/coeff_ring.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wittforge {

CoeffRing::CoeffRing(ChainRingPtr base, int factors, int step) : base_(std::move(base)), f_(factors), step_(step)
{
    if (!base_) throw std::invalid_argument("coefficient ring: null base");
    if (f_ < 1 || f_ > kMaxFactors) throw std::invalid_argument("coefficient ring: factor count out of range");
    if (step_ < 1) throw std::invalid_argument("coefficient ring: step must be >= 1");
}

int CoeffRing::sigma_order() const
{
    // tau = Frob^{f*step} has order s / gcd(s, f*step); sigma^f acts as tau.
    const int s = base_->sigma_order();
    return f_ * (s / std::gcd(s, f_ * step_));
}

std::shared_ptr<const CoeffRing> CoeffRing::at_level(int n) const
{
    return std::make_shared<const CoeffRing>(base_->at_level(n), f_, step_);
}

std::string CoeffRing::describe() const
{
    std::ostringstream os;
    os << base_->describe();
    if (f_ > 1) os << "^" << f_;
    if (step_ > 1) os << " sigma^" << step_;
    return os.str();
}

bool CoeffRing::same_as(const CoeffRing& o) const
{
    return f_ == o.f_ && step_ == o.step_ && base_->same_as(*o.base_);
}

PElem CoeffRing::diag(const CElem& a) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = a;
    return r;
}

PElem CoeffRing::embed(const CElem& a) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->frob(a, i * step_);
    return r;
}

PElem CoeffRing::idempotent(int i) const
{
    if (i < 0 || i >= f_) throw std::out_of_range("idempotent index");
    PElem r;
    r.c[i] = base_->one();
    return r;
}

PElem CoeffRing::add(const PElem& a, const PElem& b) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->add(a.c[i], b.c[i]);
    return r;
}

PElem CoeffRing::sub(const PElem& a, const PElem& b) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->sub(a.c[i], b.c[i]);
    return r;
}

PElem CoeffRing::neg(const PElem& a) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->neg(a.c[i]);
    return r;
}

PElem CoeffRing::mul(const PElem& a, const PElem& b) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->mul(a.c[i], b.c[i]);
    return r;
}

bool CoeffRing::is_unit(const PElem& a) const
{
    for (int i = 0; i < f_; ++i)
        if (!base_->is_unit(a.c[i])) return false;
    return true;
}

PElem CoeffRing::inv(const PElem& a) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->inv(a.c[i]);
    return r;
}

int CoeffRing::valuation(const PElem& a) const
{
    int v = base_->n();
    for (int i = 0; i < f_; ++i) v = std::min(v, base_->valuation(a.c[i]));
    return v;
}

PElem CoeffRing::sigma(const PElem& a, int t) const
{
    // sigma^t: index shift by t with a tau^{+-1} on wrap-around.
    PElem r;
    for (int i = 0; i < f_; ++i) {
        const long src = static_cast<long>(i) + t;
        long q = src >= 0 ? src / f_ : -((-src + f_ - 1) / f_);
        const int j = static_cast<int>(src - q * f_);
        r.c[i] = q == 0 ? a.c[j] : tau(a.c[j], static_cast<int>(q));
    }
    return r;
}

PElem CoeffRing::reduce_to(const PElem& a, const CoeffRing& t) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->reduce_to(a.c[i], *t.base_);
    return r;
}

PElem CoeffRing::lift_from(const PElem& a, const CoeffRing& s) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->lift_from(a.c[i], *s.base_);
    return r;
}

PElem CoeffRing::random(std::mt19937_64& rng) const
{
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->random(rng);
    return r;
}

std::uint64_t CoeffRing::cardinality() const
{
    const std::uint64_t b = base_->cardinality();
    if (b == 0) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < f_; ++i) {
        if (r > (std::uint64_t(1) << 62) / b) return 0;
        r *= b;
    }
    return r;
}

PElem CoeffRing::element_at(std::uint64_t index) const
{
    const std::uint64_t b = base_->cardinality();
    if (b == 0) throw std::overflow_error("coefficient ring too large to enumerate");
    PElem r;
    for (int i = 0; i < f_; ++i) {
        r.c[i] = base_->element_at(index % b);
        index /= b;
    }
    return r;
}

std::int64_t CoeffRing::flat_modulus() const
{
    const std::int64_t m = base_->slot_modulus(0);
    for (int s = 0; s < base_->slot_count(); ++s)
        if (base_->slot_modulus(s) != m)
            throw std::invalid_argument("additive coordinates need equal slot moduli");
    return m;
}

std::vector<std::int64_t> CoeffRing::flatten(const PElem& a) const
{
    std::vector<std::int64_t> v;
    v.reserve(flat_size());
    for (int i = 0; i < f_; ++i)
        for (int s = 0; s < base_->slot_count(); ++s) v.push_back(a.c[i].c[s]);
    return v;
}

PElem CoeffRing::unflatten(const std::vector<std::int64_t>& v) const
{
    if (static_cast<int>(v.size()) != flat_size()) throw std::invalid_argument("unflatten: size mismatch");
    PElem r;
    std::size_t k = 0;
    for (int i = 0; i < f_; ++i)
        for (int s = 0; s < base_->slot_count(); ++s) {
            const std::int64_t m = base_->slot_modulus(s);
            std::int64_t x = v[k++] % m;
            r.c[i].c[s] = x < 0 ? x + m : x;
        }
    return r;
}

std::string CoeffRing::to_string(const PElem& a) const
{
    std::string out;
    for (int i = 0; i < f_; ++i) {
        if (i) out += " | ";
        out += base_->to_string(a.c[i]);
    }
    return out;
}

PElem CoeffRing::parse(const std::string& s) const
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto bar = s.find('|', start);
        parts.push_back(s.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (parts.size() == 1 && f_ > 1) return diag(base_->parse(parts[0]));
    if (static_cast<int>(parts.size()) != f_) throw std::invalid_argument("coefficient has the wrong number of components");
    PElem r;
    for (int i = 0; i < f_; ++i) r.c[i] = base_->parse(parts[i]);
    return r;
}

}  // namespace wittforge
