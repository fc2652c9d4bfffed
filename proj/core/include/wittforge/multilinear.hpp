#ifndef WITTFORGE_MULTILINEAR_HPP
#define WITTFORGE_MULTILINEAR_HPP

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wittforge/dieudonne.hpp"
#include "wittforge/display.hpp"

namespace wittforge {

// W-multilinear map D_1 x ... x D_r -> D_0 given by its values on basis
// tuples.  Tuples are indexed in mixed radix, first slot most significant.
struct MultilinearMap {
    std::vector<DieudonneModule> sources;
    DieudonneModule target;
    std::vector<PVec> tensor;

    int arity() const { return static_cast<int>(sources.size()); }
};

MultilinearMap zero_multilinear(const std::vector<DieudonneModule>& sources, const DieudonneModule& target);
std::size_t tuple_count(const std::vector<DieudonneModule>& sources);
std::vector<int> tuple_at(const std::vector<DieudonneModule>& sources, std::size_t index);
PVec ml_eval(const MultilinearMap& m, const std::vector<PVec>& args);

// Differences lhs - rhs, concatenated over all basis tuples.
PVec v_condition_residuals(const MultilinearMap& m);
PVec f_condition_residuals(const MultilinearMap& m);
bool check_V_condition(const MultilinearMap& m);
// Basis tuples plus `samples` random tuples.
bool check_F_conditions(const MultilinearMap& m, int samples = 100, std::uint64_t seed = 5);

enum class Flavor { All, Sym, Alt };
Flavor parse_flavor(const std::string& s);
// Symmetry or alternation defects over all basis tuples; empty for All.
PVec flavor_residuals(const MultilinearMap& m, Flavor flavor);

struct KernelResult {
    std::vector<PVec> generators;
    std::vector<int> orders;  // log_p of the order of each generator
    int log_size = 0;         // log_p of the kernel's size
};
// Kernel of an additive map R^unknowns -> R^k, computed over the flattened
// Z/p^N-module; requires equal slot moduli.
KernelResult additive_kernel(const CoeffRing& R, int unknowns, const std::function<PVec(const PVec&)>& map,
                             int budget = 4096);

struct LSpace {
    std::vector<MultilinearMap> generators;
    std::vector<int> orders;
    int log_size = 0;
};
LSpace solve_L_space(const std::vector<DieudonneModule>& sources, const DieudonneModule& target, Flavor flavor,
                     bool impose_f = true, int budget = 4096);

// W-linear G : S -> N with G F_S = F_N G and G V_S = V_N G.
struct HomSpace {
    std::vector<PMat> generators;
    std::vector<int> orders;
    int log_size = 0;
};
HomSpace solve_hom_space(const DieudonneModule& S, const DieudonneModule& N, int budget = 4096);

struct ModuleUniversalReport {
    int alt_log = 0;         // log_p |L_alt(D^j, N)|
    int alt_v_only_log = 0;  // same without the F-conditions
    int hom_log = 0;         // log_p |Hom_{F,V}(wedge^j D, N)|
    bool composition_in_alt = false;
    bool ok() const { return composition_in_alt && alt_log == hom_log; }
};
ModuleUniversalReport module_universal_property(const DieudonneModule& D, int j, const DieudonneModule& N);

// Solutions of the V-condition alone at a higher level, reduced to `level`
// and tested against the F-conditions; also the same test directly at `level`.
struct FConditionLiftReport {
    int level = 0;
    int buffer = 0;
    int lifted_generators = 0;
    int lifted_failures = 0;
    int direct_generators = 0;
    int direct_failures = 0;
    int direct_v_only_log = 0;
    int direct_full_log = 0;
};
FConditionLiftReport f_condition_lift(const std::vector<DieudonneModule>& sources, const DieudonneModule& target,
                                      int level);

// Index vectors: entries in [0, M) with minimum 0.
struct IndexVector {
    std::vector<int> d;
    int M = 1;
};
bool is_valid(const IndexVector& v);
IndexVector delta(const IndexVector& v);
std::vector<IndexVector> all_index_vectors(int r, int M);
// Membership in S_{i,r} = [1, M-1]^{i-1} x {0} x [0, M-1]^{r-i}, i 1-based.
bool in_block(const IndexVector& v, int i);

// W_m(R)[F^k] membership and the zeta_{d,n} product.
bool killed_by_frobenius(const WittRing& W, const WVec& x, int k);
WVec zeta_d(const WittRing& W, const std::vector<WVec>& xs, const IndexVector& d, int n);
// Random element of W_m(R)[F^k] for R = F_q[y]/(y^N).
WVec random_frobenius_torsion(const WittRing& W, int k, std::mt19937_64& rng);

// Both double sums of the telescoping identity, for modules A^dim over a
// commutative ring A; w_{i,j+1} = w_{i,j} + alpha y_{i,j} is built here.
template <class Ring>
struct UglysumData {
    using Vec = std::vector<typename Ring::Elem>;
    typename Ring::Elem alpha;
    std::vector<Vec> w0;               // w_{i,0}, i = 1..r
    std::vector<std::vector<Vec>> y;   // y[i][j], j = 0..n-1
    std::function<Vec(const std::vector<Vec>&)> phi;
};

template <class Ring>
bool uglysum_check(const Ring& A, const UglysumData<Ring>& data)
{
    using Vec = typename UglysumData<Ring>::Vec;
    const int r = static_cast<int>(data.w0.size());
    if (r == 0 || static_cast<int>(data.y.size()) != r) throw std::invalid_argument("uglysum: inconsistent data");
    const int n = static_cast<int>(data.y[0].size());
    std::vector<std::vector<Vec>> w(r);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(data.y[i].size()) != n) throw std::invalid_argument("uglysum: inconsistent data");
        w[i].push_back(data.w0[i]);
        for (int j = 0; j < n; ++j) {
            Vec next = w[i][j];
            for (std::size_t k = 0; k < next.size(); ++k) next[k] = A.add(next[k], A.mul(data.alpha, data.y[i][j][k]));
            w[i].push_back(next);
        }
    }
    auto accumulate = [&](Vec& acc, const Vec& v) {
        if (acc.empty()) acc.assign(v.size(), A.zero());
        for (std::size_t k = 0; k < v.size(); ++k) acc[k] = A.add(acc[k], v[k]);
    };
    Vec lhs, rhs;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Vec> a(r), b(r);
            for (int t = 0; t < r; ++t) {
                a[t] = t < i ? w[t][j + 1] : t == i ? data.y[i][j] : w[t][j];
                b[t] = t < i ? w[t][n] : t == i ? data.y[i][j] : w[t][0];
            }
            accumulate(lhs, data.phi(a));
            accumulate(rhs, data.phi(b));
        }
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (!A.is_zero(A.sub(lhs[k], rhs[k]))) return false;
    return true;
}

// theta on E_k (x) wedge^j D kills the generating relations rho_1, rho_2.
struct WeakaltReport {
    long long tuples = 0;
    long long rho1_failures = 0;
    long long rho2_failures = 0;
    bool phi_upsilon_commute = false;
    bool theta_section = false;
    bool ok() const { return rho1_failures == 0 && rho2_failures == 0 && phi_upsilon_commute && theta_section; }
};
WeakaltReport weakalt_relation_check(const DieudonneModule& D, int j);

}  // namespace wittforge

#endif
