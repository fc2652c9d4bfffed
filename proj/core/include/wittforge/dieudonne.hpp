#ifndef WITTFORGE_DIEUDONNE_HPP
#define WITTFORGE_DIEUDONNE_HPP

#include <optional>
#include <string>
#include <vector>

#include "wittforge/semilinear.hpp"

namespace wittforge {

// Free module of rank h over a CoeffRing (a product of f chain rings) with
// F of twist +1 and V of twist -1, FV = VF = scalar.  scalar is p for
// classical coefficients (possibly with an O-action, f > 1) and pi for
// equal-characteristic or ramified modules.
struct DieudonneModule {
    CoeffRingPtr ring;
    int h = 0;
    SemilinearMap F;
    SemilinearMap V;
    PElem scalar;

    int level() const { return ring->level(); }
    int f() const { return ring->factors(); }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string s)
    {
        ok = false;
        failures.push_back(std::move(s));
    }
};

DieudonneModule make_module(CoeffRingPtr ring, PMat F, PMat V, PElem scalar);
ValidationReport validate(const DieudonneModule& D, bool expect_connected = false);
// V nilpotent modulo the maximal ideal.
bool is_connected(const DieudonneModule& D);
DieudonneModule reduce_module(const DieudonneModule& D, int level);
// Coordinates changed by an invertible T (columns = new basis).
DieudonneModule change_basis(const DieudonneModule& D, const PMat& T);

struct ODecomposition {
    int f = 1;
    int h = 0;
    // V restricted M_{i-1} -> M_i; component 0 is additionally tau^{-1}-semilinear.
    std::vector<CMat> v_maps;
    std::vector<CMat> f_maps;  // F: M_{i+1} -> M_i, component f-1 tau-semilinear
    std::vector<int> tangent_lengths;  // length of M_i / V M_{i-1}
};
ODecomposition decompose_by_idempotents(const DieudonneModule& D);
bool has_scalar_action(const ODecomposition& d);

// Epsilon with {eps, V^f eps, ..., V^{(h-1)f} eps} a basis, searched
// componentwise: residue basis vectors, then 64 seeded combinations.
std::optional<PVec> find_epsilon(const DieudonneModule& D, std::string* why = nullptr);
// Columns V^{f alpha} eps.
PMat epsilon_basis(const DieudonneModule& D, const PVec& eps);

// m_1 ^ ... ^ m_j in the standard lexicographic wedge basis.
PVec wedge(const CoeffRing& R, int h, const std::vector<PVec>& vecs);

struct ExteriorPowerData {
    int j = 0;
    DieudonneModule module;  // F = Phi, V = Upsilon
    PVec epsilon;            // of the connected part
    PMat split_basis;        // columns: etale part then V^{f alpha} eps
    int etale_rank = 0;
};
ExteriorPowerData exterior_power(const DieudonneModule& D, int j);
// Etale / connected split by stabilized images and kernels of V-powers.
struct ConnectedEtaleSplit {
    PMat etale_basis;      // columns
    PMat connected_basis;  // columns
};
ConnectedEtaleSplit split_connected_etale(const DieudonneModule& D);

struct DiagramReport {
    long long checked = 0;
    long long f_failures = 0;
    long long v_failures = 0;
    bool phi_upsilon_ok = false;
    bool upsilon_phi_ok = false;
    bool ok() const { return f_failures == 0 && v_failures == 0 && phi_upsilon_ok && upsilon_phi_ok; }
};
// trials < 0 enumerates D^j exhaustively.
DiagramReport verify_diagrams(const DieudonneModule& D, const ExteriorPowerData& E, long long trials,
                              std::uint64_t seed = 1);

// det(Upsilon) = det(V)^{C(h-1, j-1)}.
bool upsilon_det_identity(const DieudonneModule& D, const ExteriorPowerData& E);
// Any sigma-semilinear Phi' with Upsilon Phi' = scalar agrees with Phi modulo
// the torsion killed by Upsilon.
bool phi_uniqueness(const ExteriorPowerData& E);

// log_q of the order of (wedge^j D) at the module's level.
long long order_exponent(const DieudonneModule& D, int j);

struct DimensionResult {
    int value = 0;
    int level = 0;
    bool stabilized = true;
};
DimensionResult dimension(const DieudonneModule& D);

struct TowerReport {
    std::uint64_t ker_size = 0;
    std::uint64_t image_size = 0;
    std::uint64_t source_size = 0;
    bool contained = false;
    bool eta_injective = false;
    bool reduce_kernel_matches = false;
    bool upsilon_commutes = false;
    bool ok() const
    {
        return ker_size == image_size && contained && eta_injective && reduce_kernel_matches && upsilon_commutes;
    }
};
// D given at level n + m; exactness of 0 -> wedge M_m -> wedge M_{n+m} -> wedge M_n -> 0.
TowerReport tower_check(const DieudonneModule& D, int j, int n, int m);

// Fixtures.
PMat antidiag(const CoeffRing& R, const PElem& lower_left, const PElem& upper_right);
DieudonneModule supersingular_module(CoeffRingPtr R);
DieudonneModule etale_module(CoeffRingPtr R, int h);
DieudonneModule multiplicative_module(CoeffRingPtr R, int h);
// Height-h dimension-1 module.  With scalar pi (equal characteristic or a
// ramified ring) V is the companion matrix of x^h - pi; otherwise the module
// is D(H) for that ramified Lubin-Tate module H.
DieudonneModule lubin_tate_module(CoeffRingPtr R, int h);

}  // namespace wittforge

#endif
