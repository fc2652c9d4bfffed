#ifndef WITTFORGE_RAM_EQUIV_HPP
#define WITTFORGE_RAM_EQUIV_HPP

#include <stdexcept>
#include <vector>

#include "wittforge/dieudonne.hpp"
#include "wittforge/multilinear.hpp"

namespace wittforge {

// A module D = M_0 + ... + M_{f-1} over a CoeffRing with f factors, where
// M_i = V M_{i-1} for i != 0 (O acts on the tangent space through one
// embedding).  The ramified module H = M_0 lives over the same base chain
// ring B with sigma_pi = tau, i.e. over CoeffRing(B, 1, f * step).
struct ScalarActionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ScalarActionModule {
    DieudonneModule module;
    ODecomposition decomposition;
    bool scalar_action = false;
};
ScalarActionModule scalar_action_module(const DieudonneModule& D);

CoeffRingPtr ramified_ring(const CoeffRing& R);

struct HModule {
    DieudonneModule module;  // V = V_pi, F = F_pi, scalar pi
    int f = 1;
    // F_pi is the image of F under division by p/pi; unique when p/pi is a unit.
    bool f_pi_unique = true;
};
HModule H_functor(const DieudonneModule& D);
// Inverse construction with f factors; H must have pH inside V_pi H.
DieudonneModule D_functor(const DieudonneModule& H, int f);

// Columns of component i are V^i restricted M_0 -> M_i.
PMat v_power_iso(const DieudonneModule& D);

struct RoundtripReport {
    bool v_exact = false;      // V_pi of H(D(H)) equals V_pi of H
    bool f_exact = false;      // same for F_pi
    bool f_congruent = false;  // F_pi agrees modulo the division ambiguity
    bool iso_invertible = false;
    bool iso_intertwines = false;  // D(H(D)) = change_basis(D, iso)
    bool ok() const { return v_exact && f_congruent && iso_invertible && iso_intertwines; }
};
// Both roundtrips, starting from a module with scalar action.
RoundtripReport equivalence_roundtrip(const DieudonneModule& D);

// phi over the H side (sources H(D_k), target H(N)) to the D side, and back.
MultilinearMap chi(const MultilinearMap& phi, const std::vector<DieudonneModule>& sources,
                   const DieudonneModule& target);
MultilinearMap xi(const MultilinearMap& psi);

struct ChiXiReport {
    int phi_generators = 0;
    int psi_generators = 0;
    int xi_chi_failures = 0;
    int chi_xi_failures = 0;
    int condition_failures = 0;
    int flavor_failures = 0;
    bool ok() const { return xi_chi_failures == 0 && chi_xi_failures == 0 && condition_failures == 0 && flavor_failures == 0; }
};
// Generators of both L-spaces for D^r -> N, transported and compared on all basis tuples.
ChiXiReport chi_xi_check(const DieudonneModule& D, int r, const DieudonneModule& N, Flavor flavor);

// x = x_0 + V x_1 + ... + V^{f-1} x_{f-1} with x_j in M_0  ->  sum x_j.
PVec trace_map(const DieudonneModule& D, const PVec& x);

struct ExteriorCompatReport {
    int rank_h_of_wedge = 0;
    int rank_wedge_of_h = 0;
    bool v_equal = false;
    bool f_equal = false;
    bool f_congruent = false;  // modulo the ambiguity of F_pi
    bool ok() const { return rank_h_of_wedge == rank_wedge_of_h && v_equal && f_congruent; }
};
// H(wedge^r D) against wedge^r H(D), both in the standard wedge basis.
ExteriorCompatReport exterior_compatibility(const DieudonneModule& D, int r);

}  // namespace wittforge

#endif
