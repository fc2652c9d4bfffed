#ifndef WITTFORGE_DISPLAY_HPP
#define WITTFORGE_DISPLAY_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wittforge/dieudonne.hpp"
#include "wittforge/ramified_witt.hpp"
#include "wittforge/witt.hpp"

namespace wittforge {

using WittRing = WittVectors<ChainRing>;
using WittRingPtr = std::shared_ptr<const WittRing>;
using WVec = WittRing::Elem;
using WMat = Mat<WVec>;

// W_m(R) for a base ring R of characteristic p.
WittRingPtr display_witt_ring(ChainRingPtr R, int depth);
// W_{O,m}(R) for an O-algebra R of characteristic p; the display scalar is pi.
WittRingPtr display_witt_ring(ChainRingPtr R, const BaseDVR& O, int depth);

// P = W(R)^h with normal decomposition P = L + T.  Column i of the
// structural matrix is V^{-1}(l_i) for i < rank_L and F(t_{i - rank_L})
// after that, in the basis l_1..l_a, t_1..t_b.  The scalar FV is the
// uniformizer of W (p classically).
struct Display {
    WittRingPtr W;
    int rank_L = 0;
    int rank_T = 0;
    WMat structural;

    int h() const { return rank_L + rank_T; }
    int depth() const { return W->length(); }
    const ChainRing& base() const { return W->base(); }
};

Display make_display(WittRingPtr W, int rank_L, int rank_T, WMat structural);
// Unit determinant, char p base, and F(y) = scalar * V^{-1}(y) on random y in Q.
ValidationReport validate(const Display& d, int samples = 16, std::uint64_t seed = 7);

// F(x) = fsharp * Frob(x); V^sharp(x) = vsharp * x with values in
// W (x)_{F,W} P, coordinates taken in the basis 1 (x) b.
struct VSharpData {
    WMat fsharp;
    WMat vsharp;
    std::string twist = "F^# : W (x)_{F,W} P -> P and V^# : P -> W (x)_{F,W} P, both W-linear";
};
VSharpData v_sharp(const Display& d);

struct NilpotenceResult {
    bool nilpotent = false;
    int exponent = 0;  // least k with (V^#)^k = 0 modulo I_R + pW(R)
};
NilpotenceResult nilpotence_test(const Display& d);

// W_n(k) <-> W(k)/p^n for a perfect field k, x -> sum p^i [x_i^{p^{-i}}].
CElem witt_to_galois(const WittRing& W, const ChainRing& GR, const WVec& x);
WVec galois_to_witt(const WittRing& W, const ChainRing& GR, const CElem& y);

struct DisplayFromModule {
    Display display;
    PMat iso;  // columns: the display basis l's then t's, in the module's coordinates
};
// Requires a classical module (f = 1) over W(k)/p^n, k = F_{p^s}.
DisplayFromModule from_dieudonne(const DieudonneModule& D);
DieudonneModule to_dieudonne(const Display& d);

// Strictly increasing r-tuples of {0..h-1} with those avoiding h-1 first,
// each group in lexicographic order.  With one T vector (index h-1) this is
// the wedge^r L block followed by the wedge^{r-1} L ^ T block.
std::vector<std::vector<int>> display_wedge_basis(int h, int r);
// Compound matrix indexed by display_wedge_basis.
WMat display_compound(const WittRing& W, const WMat& m, int r);

Display exterior_power(const Display& d, int r);

struct IndependenceReport {
    int trials = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};
IndependenceReport decomposition_independence_check(const Display& d, int r, int trials, std::uint64_t seed = 1);

using RingHom = std::function<CElem(const CElem&)>;
// Prime field into anything, or k -> k[y]/y^n and k[y]/y^n -> k[y]/y^m (m <= n)
// with the same generator of k.  Throws for unsupported pairs.
RingHom ring_hom(const ChainRing& from, const ChainRing& to);
Display base_change(const Display& d, WittRingPtr target, const RingHom& hom);
Display base_change(const Display& d, ChainRingPtr target);

struct UniversalPropertyReport {
    std::uint64_t hom_count = 0;     // display morphisms wedge^2 d -> target
    std::uint64_t alt_count = 0;     // alternating bilinear morphisms d^2 -> target
    std::uint64_t alt_v_only = 0;    // without the F-conditions
    bool composition_bijective = false;
    bool identity_is_lambda = false;  // meaningful when target = wedge^2 d
    bool ok() const { return composition_bijective && hom_count == alt_count; }
};
// Depth-1 displays over the same field, r = 2.
UniversalPropertyReport universal_property_check(const Display& d, const Display& target,
                                                 std::uint64_t budget = std::uint64_t(1) << 22);

// Fixture displays.
Display multiplicative_display(WittRingPtr W);
Display etale_display(WittRingPtr W);
Display supersingular_display(WittRingPtr W);
Display zero_display(WittRingPtr W);

}  // namespace wittforge

#endif
