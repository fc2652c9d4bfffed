#ifndef WITTFORGE_SEMILINEAR_HPP
#define WITTFORGE_SEMILINEAR_HPP

#include <optional>
#include <vector>

#include "wittforge/chain_ring.hpp"
#include "wittforge/coeff_ring.hpp"
#include "wittforge/matrix.hpp"

namespace wittforge {

using CMat = Mat<CElem>;
using PMat = Mat<PElem>;
using PVec = std::vector<PElem>;

// v -> A * sigma^twist(v)
struct SemilinearMap {
    PMat A;
    int twist = 0;
};

PMat mat_sigma(const CoeffRing& R, const PMat& m, int t);
PVec vec_sigma(const CoeffRing& R, const PVec& v, int t);
PVec sl_apply(const CoeffRing& R, const SemilinearMap& f, const PVec& v);
// (A,s) o (B,t) = (A sigma^s(B), s+t)
SemilinearMap sl_compose(const CoeffRing& R, const SemilinearMap& f, const SemilinearMap& g);
SemilinearMap sl_power(const CoeffRing& R, const SemilinearMap& f, int k);
SemilinearMap sl_exterior_power(const CoeffRing& R, const SemilinearMap& f, int r);
bool sl_eq(const CoeffRing& R, const SemilinearMap& f, const SemilinearMap& g);

// Components of a matrix over the product ring.
CMat component_matrix(const CoeffRing& R, const PMat& m, int i);
PMat assemble_components(const CoeffRing& R, const std::vector<CMat>& comps);

// U * A * V = D with D diagonal, diagonal entries exactly y^{v_i}.
struct SmithForm {
    CMat U, V, D;
    std::vector<int> diag;  // valuations, length min(rows, cols); n for zero
};
SmithForm smith_form(const ChainRing& R, const CMat& A);
std::vector<int> elementary_divisors(const ChainRing& R, const CMat& A);
int coker_length(const ChainRing& R, const CMat& A);
int ker_length(const ChainRing& R, const CMat& A);
// Product-ring versions sum over components.
int coker_length(const CoeffRing& R, const PMat& A);
int ker_length(const CoeffRing& R, const PMat& A);

// Determinant by valuation-pivoted elimination.
CElem chain_det(const ChainRing& R, const CMat& A);
PElem prod_det(const CoeffRing& R, const PMat& A);
PMat prod_inverse(const CoeffRing& R, const PMat& A);

// Some x with A x = b, or nothing.
std::optional<std::vector<CElem>> chain_solve(const ChainRing& R, const CMat& A, const std::vector<CElem>& b);
// Some X with A X = B, solved column by column and componentwise.
std::optional<PMat> prod_solve(const CoeffRing& R, const PMat& A, const PMat& B);

// True iff f^bound = 0, f square over a product of fields (level 1).
bool twisted_nilpotency(const CoeffRing& R, const SemilinearMap& f, int bound);

PMat pmat_from_strings(const CoeffRing& R, const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> pmat_to_strings(const CoeffRing& R, const PMat& m);
PMat pmat_reduce(const CoeffRing& from, const CoeffRing& to, const PMat& m);

}  // namespace wittforge

#endif
