#pragma once

#include "qorbit/matrix.hpp"
#include "qorbit/report.hpp"

namespace qorbit {

/// R together with the derived matrices: the flip P, K from
/// R12 - R21^-1 = (q - q^-1)(P - K12), and Q = diag(R).  Indices follow the
/// lexicographic pair convention: (j,k) -> row N(j-1) + (k-1).
struct StructureSet {
    int n = 0;  // matrices are n^2 x n^2
    Matrix R;
    Matrix P;
    Matrix K;
    Matrix Q;
};

// the standard A-series solution on C^N (x) C^N:
//   R = q sum E_ii (x) E_ii + sum_{i != k} E_ii (x) E_kk
//       + (q - q^-1) sum_{i > k} E_ik (x) E_ki
StructureSet build_a_series(const ParameterContext& ctx, int N);

// derives P, K, Q from a given R
StructureSet derive_structure(const ParameterContext& ctx, int N, Matrix R);

// K_{jk,st} = (C^t)_{jk} (C^-1)_{st} from an explicit C matrix
Matrix k_from_c(const Matrix& C);

// R12 R13 R23 == R23 R13 R12 on the three-fold space
Report ybe_check(const Matrix& R);

// lower triangularity in the pair order and R_{jk,jt} = 0 for k != t
Report triangularity_check(const Matrix& R);

// R12 - R21^-1 == (q - q^-1)(P - K12)
Report k_reconstruction_check(const StructureSet& s);

// K12 R31^-1 == K12 R32, K12 R23^-1 == K12 R13, K12 Q13 Q23 == K12,
// R12 Q13 Q23 == Q13 Q23 R12, plus the diagonal-commutation implication:
// any diagonal D with K12 D1 D2 = K12 satisfies R12 D1 D2 = D1 D2 R12
// (checked with fully formal d_1..d_N, constrained when K != 0)
Report k_identities_check(const StructureSet& s);

Report q_symmetry_check(const StructureSet& s);  // Q12 == Q21, Q == diag(R)

// runs the complete identity suite on a structure set
Report structure_suite(const StructureSet& s);

} // namespace qorbit
