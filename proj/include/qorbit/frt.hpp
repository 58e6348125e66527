#pragma once

#include "qorbit/instance.hpp"
#include "qorbit/rmatrix.hpp"

namespace qorbit {

// N x N matrix over the cell algebra
using CellMatrix = std::vector<std::vector<CPolynomial>>;

CellMatrix cell_identity(const CellPtr& cell, int N);
CellMatrix cell_mul(const CellMatrix& a, const CellMatrix& b);
bool cell_equal(const CellMatrix& a, const CellMatrix& b);

// the stored unitriangular coordinate matrix: units on the diagonal, zeros
// below, generator z_{jk} at entry (j,k) for j < k (row-major generator order)
CellMatrix unipotent_upper(const CellPtr& cell, int N);
// its Hermitian-adjoint layout (z_{jk} at entry (k,j)); this is the form the
// action and twist formulas consume
CellMatrix unipotent_lower(const CellPtr& cell, int N);

// (I + N)^-1 = sum (-N)^k for strictly triangular N, with matrix products in
// fixed left-to-right order; the result is verified to be a two-sided
// inverse exactly and the call throws otherwise
CellMatrix invert_unipotent(const CellMatrix& Z);

/// FRT data for the A-series at a given N: triangular L+/L- generators with
/// the relation families R12 L2 L1 = L1 L2 R12 (entrywise), inverse-diagonal
/// and determinant relations, the quantized cell extracted from the exact
/// reflection-style relation on Z*, the action, and the twist with a formal
/// diagonal D of determinant one.
struct FrtInstance {
    Instance base;
    int N = 0;
    StructureSet structure;                  // over the instance context
    std::vector<std::string> dnames;         // d1..dN (dN eliminated)

    int lplus(int i, int j) const;   // generator index of L+_{ij}, 1-based, i <= j
    int lminus(int i, int j) const;  // generator index of L-_{ij}, 1-based, i >= j
};

// q_unit large enough to represent the fractional weight-lattice powers
int frt_q_unit(int N);

FrtInstance load_frt(int N);

// phi on the four quadratic families against their closed matrix forms,
// then the relation residuals
Report verify_quadratic_phi(const FrtInstance& inst);

// D realizing the lowest weight -(n_1 w_1 + ... + n_{N-1} w_{N-1}); returns
// the v-exponent of each d_j
std::vector<int> weight_exponents(int N, const std::vector<int>& weights);

CyclicSubmodule build_frt_rep(const FrtInstance& formal, const std::vector<int>& weights,
                              int dim_cutoff = 64);

// instance pinned at the diagonal matrix for the given weights
Instance frt_at_weights(const FrtInstance& formal, const std::vector<int>& weights);

} // namespace qorbit
