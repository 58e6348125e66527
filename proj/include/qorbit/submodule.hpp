#pragma once

#include "qorbit/linalg.hpp"
#include "qorbit/matrix.hpp"
#include "qorbit/phi.hpp"

namespace qorbit {

/// Matrices of the generator actions on an explicit basis of the cyclic
/// submodule generated by 1.  Matrices act on column coordinate vectors:
/// column j of M_g holds the coordinates of g . basis[j].
struct RepMatrixSet {
    GenSetPtr algebra;
    std::vector<Matrix> matrices;  // one per generator, generator order

    Matrix evaluate_word(const Word& w) const;
    Matrix evaluate(const FreeElement& x) const;
};

struct CyclicSubmodule {
    bool finite = false;
    int explored = 0;  // basis size reached before hitting the cutoff
    std::vector<CPolynomial> basis;
    RepMatrixSet rep;
};

// breadth-first closure of {1} under all generator actions with exact
// fraction-free row reduction; exceeding dim_cutoff sets finite = false
CyclicSubmodule build_cyclic_submodule(const TwistedAction& action, int dim_cutoff);

// every relation evaluates to the zero matrix
Report check_matrix_relations(const RepMatrixSet& rep,
                              const std::vector<FreeElement>& relations);

} // namespace qorbit
