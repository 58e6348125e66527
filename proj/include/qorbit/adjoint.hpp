#pragma once

#include "qorbit/instance.hpp"

namespace qorbit {

/// Symmetrized Cartan pairing and a weight given through its pairings with
/// the simple roots; the weight stays formal via parameters l_i = q^<la,a_i>.
struct CartanData {
    int rank = 0;
    std::vector<std::vector<int>> pairing;  // <a_i, a_j>, symmetric
    static CartanData A1();
    static CartanData A2();
};

/// Chevalley-style generators e_i, f_i, t_i, t_i^{-1} acting on the
/// nilpotent algebra generated by the e_i (the module algebra of this
/// instance), with the weight-twisted map
/// phi(e_i) = (1 - q^{2<la,a_i>}) e_i, phi(f_i) = 0, phi(t_i) = q^{<la,a_i>}.
struct AdjointInstance {
    Instance base;
    CartanData cartan;

    int e(int i) const { return 4 * (i - 1); }      // 1-based root index
    int f(int i) const { return 4 * (i - 1) + 1; }
    int t(int i) const { return 4 * (i - 1) + 2; }
    int ti(int i) const { return 4 * (i - 1) + 3; }
};

AdjointInstance load_twisted_adjoint(const CartanData& cartan);

// weight pinned to integers: l_i := q^{m_i}
Instance adjoint_at_lambda(const AdjointInstance& formal, const std::vector<int>& m);

// anti-multiplicative extension of s(e_i) = -t_i^-1 e_i, s(f_i) = -f_i t_i,
// s(t_i) = t_i^-1
FreeElement antipode(const AdjointInstance& inst, const FreeElement& x);

// ad_x y = x(1) y s(x(2)), at the free-algebra level
FreeElement adjoint_act(const AdjointInstance& inst, const FreeElement& x,
                        const FreeElement& y);

// reduction by the t t^-1 = 1 relations (adjacent inverse-pair cancellation)
FreeElement cancel_t_pairs(const AdjointInstance& inst, const FreeElement& x);

// m (id (x) s) delta(g) == eps(g) 1 and m (s (x) id) delta(g) == eps(g) 1
// for every generator, after t-pair cancellation
Report check_antipode_axiom(const AdjointInstance& inst);

} // namespace qorbit
