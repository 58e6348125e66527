#pragma once

#include "qorbit/instance.hpp"

namespace qorbit {

// Generators qH+ = q^{H/2}, qH- = q^{-H/2}, X+, X- acting on the polynomial
// algebra in the single antiholomorphic cell coordinate zb.  The deformation
// weight sigma stays formal through the invertible parameter s = q^{sigma/2}.
namespace sl2 {

inline constexpr int kQHp = 0;
inline constexpr int kQHm = 1;
inline constexpr int kXp = 2;
inline constexpr int kXm = 3;

// formal sigma; verifies the coideal certificate and phi(R') = 0
Instance load();

// sigma pinned to an integer via s := v^sigma
Instance at_sigma(const Instance& formal, int sigma);

// [sigma] = (s^2 - s^-2)/(q - q^-1)
Scalar sigma_qnum(const ParameterContext& ctx);

// twisted action on zb^n for n <= n_max, all four generators, against the
// closed forms q^{-+(sigma-2n)/2} zb^n, q^{-sigma/2}[n-sigma] zb^{n+1},
// -q^{sigma/2}[n] zb^{n-1}
Report verify_closed_forms(const Instance& formal, int n_max);

// (sigma+1)-dimensional module for integral sigma >= 0
CyclicSubmodule build_rep(const Instance& formal, int sigma, int dim_cutoff = 64);

} // namespace sl2

} // namespace qorbit
