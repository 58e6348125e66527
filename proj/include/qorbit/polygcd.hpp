#pragma once

#include <map>

#include "qorbit/context.hpp"

namespace qorbit {

// Raw term maps (exponent vector -> rational), detached from any context.
// Used for gcd/division on ordinary (non-negative exponent) polynomials.
using TermMap = std::map<ExpVec, Rational>;

TermMap poly_mul(const TermMap& a, const TermMap& b);
TermMap poly_sub(const TermMap& a, const TermMap& b);

// Exact division a / b; throws engine_error when b does not divide a.
TermMap poly_exact_div(const TermMap& a, const TermMap& b);

// gcd over Q[x1..xk] by primitive pseudo-remainder sequences, canonical up
// to the chosen normalization: lex-leading coefficient 1, per-variable
// minimum exponent 0.  Rational coefficients make all constants units.
TermMap poly_gcd(TermMap a, TermMap b);

} // namespace qorbit
