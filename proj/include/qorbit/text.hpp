#pragma once

#include <string>

#include "qorbit/free_algebra.hpp"
#include "qorbit/scalar.hpp"

namespace qorbit {

// Canonical text form, e.g. "q^2 + 1 - 3*q^-1*s^2".  Exponents divisible by
// 2*q_unit on the base variable render as powers of q, the rest as powers
// of v.  Terms are ordered lex-descending on exponent vectors.
std::string render_laurent(const LaurentScalar& s);

// den == 1 renders like the ring; otherwise "(num)/(den)" without spaces.
std::string render_scalar(const Scalar& s);

// compact form used as a coefficient prefix; never contains whitespace
std::string render_coefficient(const Scalar& s);

std::string render_word(const GeneratorSet& gens, const Word& w);
std::string render_element(const FreeElement& a);

// monomial over arbitrary named letters with power grouping, '*'-separated
std::string render_monomial(const std::vector<std::string>& names, const Word& w);

// Inverse of render_scalar/render_coefficient (whitespace is ignored).
Scalar parse_scalar(const ParameterContext& ctx, const std::string& text);

// Whitespace-separated generator names form words; '+'/'-' join terms and a
// compact scalar prefix attaches through '*'.  Round-trips render_element.
FreeElement parse_element(const GenSetPtr& gens, const std::string& text);

} // namespace qorbit
