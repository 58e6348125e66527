#pragma once

#include "qorbit/cell_algebra.hpp"

namespace qorbit {

/// Echelon basis over cell monomials.  Rows are kept fraction-free: Laurent
/// ring coefficients with the polynomial content divided out after every
/// pseudo-reduction step, leading rational positive.  Coordinates are
/// extracted in the fraction field in a single pass.
class MonomialEchelon {
public:
    explicit MonomialEchelon(ParameterContext ctx) : ctx_(std::move(ctx)) {}

    // pseudo-reduces v against the basis; inserts the residual when it is
    // nonzero and returns the residual (empty optional when dependent)
    std::optional<CPolynomial> insert(const CPolynomial& v);

    // v in span?  On success fills coords keyed by row lead word.
    bool coordinates(const CPolynomial& v, std::map<Word, Scalar, DegLex>& coords) const;

    std::size_t size() const { return rows_.size(); }
    // lead words in ascending deg-lex order (the canonical basis order)
    std::vector<Word> leads() const;
    // fully back-reduced basis with unit leading coefficients
    std::vector<CPolynomial> reduced_basis(const CellPtr& cell) const;

private:
    using RingRow = std::map<Word, LaurentScalar, DegLex>;
    ParameterContext ctx_;
    std::map<Word, RingRow, DegLex> rows_;  // lead word -> row

    RingRow to_ring_row(const CPolynomial& v) const;
    void content_normalize(RingRow& r) const;
};

} // namespace qorbit
