#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qorbit/report.hpp"
#include "qorbit/scalar.hpp"
#include "qorbit/words.hpp"

namespace qorbit {

class CPolynomial;

/// The module algebra as an ordered-monomial rewriting system.  Rules send a
/// left-hand word to a combination of strictly deg-lex-smaller words, which
/// is the termination witness; a step budget guards rule sets loaded from
/// files.  Confluence is established empirically by confluence_probe.
class CellAlgebra : public std::enable_shared_from_this<CellAlgebra> {
public:
    struct Rule {
        Word lhs;
        std::map<Word, Scalar, DegLex> rhs;
    };

    static std::shared_ptr<const CellAlgebra> create(ParameterContext ctx,
                                                     std::vector<std::string> names,
                                                     std::vector<Rule> rules);

    const ParameterContext& context() const { return ctx_; }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;
    const std::vector<Rule>& rules() const { return rules_; }

    std::shared_ptr<const CellAlgebra> substituted(const Substitution& sub) const;

    enum class Strategy { Leftmost, Rightmost };

    // fixed point of rewriting; idempotent by construction
    std::map<Word, Scalar, DegLex> normalize(std::map<Word, Scalar, DegLex> terms,
                                             Strategy strategy = Strategy::Leftmost) const;

    bool is_normal(const Word& w) const;

private:
    CellAlgebra() = default;
    ParameterContext ctx_;
    std::vector<std::string> names_;
    std::vector<Rule> rules_;

    // returns matched rule index or -1
    int match_at(const Word& w, std::size_t pos) const;
};

using CellPtr = std::shared_ptr<const CellAlgebra>;

/// Normal-form element of the cell algebra with fraction-field coefficients.
class CPolynomial {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    CPolynomial() = default;
    explicit CPolynomial(CellPtr cell) : cell_(std::move(cell)) {}

    static CPolynomial zero(const CellPtr& c) { return CPolynomial(c); }
    static CPolynomial one(const CellPtr& c);
    static CPolynomial constant(const CellPtr& c, Scalar s);
    static CPolynomial generator(const CellPtr& c, int index);
    static CPolynomial monomial(const CellPtr& c, Word w, Scalar coeff);  // normalizes

    const CellPtr& cell() const { return cell_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }

    CPolynomial operator-() const;
    CPolynomial operator+(const CPolynomial& o) const;
    CPolynomial operator-(const CPolynomial& o) const;
    CPolynomial operator*(const CPolynomial& o) const;  // concatenate + normalize
    CPolynomial scaled(const Scalar& c) const;

    bool operator==(const CPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const CPolynomial& o) const { return !(*this == o); }

    CPolynomial substituted(const CellPtr& target_cell, const Substitution& sub) const;

    std::string render() const;

private:
    CellPtr cell_;
    Terms terms_;
    friend class CellAlgebra;
    static CPolynomial from_raw(const CellPtr& c, std::map<Word, Scalar, DegLex> raw);
};

// rewrites every word up to max_degree along leftmost and rightmost
// strategies and reports any normal-form disagreement
Report confluence_probe(const CellPtr& cell, int max_degree);

} // namespace qorbit
