#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qorbit/report.hpp"
#include "qorbit/scalar.hpp"
#include "qorbit/words.hpp"

namespace qorbit {

class FreeElement;
class TensorElement;

/// A declared generator set together with its comultiplication and counit
/// tables.  Every coproduct value must lie in span(M1 (x) M1) where
/// M1 = generators plus the unit, i.e. all tensor factor words have length
/// at most one; the counit axiom on generators is checked at creation.
class GeneratorSet : public std::enable_shared_from_this<GeneratorSet> {
public:
    struct DeltaTerm {
        Word left;   // length <= 1
        Word right;  // length <= 1
        Scalar coeff;
    };

    static std::shared_ptr<const GeneratorSet> create(
        ParameterContext ctx, std::vector<std::string> names,
        std::vector<std::vector<DeltaTerm>> delta, std::vector<Scalar> eps);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;
    const std::vector<DeltaTerm>& delta(std::size_t i) const { return delta_[i]; }
    const Scalar& eps(std::size_t i) const { return eps_[i]; }
    const ParameterContext& context() const { return ctx_; }

private:
    GeneratorSet() = default;
    ParameterContext ctx_;
    std::vector<std::string> names_;
    std::vector<std::vector<DeltaTerm>> delta_;
    std::vector<Scalar> eps_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

/// Finite linear combination of words of the free algebra on a generator
/// set.  Canonical: zero coefficients are never stored.
class FreeElement {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    FreeElement() = default;
    explicit FreeElement(GenSetPtr gens) : gens_(std::move(gens)) {}

    static FreeElement zero(const GenSetPtr& g) { return FreeElement(g); }
    static FreeElement unit(const GenSetPtr& g);
    static FreeElement word(const GenSetPtr& g, Word w, Scalar coeff);
    static FreeElement word(const GenSetPtr& g, Word w);
    static FreeElement generator(const GenSetPtr& g, int index);
    static FreeElement generator(const GenSetPtr& g, const std::string& name);

    const GenSetPtr& generators() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeElement operator-() const;
    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement operator*(const FreeElement& o) const;  // word concatenation
    FreeElement scaled(const Scalar& c) const;

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    // true when every word has the same length
    bool is_homogeneous() const;

    void add_term(const Word& w, const Scalar& c);

private:
    GenSetPtr gens_;
    Terms terms_;
};

/// Element of F (x) F; the comultiplication lands here.
class TensorElement {
public:
    using Terms = std::map<std::pair<Word, Word>, Scalar, PairDegLex>;

    TensorElement() = default;
    explicit TensorElement(GenSetPtr gens) : gens_(std::move(gens)) {}

    static TensorElement unit(const GenSetPtr& g);

    const GenSetPtr& generators() const { return gens_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  // (a(x)b)(c(x)d)=ac(x)bd
    TensorElement scaled(const Scalar& c) const;
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

    void add_term(const Word& l, const Word& r, const Scalar& c);

private:
    GenSetPtr gens_;
    Terms terms_;
};

/// Rank-3 tensor, only needed by the coassociativity check.
class Tensor3 {
public:
    using Terms = std::map<std::array<Word, 3>, Scalar, TripleDegLex>;
    Terms terms;
    void add_term(const std::array<Word, 3>& k, const Scalar& c);
    bool operator==(const Tensor3& o) const { return terms == o.terms; }
};

// multiplicative extension of the generator table; delta(1) = 1 (x) 1
TensorElement coproduct(const FreeElement& a);
TensorElement coproduct_word(const GenSetPtr& g, const Word& w);

// multiplicative-linear extension of the counit table
Scalar counit(const FreeElement& a);
Scalar counit_word(const GenSetPtr& g, const Word& w);

// (delta (x) id) delta vs (id (x) delta) delta on each word
Report check_coassociativity(const GenSetPtr& g, const std::vector<Word>& words);

// all words over g with length <= max_len (including the empty word)
std::vector<Word> all_words_up_to(const GenSetPtr& g, int max_len);

/// One resolved relation: delta(r) = sum_i coeff_i * closure[idx_i] (x) w_i
/// (side 0) + sum_j coeff_j * w_j (x) closure[idx_j] (side 1).
struct CertificateTerm {
    int side;  // 0: relation on the left, 1: relation on the right
    std::size_t closure_index;
    Word cofactor;
    Scalar coeff;
};

struct CoidealCertificate {
    bool ok = false;
    std::vector<std::vector<CertificateTerm>> terms;  // one list per relation
    Report report;
};

/// Solves delta(r) = sum r'_i (x) w_i + sum w_j (x) r'_j with r' in the span
/// of `closure` and word cofactors, for every r in `relations`.  Failure
/// means the relation set does not visibly satisfy the strong coideal
/// condition and construction must not proceed.
CoidealCertificate coideal_certificate(const std::vector<FreeElement>& relations,
                                       const std::vector<FreeElement>& closure);

/// Side-aware closure: left factors may be any two-sided ideal members,
/// right factors must lie in the left ideal (word times relation), which is
/// exactly what the factorization argument consumes.
struct ClosurePair {
    std::vector<FreeElement> left;
    std::vector<FreeElement> right;
};

// word-multiples u r v (left list) and u r (right list) up to total word
// length max_len; relation sets whose coproducts only close modulo the
// ideal (quantum Serre relations) certify against this enrichment
ClosurePair ideal_multiples(const std::vector<FreeElement>& relations, int max_len);

CoidealCertificate coideal_certificate(const std::vector<FreeElement>& relations,
                                       const ClosurePair& closure);

} // namespace qorbit
