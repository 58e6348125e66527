#pragma once

#include "qorbit/action.hpp"

namespace qorbit {

/// Multiplicative twist of the module action: generator values in the cell
/// algebra, extended to all words by the inductive rule
///   phi(x y) = (xi_{x(1)} . phi(y)) phi(x(2)),  phi(1) = 1,
/// peeling one generator from the left.  The extension is unique and
/// association-independent; check_well_defined verifies that on samples.
/// The memo is confined to one evaluation session per the concurrency
/// contract; substitution builds a fresh map with an empty memo.
class PhiMap {
public:
    static std::shared_ptr<const PhiMap> create(ActionPtr action,
                                                std::vector<CPolynomial> generator_values);

    const ActionPtr& action() const { return action_; }
    const GenSetPtr& algebra() const { return action_->algebra(); }
    const CellPtr& cell() const { return action_->cell(); }
    const CPolynomial& generator_value(int i) const {
        return values_[static_cast<std::size_t>(i)];
    }

    CPolynomial value(const Word& w) const;
    CPolynomial value(const FreeElement& x) const;

    std::shared_ptr<const PhiMap> substituted(const ActionPtr& action2,
                                              const Substitution& sub) const;

private:
    PhiMap() = default;
    ActionPtr action_;
    std::vector<CPolynomial> values_;
    mutable std::map<Word, CPolynomial, DegLex> memo_;
};

using PhiPtr = std::shared_ptr<const PhiMap>;

/// Evaluates phi on every relation; exact zero is required.  Refuses to run
/// without a successful coideal certificate: without it a vanishing phi
/// would not prove factorization through the quotient.
Report check_phi_relations(const PhiMap& phi, const std::vector<FreeElement>& relations,
                           const CoidealCertificate& certificate);

// phi must vanish on every element; used on right-closure multiples, where
// a certificate with right factors beyond plain left-multiples needs the
// vanishing verified explicitly
Report check_phi_vanishes(const PhiMap& phi, const std::vector<FreeElement>& elements,
                          const std::string& suite);

// phi(w) computed whole vs. through every split w = u v of the inductive
// rule with full coproducts; exercises association independence
Report check_phi_well_defined(const PhiMap& phi, const std::vector<Word>& words);

/// The deformed left action x . f = (xi_{x(1)} . f) phi(x(2)), evaluated
/// with the full coproduct of each word (not by composition, so the module
/// law stays a meaningful check).
class TwistedAction {
public:
    explicit TwistedAction(PhiPtr phi) : phi_(std::move(phi)) {}

    const PhiMap& phi() const { return *phi_; }
    const GenSetPtr& algebra() const { return phi_->algebra(); }
    const CellPtr& cell() const { return phi_->cell(); }

    CPolynomial act_word(const Word& w, const CPolynomial& f) const;
    CPolynomial act(const FreeElement& x, const CPolynomial& f) const;

private:
    PhiPtr phi_;
};

struct TwistedLawSample {
    Word x, y;
    CPolynomial f;
};

// x.(y.f) == (xy).f, plus r.f == 0 for every relation r
Report check_twisted_module_law(const TwistedAction& action,
                                const std::vector<TwistedLawSample>& samples,
                                const std::vector<FreeElement>& relations,
                                const std::vector<CPolynomial>& probes);

struct TwistedLeibnizSample {
    Word x;
    CPolynomial f, g;
};

// x.(f g) == sum (xi_{x(1)} . f)(x(2) . g)
Report check_generalized_leibniz(const TwistedAction& action,
                                 const std::vector<TwistedLeibnizSample>& samples);

// x.1 == phi(x) on the given words
Report check_unit_value(const TwistedAction& action, const std::vector<Word>& words);

} // namespace qorbit
