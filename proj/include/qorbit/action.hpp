#pragma once

#include "qorbit/cell_algebra.hpp"
#include "qorbit/free_algebra.hpp"

namespace qorbit {

/// The left action of the free algebra on the cell algebra.  Generator
/// values on cell generators are given; words act by right-to-left operator
/// composition and single generators extend to monomials through the
/// Leibniz rule driven by the coproduct table.  The unit always acts by the
/// counit value: xi_x . 1 = eps(x) 1.
class ActionTable {
public:
    static std::shared_ptr<const ActionTable> create(
        GenSetPtr algebra, CellPtr cell,
        std::vector<std::vector<CPolynomial>> values);  // [algebra gen][cell gen]

    const GenSetPtr& algebra() const { return algebra_; }
    const CellPtr& cell() const { return cell_; }
    const CPolynomial& value(int algebra_gen, int cell_gen) const;

    CPolynomial act_generator(int algebra_gen, const CPolynomial& f) const;
    CPolynomial act_word(const Word& w, const CPolynomial& f) const;
    CPolynomial act(const FreeElement& x, const CPolynomial& f) const;

    std::shared_ptr<const ActionTable> substituted(const GenSetPtr& algebra2,
                                                   const CellPtr& cell2,
                                                   const Substitution& sub) const;

private:
    ActionTable() = default;
    GenSetPtr algebra_;
    CellPtr cell_;
    std::vector<std::vector<CPolynomial>> values_;

    CPolynomial act_on_monomial(int algebra_gen, const Word& mono) const;
};

using ActionPtr = std::shared_ptr<const ActionTable>;

struct ModuleLawSample {
    Word x, y;
    CPolynomial f;
};

// xi_x (xi_y f) == xi_{xy} f
Report check_module_law(const ActionTable& action, const std::vector<ModuleLawSample>& samples);

// xi_r f == 0 for every relation r and probe f
Report check_relations_kill(const ActionTable& action, const std::vector<FreeElement>& relations,
                            const std::vector<CPolynomial>& probes);

struct LeibnizSample {
    int algebra_gen;
    CPolynomial f, g;
};

// xi_x (f g) == sum (xi_{x(1)} f)(xi_{x(2)} g)
Report check_leibniz(const ActionTable& action, const std::vector<LeibnizSample>& samples);

} // namespace qorbit
