#include "qorbit/action.hpp"

#include "qorbit/text.hpp"

namespace qorbit {

std::shared_ptr<const ActionTable> ActionTable::create(
    GenSetPtr algebra, CellPtr cell, std::vector<std::vector<CPolynomial>> values) {
    if (values.size() != algebra->size())
        throw usage_error("action table must cover every algebra generator");
    for (const auto& row : values)
        if (row.size() != cell->size())
            throw usage_error("action table must cover every cell generator");
    algebra->context().require_same(cell->context(), "ActionTable::create");
    auto t = std::shared_ptr<ActionTable>(new ActionTable());
    t->algebra_ = std::move(algebra);
    t->cell_ = std::move(cell);
    t->values_ = std::move(values);
    return t;
}

const CPolynomial& ActionTable::value(int algebra_gen, int cell_gen) const {
    return values_[static_cast<std::size_t>(algebra_gen)][static_cast<std::size_t>(cell_gen)];
}

CPolynomial ActionTable::act_on_monomial(int g, const Word& mono) const {
    if (mono.empty())
        return CPolynomial::constant(cell_, algebra_->eps(static_cast<std::size_t>(g)));
    if (mono.size() == 1) return value(g, mono[0]);

    const Word head{mono[0]};
    const Word tail(mono.begin() + 1, mono.end());
    CPolynomial out = CPolynomial::zero(cell_);
    for (const auto& t : algebra_->delta(static_cast<std::size_t>(g))) {
        CPolynomial left = t.left.empty() ? CPolynomial::generator(cell_, mono[0])
                                          : value(t.left[0], mono[0]);
        if (left.is_zero()) continue;
        CPolynomial right = t.right.empty()
                                ? CPolynomial::monomial(cell_, tail, Scalar::one(cell_->context()))
                                : act_on_monomial(t.right[0], tail);
        if (right.is_zero()) continue;
        out = out + (left * right).scaled(t.coeff);
    }
    return out;
}

CPolynomial ActionTable::act_generator(int g, const CPolynomial& f) const {
    CPolynomial out = CPolynomial::zero(cell_);
    for (const auto& [w, c] : f.terms()) out = out + act_on_monomial(g, w).scaled(c);
    return out;
}

CPolynomial ActionTable::act_word(const Word& w, const CPolynomial& f) const {
    CPolynomial acc = f;
    for (std::size_t i = w.size(); i-- > 0;) {
        acc = act_generator(w[i], acc);
        if (acc.is_zero()) break;
    }
    return acc;
}

CPolynomial ActionTable::act(const FreeElement& x, const CPolynomial& f) const {
    if (x.generators() != algebra_)
        throw usage_error("element belongs to a different generator set");
    CPolynomial out = CPolynomial::zero(cell_);
    for (const auto& [w, c] : x.terms()) out = out + act_word(w, f).scaled(c);
    return out;
}

std::shared_ptr<const ActionTable> ActionTable::substituted(const GenSetPtr& algebra2,
                                                            const CellPtr& cell2,
                                                            const Substitution& sub) const {
    std::vector<std::vector<CPolynomial>> values;
    values.reserve(values_.size());
    for (const auto& row : values_) {
        std::vector<CPolynomial> r2;
        r2.reserve(row.size());
        for (const auto& v : row) r2.push_back(v.substituted(cell2, sub));
        values.push_back(std::move(r2));
    }
    return create(algebra2, cell2, std::move(values));
}

Report check_module_law(const ActionTable& action, const std::vector<ModuleLawSample>& samples) {
    Report rep;
    rep.suite = "module-law";
    int idx = 0;
    for (const auto& s : samples) {
        CPolynomial nested = action.act_word(s.x, action.act_word(s.y, s.f));
        CPolynomial flat = action.act_word(concat(s.x, s.y), s.f);
        bool ok = nested == flat;
        rep.add("module-law." + std::to_string(idx++), "xi_x (xi_y f) == xi_{xy} f", ok,
                ok ? "" : render_word(*action.algebra(), concat(s.x, s.y)) + " on " +
                              s.f.render());
    }
    return rep;
}

Report check_relations_kill(const ActionTable& action, const std::vector<FreeElement>& relations,
                            const std::vector<CPolynomial>& probes) {
    Report rep;
    rep.suite = "relations-kill";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        bool ok = true;
        std::string witness;
        for (const auto& f : probes) {
            CPolynomial r = action.act(relations[i], f);
            if (!r.is_zero()) {
                ok = false;
                witness = "xi_r(" + f.render() + ") = " + r.render();
                break;
            }
        }
        rep.add("relations-kill.r" + std::to_string(i), "xi_r f == 0 on all probes", ok, witness);
    }
    return rep;
}

Report check_leibniz(const ActionTable& action, const std::vector<LeibnizSample>& samples) {
    Report rep;
    rep.suite = "leibniz";
    const GenSetPtr& alg = action.algebra();
    int idx = 0;
    for (const auto& s : samples) {
        CPolynomial direct = action.act_generator(s.algebra_gen, s.f * s.g);
        CPolynomial sum = CPolynomial::zero(action.cell());
        for (const auto& t : alg->delta(static_cast<std::size_t>(s.algebra_gen))) {
            CPolynomial lf = t.left.empty() ? s.f : action.act_generator(t.left[0], s.f);
            CPolynomial rg = t.right.empty() ? s.g : action.act_generator(t.right[0], s.g);
            sum = sum + (lf * rg).scaled(t.coeff);
        }
        bool ok = direct == sum;
        rep.add("leibniz." + std::to_string(idx++),
                "xi_x (f g) == sum (xi_{x(1)} f)(xi_{x(2)} g)", ok,
                ok ? "" : alg->name(static_cast<std::size_t>(s.algebra_gen)) + " on " +
                              s.f.render() + " | " + s.g.render());
    }
    return rep;
}

} // namespace qorbit
