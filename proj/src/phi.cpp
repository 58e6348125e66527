#include "qorbit/phi.hpp"

#include "qorbit/text.hpp"

namespace qorbit {

std::shared_ptr<const PhiMap> PhiMap::create(ActionPtr action,
                                             std::vector<CPolynomial> generator_values) {
    if (generator_values.size() != action->algebra()->size())
        throw usage_error("phi needs a value for every generator");
    auto p = std::shared_ptr<PhiMap>(new PhiMap());
    p->action_ = std::move(action);
    p->values_ = std::move(generator_values);
    return p;
}

CPolynomial PhiMap::value(const Word& w) const {
    const CellPtr& cell = action_->cell();
    if (w.empty()) return CPolynomial::one(cell);
    if (w.size() == 1) return values_[static_cast<std::size_t>(w[0])];
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    const int head = w[0];
    const Word tail(w.begin() + 1, w.end());
    const CPolynomial phi_tail = value(tail);
    CPolynomial out = CPolynomial::zero(cell);
    for (const auto& t : algebra()->delta(static_cast<std::size_t>(head))) {
        CPolynomial left =
            t.left.empty() ? phi_tail : action_->act_generator(t.left[0], phi_tail);
        if (left.is_zero()) continue;
        CPolynomial right = t.right.empty() ? CPolynomial::one(cell)
                                            : values_[static_cast<std::size_t>(t.right[0])];
        out = out + (left * right).scaled(t.coeff);
    }
    memo_.emplace(w, out);
    return out;
}

CPolynomial PhiMap::value(const FreeElement& x) const {
    if (x.generators() != algebra())
        throw usage_error("element belongs to a different generator set");
    CPolynomial out = CPolynomial::zero(cell());
    for (const auto& [w, c] : x.terms()) out = out + value(w).scaled(c);
    return out;
}

std::shared_ptr<const PhiMap> PhiMap::substituted(const ActionPtr& action2,
                                                  const Substitution& sub) const {
    std::vector<CPolynomial> values;
    values.reserve(values_.size());
    for (const auto& v : values_) values.push_back(v.substituted(action2->cell(), sub));
    return create(action2, std::move(values));
}

Report check_phi_relations(const PhiMap& phi, const std::vector<FreeElement>& relations,
                           const CoidealCertificate& certificate) {
    if (!certificate.ok)
        throw usage_error(
            "phi-relation check refused: no coideal certificate for the relation set");
    Report rep;
    rep.suite = "phi-relations";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        CPolynomial v = phi.value(relations[i]);
        bool ok = v.is_zero();
        rep.add("phi-relations.r" + std::to_string(i), "phi(r) == 0", ok,
                ok ? "" : "phi(" + render_element(relations[i]) + ") = " + v.render());
    }
    return rep;
}

Report check_phi_vanishes(const PhiMap& phi, const std::vector<FreeElement>& elements,
                          const std::string& suite) {
    Report rep;
    rep.suite = suite;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        CPolynomial v = phi.value(elements[i]);
        bool ok = v.is_zero();
        rep.add(suite + ".c" + std::to_string(i), "phi vanishes on the closure element", ok,
                ok ? "" : "phi(" + render_element(elements[i]) + ") = " + v.render());
    }
    return rep;
}

Report check_phi_well_defined(const PhiMap& phi, const std::vector<Word>& words) {
    Report rep;
    rep.suite = "phi-well-defined";
    const GenSetPtr& alg = phi.algebra();
    for (const auto& w : words) {
        if (w.size() < 2) continue;
        CPolynomial whole = phi.value(w);
        bool ok = true;
        std::string witness;
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
            const Word u(w.begin(), w.begin() + static_cast<long>(cut));
            const Word v(w.begin() + static_cast<long>(cut), w.end());
            CPolynomial phi_v = phi.value(v);
            CPolynomial split = CPolynomial::zero(phi.cell());
            TensorElement du = coproduct_word(alg, u);
            for (const auto& [pair, c] : du.terms()) {
                CPolynomial left = phi.action()->act_word(pair.first, phi_v);
                if (left.is_zero()) continue;
                split = split + (left * phi.value(pair.second)).scaled(c);
            }
            if (split != whole) {
                ok = false;
                witness = render_word(*alg, w) + " cut at " + std::to_string(cut);
                break;
            }
        }
        rep.add("phi-well-defined." + render_word(*alg, w),
                "phi(uv) == (xi_{u(1)} . phi(v)) phi(u(2)) for every split", ok, witness);
    }
    return rep;
}

CPolynomial TwistedAction::act_word(const Word& w, const CPolynomial& f) const {
    CPolynomial out = CPolynomial::zero(cell());
    TensorElement dw = coproduct_word(algebra(), w);
    for (const auto& [pair, c] : dw.terms()) {
        CPolynomial left = phi_->action()->act_word(pair.first, f);
        if (left.is_zero()) continue;
        CPolynomial right = phi_->value(pair.second);
        if (right.is_zero()) continue;
        out = out + (left * right).scaled(c);
    }
    return out;
}

CPolynomial TwistedAction::act(const FreeElement& x, const CPolynomial& f) const {
    if (x.generators() != algebra())
        throw usage_error("element belongs to a different generator set");
    CPolynomial out = CPolynomial::zero(cell());
    for (const auto& [w, c] : x.terms()) out = out + act_word(w, f).scaled(c);
    return out;
}

Report check_twisted_module_law(const TwistedAction& action,
                                const std::vector<TwistedLawSample>& samples,
                                const std::vector<FreeElement>& relations,
                                const std::vector<CPolynomial>& probes) {
    Report rep;
    rep.suite = "twisted-module-law";
    int idx = 0;
    for (const auto& s : samples) {
        CPolynomial nested = action.act_word(s.x, action.act_word(s.y, s.f));
        CPolynomial flat = action.act_word(concat(s.x, s.y), s.f);
        bool ok = nested == flat;
        rep.add("twisted-module-law." + std::to_string(idx++), "x.(y.f) == (xy).f", ok,
                ok ? "" : render_word(*action.algebra(), concat(s.x, s.y)) + " on " +
                              s.f.render());
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
        bool ok = true;
        std::string witness;
        for (const auto& f : probes) {
            CPolynomial r = action.act(relations[i], f);
            if (!r.is_zero()) {
                ok = false;
                witness = "r.(" + f.render() + ") = " + r.render();
                break;
            }
        }
        rep.add("twisted-module-law.rel" + std::to_string(i), "r.f == 0 on all probes", ok,
                witness);
    }
    return rep;
}

Report check_generalized_leibniz(const TwistedAction& action,
                                 const std::vector<TwistedLeibnizSample>& samples) {
    Report rep;
    rep.suite = "generalized-leibniz";
    int idx = 0;
    for (const auto& s : samples) {
        CPolynomial direct = action.act_word(s.x, s.f * s.g);
        CPolynomial sum = CPolynomial::zero(action.cell());
        TensorElement dx = coproduct_word(action.algebra(), s.x);
        for (const auto& [pair, c] : dx.terms()) {
            CPolynomial lf = action.phi().action()->act_word(pair.first, s.f);
            if (lf.is_zero()) continue;
            CPolynomial rg = action.act_word(pair.second, s.g);
            if (rg.is_zero()) continue;
            sum = sum + (lf * rg).scaled(c);
        }
        bool ok = direct == sum;
        rep.add("generalized-leibniz." + std::to_string(idx++),
                "x.(f g) == sum (xi_{x(1)} . f)(x(2) . g)", ok,
                ok ? "" : render_word(*action.algebra(), s.x) + " on " + s.f.render() +
                              " | " + s.g.render());
    }
    return rep;
}

Report check_unit_value(const TwistedAction& action, const std::vector<Word>& words) {
    Report rep;
    rep.suite = "unit-value";
    for (const auto& w : words) {
        CPolynomial via_action = action.act_word(w, CPolynomial::one(action.cell()));
        CPolynomial via_phi = action.phi().value(w);
        bool ok = via_action == via_phi;
        rep.add("unit-value." + render_word(*action.algebra(), w), "x.1 == phi(x)", ok,
                ok ? "" : via_action.render() + " vs " + via_phi.render());
    }
    return rep;
}

} // namespace qorbit
