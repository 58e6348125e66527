#include "qorbit/sl2.hpp"

namespace qorbit {

Instance Instance::substituted(const std::map<std::string, int>& v_powers) const {
    ParameterContext target = ParameterContext::make({ctx.var(0)}, ctx.q_unit());
    Substitution sub = Substitution::pin(ctx, target, v_powers);
    Instance out;
    out.name = name;
    out.ctx = target;
    out.algebra = substitute_generators(algebra, sub);
    out.cell = cell->substituted(sub);
    out.action = action->substituted(out.algebra, out.cell, sub);
    out.phi = phi->substituted(out.action, sub);
    for (const auto& r : relations)
        out.relations.push_back(substitute_element(r, out.algebra, sub));
    for (const auto& r : closure.left)
        out.closure.left.push_back(substitute_element(r, out.algebra, sub));
    for (const auto& r : closure.right)
        out.closure.right.push_back(substitute_element(r, out.algebra, sub));
    out.certificate = coideal_certificate(out.relations, out.closure);
    if (!out.certificate.ok)
        throw engine_error("substituted relation set lost its coideal certificate");
    return out;
}

GenSetPtr substitute_generators(const GenSetPtr& g, const Substitution& sub) {
    std::vector<std::vector<GeneratorSet::DeltaTerm>> delta;
    std::vector<Scalar> eps;
    for (std::size_t i = 0; i < g->size(); ++i) {
        std::vector<GeneratorSet::DeltaTerm> row;
        for (const auto& t : g->delta(i))
            row.push_back({t.left, t.right, t.coeff.substituted(sub)});
        delta.push_back(std::move(row));
        eps.push_back(g->eps(i).substituted(sub));
    }
    return GeneratorSet::create(sub.target, g->names(), std::move(delta), std::move(eps));
}

FreeElement substitute_element(const FreeElement& x, const GenSetPtr& target,
                               const Substitution& sub) {
    FreeElement out(target);
    for (const auto& [w, c] : x.terms()) out.add_term(w, c.substituted(sub));
    return out;
}

namespace sl2 {

Scalar sigma_qnum(const ParameterContext& ctx) {
    LaurentScalar num = LaurentScalar::variable(ctx, "s", 2) -
                        LaurentScalar::variable(ctx, "s", -2);
    LaurentScalar den = LaurentScalar::q_power(ctx, 1) - LaurentScalar::q_power(ctx, -1);
    return Scalar(std::move(num), std::move(den));
}

Instance load() {
    ParameterContext ctx = ParameterContext::make({"v", "s"});
    const Scalar one = Scalar::one(ctx);
    const Scalar zero = Scalar::zero(ctx);
    const Scalar q = Scalar::q_power(ctx, 1);
    const Scalar qi = Scalar::q_power(ctx, -1);

    using DT = GeneratorSet::DeltaTerm;
    std::vector<std::vector<DT>> delta(4);
    delta[kQHp] = {{{kQHp}, {kQHp}, one}};
    delta[kQHm] = {{{kQHm}, {kQHm}, one}};
    delta[kXp] = {{{kXp}, {kQHm}, one}, {{kQHp}, {kXp}, one}};
    delta[kXm] = {{{kXm}, {kQHm}, one}, {{kQHp}, {kXm}, one}};
    std::vector<Scalar> eps = {one, one, zero, zero};
    GenSetPtr algebra = GeneratorSet::create(
        ctx, {"qH+", "qH-", "X+", "X-"}, std::move(delta), std::move(eps));

    CellPtr cell = CellAlgebra::create(ctx, {"zb"}, {});
    const CPolynomial zb = CPolynomial::generator(cell, 0);

    // xi(q^{+-H/2}).zb = q^{+-1} zb, xi(X+).zb = zb^2, xi(X-).zb = -1
    std::vector<std::vector<CPolynomial>> values(4);
    values[kQHp] = {zb.scaled(q)};
    values[kQHm] = {zb.scaled(qi)};
    values[kXp] = {zb * zb};
    values[kXm] = {CPolynomial::constant(cell, -one)};
    ActionPtr action = ActionTable::create(algebra, cell, std::move(values));

    // phi(q^{+-H/2}) = q^{-+sigma/2} 1, phi(X+) = -q^{-sigma/2}[sigma] zb,
    // phi(X-) = 0, with s = q^{sigma/2}
    const Scalar s = Scalar::variable(ctx, "s");
    const Scalar si = Scalar::variable(ctx, "s", -1);
    std::vector<CPolynomial> phivals = {
        CPolynomial::constant(cell, si),
        CPolynomial::constant(cell, s),
        zb.scaled(-(si * sigma_qnum(ctx))),
        CPolynomial::zero(cell),
    };
    PhiPtr phi = PhiMap::create(action, std::move(phivals));

    // R': defining relations plus the two dependent X^{+-} qH- relations,
    // which carry the strong coideal property
    auto W = [&](std::initializer_list<int> gs) { return Word(gs); };
    auto el = [&](std::initializer_list<std::pair<Word, Scalar>> ts) {
        FreeElement e(algebra);
        for (const auto& [w, c] : ts) e.add_term(w, c);
        return e;
    };
    const Scalar hook_inv = (q - qi).inverse();
    std::vector<FreeElement> relations;
    relations.push_back(el({{W({kQHp, kQHm}), one}, {W({}), -one}}));
    relations.push_back(el({{W({kQHm, kQHp}), one}, {W({}), -one}}));
    relations.push_back(el({{W({kQHp, kXp}), one}, {W({kXp, kQHp}), -q}}));
    relations.push_back(el({{W({kQHp, kXm}), one}, {W({kXm, kQHp}), -qi}}));
    relations.push_back(el({{W({kXp, kXm}), one},
                            {W({kXm, kXp}), -one},
                            {W({kQHp, kQHp}), -hook_inv},
                            {W({kQHm, kQHm}), hook_inv}}));
    relations.push_back(el({{W({kXp, kQHm}), one}, {W({kQHm, kXp}), -q}}));
    relations.push_back(el({{W({kXm, kQHm}), one}, {W({kQHm, kXm}), -qi}}));

    Instance inst;
    inst.name = "sl2";
    inst.ctx = ctx;
    inst.algebra = algebra;
    inst.cell = cell;
    inst.action = action;
    inst.phi = phi;
    inst.relations = std::move(relations);
    inst.closure = ClosurePair{inst.relations, inst.relations};
    inst.certificate = coideal_certificate(inst.relations, inst.closure);
    if (!inst.certificate.ok)
        throw engine_error("sl2 load failed: no coideal certificate; first failure: " +
                           [&] {
                               for (const auto& c : inst.certificate.report.checks)
                                   if (!c.pass) return c.witness;
                               return std::string();
                           }());
    Report pr = check_phi_relations(*inst.phi, inst.relations, inst.certificate);
    if (!pr.all_passed()) {
        std::string w;
        for (const auto& c : pr.checks)
            if (!c.pass) {
                w = c.witness;
                break;
            }
        throw engine_error("sl2 load failed: phi does not vanish on R': " + w);
    }
    return inst;
}

Instance at_sigma(const Instance& formal, int sigma) {
    return formal.substituted({{"s", sigma * formal.ctx.q_unit()}});
}

Report verify_closed_forms(const Instance& formal, int n_max) {
    Report rep;
    rep.suite = "sl2-closed-forms";
    const ParameterContext& ctx = formal.ctx;
    const CellPtr& cell = formal.cell;
    TwistedAction tw = formal.twisted();
    const Scalar s = Scalar::variable(ctx, "s");
    const Scalar si = s.inverse();

    for (int n = 0; n <= n_max; ++n) {
        CPolynomial zn = CPolynomial::monomial(cell, Word(static_cast<std::size_t>(n), 0),
                                               Scalar::one(ctx));
        struct Case {
            int gen;
            CPolynomial expect;
            const char* label;
        };
        CPolynomial up = CPolynomial::monomial(cell, Word(static_cast<std::size_t>(n + 1), 0),
                                               si * qnum_shifted(ctx, n, "s"));
        CPolynomial down =
            n == 0 ? CPolynomial::zero(cell)
                   : CPolynomial::monomial(cell, Word(static_cast<std::size_t>(n - 1), 0),
                                           -(s * Scalar(qnum(ctx, n))));
        std::vector<Case> cases = {
            {kQHp, zn.scaled(si * Scalar::q_power(ctx, n)), "qH+"},
            {kQHm, zn.scaled(s * Scalar::q_power(ctx, -n)), "qH-"},
            {kXp, up, "X+"},
            {kXm, down, "X-"},
        };
        for (const auto& c : cases) {
            CPolynomial got = tw.act_word(Word{c.gen}, zn);
            bool ok = got == c.expect;
            rep.add(std::string("closed-form.") + c.label + ".n" + std::to_string(n),
                    "twisted action on zb^n matches the closed form", ok,
                    ok ? "" : got.render() + " vs " + c.expect.render());
        }
    }
    return rep;
}

CyclicSubmodule build_rep(const Instance& formal, int sigma, int dim_cutoff) {
    if (sigma < 0) throw usage_error("sigma must be a nonnegative integer");
    Instance pinned = at_sigma(formal, sigma);
    return build_cyclic_submodule(pinned.twisted(), dim_cutoff);
}

} // namespace sl2

} // namespace qorbit
