#include "qorbit/adjoint.hpp"

#include "qorbit/text.hpp"

namespace qorbit {

CartanData CartanData::A1() { return {1, {{2}}}; }
CartanData CartanData::A2() { return {2, {{2, -1}, {-1, 2}}}; }

AdjointInstance load_twisted_adjoint(const CartanData& cartan) {
    const int rank = cartan.rank;
    if (rank < 1) throw usage_error("rank must be positive");
    if (static_cast<int>(cartan.pairing.size()) != rank)
        throw usage_error("pairing matrix size mismatch");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(cartan.pairing[static_cast<std::size_t>(i)].size()) != rank)
            throw usage_error("pairing matrix size mismatch");
        for (int j = 0; j < rank; ++j)
            if (cartan.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                cartan.pairing[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                throw usage_error("pairing matrix must be symmetric");
    }
    if (rank > 2)
        throw usage_error("shipped instances cover ranks 1 and 2; larger ranks need "
                          "user-supplied Serre rewrite data");

    std::vector<std::string> vars{"v"};
    for (int i = 1; i <= rank; ++i) vars.push_back("l" + std::to_string(i));
    ParameterContext ctx = ParameterContext::make(vars);
    const Scalar one = Scalar::one(ctx);
    const Scalar zero = Scalar::zero(ctx);
    auto a = [&](int i, int j) {
        return cartan.pairing[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    };

    AdjointInstance inst;
    inst.cartan = cartan;

    // --- generators e_i, f_i, t_i, t_i^{-1}
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) {
        std::string n = std::to_string(i);
        names.push_back("e" + n);
        names.push_back("f" + n);
        names.push_back("t" + n);
        names.push_back("t" + n + "-");
    }
    auto E = [&](int i) { return 4 * (i - 1); };
    auto F = [&](int i) { return 4 * (i - 1) + 1; };
    auto T = [&](int i) { return 4 * (i - 1) + 2; };
    auto Ti = [&](int i) { return 4 * (i - 1) + 3; };

    using DT = GeneratorSet::DeltaTerm;
    std::vector<std::vector<DT>> delta(names.size());
    std::vector<Scalar> eps(names.size(), zero);
    for (int i = 1; i <= rank; ++i) {
        delta[static_cast<std::size_t>(E(i))] = {{{E(i)}, {}, one}, {{T(i)}, {E(i)}, one}};
        delta[static_cast<std::size_t>(F(i))] = {{{F(i)}, {Ti(i)}, one}, {{}, {F(i)}, one}};
        delta[static_cast<std::size_t>(T(i))] = {{{T(i)}, {T(i)}, one}};
        delta[static_cast<std::size_t>(Ti(i))] = {{{Ti(i)}, {Ti(i)}, one}};
        eps[static_cast<std::size_t>(T(i))] = one;
        eps[static_cast<std::size_t>(Ti(i))] = one;
    }
    GenSetPtr algebra = GeneratorSet::create(ctx, names, std::move(delta), std::move(eps));

    // --- the nilpotent algebra: cell letters e1..e_rank with the cubic
    // rewrite rules oriented on their deg-lex-largest words
    std::vector<std::string> cellnames;
    for (int i = 1; i <= rank; ++i) cellnames.push_back("e" + std::to_string(i));
    std::vector<CellAlgebra::Rule> rules;
    if (rank == 2) {
        const Scalar qq = Scalar::q_power(ctx, 1) + Scalar::q_power(ctx, -1);
        // e2 e1 e1 -> (q + q^-1) e1 e2 e1 - e1 e1 e2
        CellAlgebra::Rule r1;
        r1.lhs = {1, 0, 0};
        r1.rhs.emplace(Word{0, 1, 0}, qq);
        r1.rhs.emplace(Word{0, 0, 1}, -one);
        rules.push_back(std::move(r1));
        // e2 e2 e1 -> (q + q^-1) e2 e1 e2 - e1 e2 e2
        CellAlgebra::Rule r2;
        r2.lhs = {1, 1, 0};
        r2.rhs.emplace(Word{1, 0, 1}, qq);
        r2.rhs.emplace(Word{0, 1, 1}, -one);
        rules.push_back(std::move(r2));
    }
    CellPtr cell = CellAlgebra::create(ctx, cellnames, std::move(rules));

    // --- action table: xi(e_i).e_j = e_i e_j - q^<a_i,a_j> e_j e_i,
    // xi(f_i).e_j = delta_ij/(q - q^-1), xi(t_i^{+-1}).e_j = q^{+-<a_i,a_j>} e_j
    const Scalar hook_inv =
        (Scalar::q_power(ctx, 1) - Scalar::q_power(ctx, -1)).inverse();
    std::vector<std::vector<CPolynomial>> values(names.size());
    for (int i = 1; i <= rank; ++i) {
        for (int j = 1; j <= rank; ++j) {
            CPolynomial ej = CPolynomial::generator(cell, j - 1);
            CPolynomial ei = CPolynomial::generator(cell, i - 1);
            values[static_cast<std::size_t>(E(i))].push_back(
                ei * ej - (ej * ei).scaled(Scalar::q_power(ctx, a(i, j))));
            values[static_cast<std::size_t>(F(i))].push_back(
                i == j ? CPolynomial::constant(cell, hook_inv) : CPolynomial::zero(cell));
            values[static_cast<std::size_t>(T(i))].push_back(
                ej.scaled(Scalar::q_power(ctx, a(i, j))));
            values[static_cast<std::size_t>(Ti(i))].push_back(
                ej.scaled(Scalar::q_power(ctx, -a(i, j))));
        }
    }
    ActionPtr action = ActionTable::create(algebra, cell, std::move(values));

    // --- relations: Chevalley commutators, t conjugations (with the
    // dependent t^-1 versions for the strong coideal form), unit pairs,
    // Cartan commutativity, and the quantum Serre relations
    std::vector<FreeElement> relations;
    auto el = [&](std::initializer_list<std::pair<Word, Scalar>> ts) {
        FreeElement e(algebra);
        for (const auto& [w, c] : ts) e.add_term(w, c);
        return e;
    };
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            // [e_i, f_j] = delta_ij (t_i - t_i^-1)/(q - q^-1)
            FreeElement r = el({{{E(i), F(j)}, one}, {{F(j), E(i)}, -one}});
            if (i == j) {
                r.add_term({T(i)}, -hook_inv);
                r.add_term({Ti(i)}, hook_inv);
            }
            relations.push_back(std::move(r));
            relations.push_back(el({{{T(i), E(j)}, one},
                                    {{E(j), T(i)}, -Scalar::q_power(ctx, a(i, j))}}));
            relations.push_back(el({{{T(i), F(j)}, one},
                                    {{F(j), T(i)}, -Scalar::q_power(ctx, -a(i, j))}}));
            relations.push_back(el({{{Ti(i), E(j)}, one},
                                    {{E(j), Ti(i)}, -Scalar::q_power(ctx, -a(i, j))}}));
            relations.push_back(el({{{Ti(i), F(j)}, one},
                                    {{F(j), Ti(i)}, -Scalar::q_power(ctx, a(i, j))}}));
        }
    for (int i = 1; i <= rank; ++i) {
        relations.push_back(el({{{T(i), Ti(i)}, one}, {{}, -one}}));
        relations.push_back(el({{{Ti(i), T(i)}, one}, {{}, -one}}));
    }
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    int gi = si ? Ti(i) : T(i);
                    int gj = sj ? Ti(j) : T(j);
                    relations.push_back(el({{{gi, gj}, one}, {{gj, gi}, -one}}));
                }
    if (rank == 2) {
        const Scalar qq = Scalar::q_power(ctx, 1) + Scalar::q_power(ctx, -1);
        for (int i = 1; i <= 2; ++i) {
            int j = 3 - i;
            relations.push_back(el({{{E(i), E(i), E(j)}, one},
                                    {{E(i), E(j), E(i)}, -qq},
                                    {{E(j), E(i), E(i)}, one}}));
            relations.push_back(el({{{F(i), F(i), F(j)}, one},
                                    {{F(i), F(j), F(i)}, -qq},
                                    {{F(j), F(i), F(i)}, one}}));
        }
    }

    // --- the weight twist
    std::vector<CPolynomial> phivals(names.size(), CPolynomial::zero(cell));
    for (int i = 1; i <= rank; ++i) {
        Scalar li = Scalar::variable(ctx, "l" + std::to_string(i));
        phivals[static_cast<std::size_t>(E(i))] =
            CPolynomial::generator(cell, i - 1).scaled(one - li * li);
        phivals[static_cast<std::size_t>(T(i))] = CPolynomial::constant(cell, li);
        phivals[static_cast<std::size_t>(Ti(i))] = CPolynomial::constant(cell, li.inverse());
    }
    PhiPtr phi = PhiMap::create(action, std::move(phivals));

    inst.base.name = "adjoint-A" + std::to_string(rank);
    inst.base.ctx = ctx;
    inst.base.algebra = algebra;
    inst.base.cell = cell;
    inst.base.action = action;
    inst.base.phi = phi;
    inst.base.relations = std::move(relations);
    inst.base.closure = ideal_multiples(inst.base.relations, 3);
    inst.base.certificate = coideal_certificate(inst.base.relations, inst.base.closure);
    if (!inst.base.certificate.ok) {
        std::string w;
        for (const auto& c : inst.base.certificate.report.checks)
            if (!c.pass) {
                w = c.id + ": " + c.witness;
                break;
            }
        throw engine_error("adjoint load failed: no coideal certificate; " + w);
    }
    Report pr = check_phi_relations(*inst.base.phi, inst.base.relations, inst.base.certificate);
    pr.merge(check_phi_vanishes(*inst.base.phi, inst.base.closure.right, "phi-right-closure"));
    if (!pr.all_passed()) {
        std::string w;
        for (const auto& c : pr.checks)
            if (!c.pass) {
                w = c.id + ": " + c.witness;
                break;
            }
        throw engine_error("adjoint load failed: phi does not vanish on R': " + w);
    }
    return inst;
}

Instance adjoint_at_lambda(const AdjointInstance& formal, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != formal.cartan.rank)
        throw usage_error("expected one weight pairing per simple root");
    std::map<std::string, int> pin;
    for (int i = 1; i <= formal.cartan.rank; ++i)
        pin["l" + std::to_string(i)] =
            2 * formal.base.ctx.q_unit() * m[static_cast<std::size_t>(i - 1)];
    return formal.base.substituted(pin);
}

FreeElement antipode(const AdjointInstance& inst, const FreeElement& x) {
    const GenSetPtr& g = inst.base.algebra;
    const ParameterContext& ctx = inst.base.ctx;
    const int rank = inst.cartan.rank;
    std::vector<FreeElement> images(g->size(), FreeElement(g));
    for (int i = 1; i <= rank; ++i) {
        images[static_cast<std::size_t>(inst.e(i))] =
            FreeElement::word(g, {inst.ti(i), inst.e(i)}, -Scalar::one(ctx));
        images[static_cast<std::size_t>(inst.f(i))] =
            FreeElement::word(g, {inst.f(i), inst.t(i)}, -Scalar::one(ctx));
        images[static_cast<std::size_t>(inst.t(i))] = FreeElement::generator(g, inst.ti(i));
        images[static_cast<std::size_t>(inst.ti(i))] = FreeElement::generator(g, inst.t(i));
    }
    FreeElement out(g);
    for (const auto& [w, c] : x.terms()) {
        FreeElement acc = FreeElement::unit(g);
        for (std::size_t k = w.size(); k-- > 0;)
            acc = acc * images[static_cast<std::size_t>(w[k])];
        out = out + acc.scaled(c);
    }
    return out;
}

FreeElement adjoint_act(const AdjointInstance& inst, const FreeElement& x,
                        const FreeElement& y) {
    const GenSetPtr& g = inst.base.algebra;
    FreeElement out(g);
    for (const auto& [w, c] : x.terms()) {
        TensorElement dw = coproduct_word(g, w);
        for (const auto& [pair, k] : dw.terms()) {
            FreeElement mid =
                FreeElement::word(g, pair.first) * y *
                antipode(inst, FreeElement::word(g, pair.second));
            out = out + mid.scaled(c * k);
        }
    }
    return out;
}

FreeElement cancel_t_pairs(const AdjointInstance& inst, const FreeElement& x) {
    const GenSetPtr& g = inst.base.algebra;
    const int rank = inst.cartan.rank;
    auto partner = [&](int gen) -> int {
        for (int i = 1; i <= rank; ++i) {
            if (gen == inst.t(i)) return inst.ti(i);
            if (gen == inst.ti(i)) return inst.t(i);
        }
        return -1;
    };
    FreeElement out(g);
    for (const auto& [w0, c] : x.terms()) {
        Word w = w0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                int p = partner(w[i]);
                if (p >= 0 && w[i + 1] == p) {
                    w.erase(w.begin() + static_cast<long>(i),
                            w.begin() + static_cast<long>(i) + 2);
                    changed = true;
                    break;
                }
            }
        }
        out.add_term(w, c);
    }
    return out;
}

Report check_antipode_axiom(const AdjointInstance& inst) {
    Report rep;
    rep.suite = "antipode-axiom";
    const GenSetPtr& g = inst.base.algebra;
    for (std::size_t i = 0; i < g->size(); ++i) {
        FreeElement left(g), right(g);
        for (const auto& t : g->delta(i)) {
            left = left +
                   (FreeElement::word(g, t.left) * antipode(inst, FreeElement::word(g, t.right)))
                       .scaled(t.coeff);
            right = right +
                    (antipode(inst, FreeElement::word(g, t.left)) * FreeElement::word(g, t.right))
                        .scaled(t.coeff);
        }
        FreeElement expect = FreeElement::unit(g).scaled(g->eps(i));
        bool ok = cancel_t_pairs(inst, left) == expect && cancel_t_pairs(inst, right) == expect;
        rep.add("antipode." + g->name(i), "m (id (x) s) delta == eps, both sides", ok,
                ok ? "" : render_element(cancel_t_pairs(inst, left)));
    }
    return rep;
}

} // namespace qorbit
