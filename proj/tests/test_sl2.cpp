#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qorbit/sl2.hpp"
#include "qorbit/text.hpp"

using namespace qorbit;
using namespace qorbit::sl2;

namespace {

const Instance& inst() {
    static Instance i = load();
    return i;
}

CPolynomial zb_pow(const Instance& i, int n) {
    return CPolynomial::monomial(i.cell, Word(static_cast<std::size_t>(n), 0),
                                 Scalar::one(i.ctx));
}

} // namespace

TEST_CASE("load-time tables") {
    const Instance& i = inst();
    const Scalar s = Scalar::variable(i.ctx, "s");
    CHECK(i.phi->generator_value(kQHp) == CPolynomial::constant(i.cell, s.inverse()));
    CHECK(i.phi->generator_value(kQHm) == CPolynomial::constant(i.cell, s));
    CHECK(i.phi->generator_value(kXp) ==
          CPolynomial::generator(i.cell, 0).scaled(-(s.inverse() * sigma_qnum(i.ctx))));
    CHECK(i.phi->generator_value(kXm).is_zero());
    CHECK(i.algebra->eps(kXp).is_zero());
    CHECK(i.algebra->eps(kQHp).is_one());
    CHECK(i.certificate.ok);
}

TEST_CASE("base action") {
    const Instance& i = inst();
    CHECK(i.action->act_word({kXp}, zb_pow(i, 1)) == zb_pow(i, 2));
    CHECK(i.action->act_word({kQHp}, zb_pow(i, 3)) ==
          zb_pow(i, 3).scaled(Scalar::q_power(i.ctx, 3)));
    CHECK(i.action->act_word({kXm}, zb_pow(i, 0)).is_zero());
    // xi(X+).zb^n = [n] zb^{n+1}, xi(X-).zb^n = -[n] zb^{n-1}
    for (int n = 0; n <= 6; ++n) {
        CHECK(i.action->act_word({kXp}, zb_pow(i, n)) ==
              zb_pow(i, n + 1).scaled(Scalar(qnum(i.ctx, n))));
        if (n > 0)
            CHECK(i.action->act_word({kXm}, zb_pow(i, n)) ==
                  zb_pow(i, n - 1).scaled(-Scalar(qnum(i.ctx, n))));
    }
}

TEST_CASE("module law and relation kill for the base action") {
    const Instance& i = inst();
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 2), deg(0, 4);
    std::vector<ModuleLawSample> samples;
    for (int k = 0; k < 100; ++k) {
        Word x(static_cast<std::size_t>(len(rng))), y(static_cast<std::size_t>(len(rng)));
        for (auto& g : x) g = gen(rng);
        for (auto& g : y) g = gen(rng);
        samples.push_back({x, y, zb_pow(i, deg(rng))});
    }
    samples.push_back({{kXp}, {kXm}, zb_pow(i, 1)});
    samples.push_back({{}, {kQHm, kXp}, zb_pow(i, 2)});
    CHECK(check_module_law(*i.action, samples).all_passed());

    std::vector<CPolynomial> probes;
    for (int n = 0; n <= 5; ++n) probes.push_back(zb_pow(i, n));
    CHECK(check_relations_kill(*i.action, i.relations, probes).all_passed());
}

TEST_CASE("Leibniz consistency of the base action") {
    const Instance& i = inst();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> gen(0, 3), deg(0, 3);
    std::vector<LeibnizSample> samples;
    for (int k = 0; k < 60; ++k)
        samples.push_back({gen(rng), zb_pow(i, deg(rng)), zb_pow(i, deg(rng))});
    CHECK(check_leibniz(*i.action, samples).all_passed());
}

TEST_CASE("phi extension values") {
    const Instance& i = inst();
    const ParameterContext& ctx = i.ctx;
    CHECK(i.phi->value(Word{}) == CPolynomial::one(i.cell));

    // phi(X+ X+) = (-[sigma] + q q^{-sigma} [sigma]^2) zb^2
    Scalar sig = sigma_qnum(ctx);
    Scalar s2i = Scalar::variable(ctx, "s", -2);
    Scalar expect = -sig + Scalar::q_power(ctx, 1) * s2i * sig * sig;
    CHECK(i.phi->value(Word{kXp, kXp}) == zb_pow(i, 2).scaled(expect));

    // and it vanishes at sigma = 1
    Instance p1 = at_sigma(i, 1);
    CHECK(p1.phi->value(Word{kXp, kXp}).is_zero());

    // association independence on all words of length <= 4
    std::vector<Word> words;
    for (const auto& w : all_words_up_to(i.algebra, 4))
        if (w.size() >= 2) words.push_back(w);
    CHECK(check_phi_well_defined(*i.phi, words).all_passed());
}

TEST_CASE("phi relation check and negative control") {
    const Instance& i = inst();
    Report ok = check_phi_relations(*i.phi, i.relations, i.certificate);
    CHECK(ok.all_passed());

    // perturb phi(X-) to zb: must report nonzero
    std::vector<CPolynomial> vals;
    for (int g = 0; g < 4; ++g) vals.push_back(i.phi->generator_value(g));
    vals[kXm] = CPolynomial::generator(i.cell, 0);
    PhiPtr bad = PhiMap::create(i.action, vals);
    Report fail = check_phi_relations(*bad, i.relations, i.certificate);
    CHECK_FALSE(fail.all_passed());

    // refusal without a certificate
    CoidealCertificate none;
    CHECK_THROWS_AS(check_phi_relations(*i.phi, i.relations, none), usage_error);
}

TEST_CASE("twisted action closed forms") {
    const Instance& i = inst();
    CHECK(verify_closed_forms(i, 8).all_passed());
    TwistedAction tw = i.twisted();
    CHECK(tw.act_word({kXm}, CPolynomial::one(i.cell)).is_zero());
    CHECK(check_unit_value(tw, all_words_up_to(i.algebra, 3)).all_passed());
}

TEST_CASE("trivial character recovers the base action") {
    const Instance& i = inst();
    std::vector<CPolynomial> vals;
    for (std::size_t g = 0; g < i.algebra->size(); ++g)
        vals.push_back(CPolynomial::constant(i.cell, i.algebra->eps(g)));
    TwistedAction tw(PhiMap::create(i.action, vals));
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 3), deg(0, 4);
    for (int k = 0; k < 50; ++k) {
        Word x(static_cast<std::size_t>(len(rng)));
        for (auto& g : x) g = gen(rng);
        CPolynomial f = zb_pow(i, deg(rng));
        CHECK(tw.act_word(x, f) == i.action->act_word(x, f));
    }
}

TEST_CASE("generalized Leibniz and twisted module law") {
    const Instance& i = inst();
    TwistedAction tw = i.twisted();
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 2), deg(0, 3);

    std::vector<TwistedLeibnizSample> ls;
    ls.push_back({{kXp}, zb_pow(i, 1), zb_pow(i, 1)});  // x = X+, f = g = zb
    ls.push_back({{}, zb_pow(i, 2), zb_pow(i, 1)});
    for (int k = 0; k < 100; ++k) {
        Word x(static_cast<std::size_t>(len(rng)));
        for (auto& g : x) g = gen(rng);
        ls.push_back({x, zb_pow(i, deg(rng)), zb_pow(i, deg(rng))});
    }
    CHECK(check_generalized_leibniz(tw, ls).all_passed());

    std::vector<TwistedLawSample> ms;
    ms.push_back({{kQHp}, {kQHm}, zb_pow(i, 3)});
    for (int k = 0; k < 100; ++k) {
        Word x(static_cast<std::size_t>(len(rng))), y(static_cast<std::size_t>(len(rng)));
        for (auto& g : x) g = gen(rng);
        for (auto& g : y) g = gen(rng);
        ms.push_back({x, y, zb_pow(i, deg(rng))});
    }
    std::vector<CPolynomial> probes;
    for (int n = 0; n <= 4; ++n) probes.push_back(zb_pow(i, n));
    CHECK(check_twisted_module_law(tw, ms, i.relations, probes).all_passed());

    // x = y = X+, f = 1 at sigma = 1: both sides vanish
    Instance p1 = at_sigma(i, 1);
    TwistedAction tw1 = p1.twisted();
    CHECK(tw1.act_word({kXp}, tw1.act_word({kXp}, CPolynomial::one(p1.cell))).is_zero());
    CHECK(tw1.act_word({kXp, kXp}, CPolynomial::one(p1.cell)).is_zero());
}

TEST_CASE("finite-dimensional modules") {
    const Instance& i = inst();
    for (int sigma = 0; sigma <= 4; ++sigma) {
        CyclicSubmodule m = build_rep(i, sigma, 64);
        REQUIRE(m.finite);
        CHECK(static_cast<int>(m.basis.size()) == sigma + 1);
        Instance pinned = at_sigma(i, sigma);
        CHECK(check_matrix_relations(m.rep, pinned.relations).all_passed());
        // X- kills the unit, X+ kills zb^sigma
        TwistedAction tw = pinned.twisted();
        CHECK(tw.act_word({kXm}, CPolynomial::one(pinned.cell)).is_zero());
        CHECK(tw.act_word({kXp},
                          CPolynomial::monomial(pinned.cell,
                                                Word(static_cast<std::size_t>(sigma), 0),
                                                Scalar::one(pinned.ctx)))
                  .is_zero());
        // lowest weight: q^H . 1 = q^{-sigma} 1
        Matrix qh = m.rep.evaluate_word({kQHp, kQHp});
        CHECK(qh.at(0, 0) == Scalar::q_power(pinned.ctx, -sigma));
        for (int r = 1; r < qh.n(); ++r) CHECK(qh.at(r, 0).is_zero());
    }

    // sigma = 1: ordered basis {1, zb}, qH+ matrix diag(q^{-1/2}, q^{1/2})
    CyclicSubmodule m1 = build_rep(i, 1, 64);
    ParameterContext vctx = ParameterContext::make({"v"});
    REQUIRE(m1.basis.size() == 2);
    CHECK(m1.basis[0] == CPolynomial::one(m1.basis[0].cell()));
    CHECK(m1.basis[1] == CPolynomial::generator(m1.basis[0].cell(), 0));
    const Matrix& k1 = m1.rep.matrices[kQHp];
    CHECK(k1.at(0, 0) == Scalar::v_power(vctx, -1));
    CHECK(k1.at(1, 1) == Scalar::v_power(vctx, 1));
    CHECK(k1.at(0, 1).is_zero());
    CHECK(k1.at(1, 0).is_zero());

    // sigma = 1: [X+, X-] . 1 = -1 and (q^H - q^-H)/(q - q^-1) . 1 = -1
    FreeElement comm(m1.rep.algebra);
    comm.add_term({kXp, kXm}, Scalar::one(vctx));
    comm.add_term({kXm, kXp}, -Scalar::one(vctx));
    Matrix c = m1.rep.evaluate(comm);
    CHECK(c.at(0, 0) == -Scalar::one(vctx));
    FreeElement cartan(m1.rep.algebra);
    Scalar hook_inv = (Scalar::q_power(vctx, 1) - Scalar::q_power(vctx, -1)).inverse();
    cartan.add_term({kQHp, kQHp}, hook_inv);
    cartan.add_term({kQHm, kQHm}, -hook_inv);
    Matrix h = m1.rep.evaluate(cartan);
    CHECK(h.at(0, 0) == -Scalar::one(vctx));

    // sigma = 0: X+- act as zero, qH+- as one, on a 1-dimensional module
    CyclicSubmodule m0 = build_rep(i, 0, 64);
    REQUIRE(m0.basis.size() == 1);
    CHECK(m0.rep.matrices[kXp].is_zero());
    CHECK(m0.rep.matrices[kXm].is_zero());
    CHECK(m0.rep.matrices[kQHp].is_identity());
    CHECK(m0.rep.matrices[kQHm].is_identity());
}

TEST_CASE("formal action specializes to the pinned action") {
    const Instance& i = inst();
    for (int sigma : {1, 3}) {
        Instance pinned = at_sigma(i, sigma);
        Substitution sub =
            Substitution::pin(i.ctx, pinned.ctx, {{"s", sigma * i.ctx.q_unit()}});
        TwistedAction tf = i.twisted();
        TwistedAction tp = pinned.twisted();
        for (int g = 0; g < 4; ++g)
            for (int n = 0; n <= 5; ++n) {
                CPolynomial formal = tf.act_word({g}, zb_pow(i, n));
                CHECK(formal.substituted(pinned.cell, sub) ==
                      tp.act_word({g}, zb_pow(pinned, n)));
            }
    }
}

TEST_CASE("infinite flag at negative-integer-free parameters") {
    // generic sigma (substituted to a non-vanishing pattern, e.g. sigma = -1
    // is not in Z_+, closure never terminates): expect the cutoff to trip
    const Instance& i = inst();
    Instance pinned = at_sigma(i, -1);
    CyclicSubmodule m = build_cyclic_submodule(pinned.twisted(), 12);
    CHECK_FALSE(m.finite);
    CHECK(m.explored > 12);
}
