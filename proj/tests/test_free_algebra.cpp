#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qorbit/sl2.hpp"
#include "qorbit/text.hpp"

using namespace qorbit;

namespace {

const Instance& inst() {
    static Instance i = sl2::load();
    return i;
}

Word random_word(std::mt19937& rng, std::size_t ngens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(ngens) - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = gen(rng);
    return w;
}

} // namespace

TEST_CASE("multiplication is concatenation") {
    const auto& g = inst().algebra;
    FreeElement xp = FreeElement::generator(g, "X+");
    FreeElement xm = FreeElement::generator(g, "X-");
    CHECK(xp * xm == FreeElement::word(g, {sl2::kXp, sl2::kXm}));
    FreeElement w = FreeElement::word(g, {sl2::kQHp, sl2::kXm, sl2::kXp});
    CHECK(FreeElement::unit(g) * w == w);
    CHECK(w * FreeElement::unit(g) == w);
    CHECK((xp + xm) * xp ==
          FreeElement::word(g, {sl2::kXp, sl2::kXp}) + FreeElement::word(g, {sl2::kXm, sl2::kXp}));
}

TEST_CASE("coproduct on generators and products") {
    const auto& g = inst().algebra;
    const auto& ctx = inst().ctx;
    TensorElement dxp = coproduct(FreeElement::generator(g, "X+"));
    TensorElement expect(g);
    expect.add_term({sl2::kXp}, {sl2::kQHm}, Scalar::one(ctx));
    expect.add_term({sl2::kQHp}, {sl2::kXp}, Scalar::one(ctx));
    CHECK(dxp == expect);

    CHECK(coproduct(FreeElement::unit(g)) == TensorElement::unit(g));

    // grouplike square: delta(qH+ qH+) = (qH+ qH+) (x) (qH+ qH+)
    TensorElement dk2 = coproduct_word(g, {sl2::kQHp, sl2::kQHp});
    TensorElement expect2(g);
    expect2.add_term({sl2::kQHp, sl2::kQHp}, {sl2::kQHp, sl2::kQHp}, Scalar::one(ctx));
    CHECK(dk2 == expect2);
}

TEST_CASE("counit") {
    const auto& g = inst().algebra;
    CHECK(counit(FreeElement::word(g, {sl2::kXp, sl2::kXm})).is_zero());
    CHECK(counit(FreeElement::unit(g)).is_one());
    CHECK(counit(FreeElement::generator(g, "qH+") + FreeElement::generator(g, "X+")).is_one());
}

TEST_CASE("coassociativity") {
    const auto& g = inst().algebra;
    Report one = check_coassociativity(g, {{sl2::kXp}});
    CHECK(one.all_passed());
    Report unit = check_coassociativity(g, {Word{}});
    CHECK(unit.all_passed());
    Report all3 = check_coassociativity(g, all_words_up_to(g, 3));
    CHECK(all3.all_passed());
    CHECK(all3.checks.size() == 1 + 4 + 16 + 64);
}

TEST_CASE("coproduct and counit are algebra morphisms") {
    const auto& g = inst().algebra;
    std::mt19937 rng(3111);
    for (int i = 0; i < 100; ++i) {
        FreeElement a = FreeElement::word(g, random_word(rng, g->size(), 3));
        FreeElement b = FreeElement::word(g, random_word(rng, g->size(), 3));
        CHECK(coproduct(a * b) == coproduct(a) * coproduct(b));
        CHECK(counit(a * b) == counit(a) * counit(b));
    }
    // counit axiom on words: (eps (x) id) delta(w) = w
    for (const auto& w : all_words_up_to(g, 3)) {
        FreeElement left(g), right(g);
        TensorElement dw = coproduct_word(g, w);
        for (const auto& [k, c] : dw.terms()) {
            left.add_term(k.second, c * counit_word(g, k.first));
            right.add_term(k.first, c * counit_word(g, k.second));
        }
        CHECK(left == FreeElement::word(g, w));
        CHECK(right == FreeElement::word(g, w));
    }
}

TEST_CASE("grading under multiplication") {
    const auto& g = inst().algebra;
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        Word wa = random_word(rng, g->size(), 4);
        Word wb = random_word(rng, g->size(), 4);
        FreeElement p = FreeElement::word(g, wa) * FreeElement::word(g, wb);
        CHECK(p.is_homogeneous());
        CHECK(p.terms().begin()->first.size() == wa.size() + wb.size());
    }
}

TEST_CASE("coideal certificates") {
    const auto& g = inst().algebra;
    const auto& ctx = inst().ctx;

    // r = qH+ qH- - 1
    FreeElement r(g);
    r.add_term({sl2::kQHp, sl2::kQHm}, Scalar::one(ctx));
    r.add_term({}, -Scalar::one(ctx));
    CoidealCertificate c1 = coideal_certificate({r}, {r});
    CHECK(c1.ok);

    // X+ alone is formally certifiable: delta(X+) is already in shape
    FreeElement xp = FreeElement::generator(g, "X+");
    CoidealCertificate c2 = coideal_certificate({xp}, {xp});
    CHECK(c2.ok);

    // the full shipped relation set
    CoidealCertificate c3 = coideal_certificate(inst().relations, inst().relations);
    CHECK(c3.ok);

    // negative control: a relation whose coproduct leaves the visible span
    FreeElement bad(g);
    bad.add_term({sl2::kXp, sl2::kXm}, Scalar::one(ctx));
    CoidealCertificate c4 = coideal_certificate({bad}, {bad});
    CHECK_FALSE(c4.ok);
}

TEST_CASE("certificate terms reconstruct the coproduct") {
    // delta(r) == sum coeff * closure[i] (x) w + sum coeff * w (x) closure[i]
    const auto& rels = inst().relations;
    CoidealCertificate cert = coideal_certificate(rels, rels);
    REQUIRE(cert.ok);
    const auto& g = inst().algebra;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        TensorElement recon(g);
        for (const auto& t : cert.terms[i]) {
            const FreeElement& rr = rels[t.closure_index];
            for (const auto& [w, c] : rr.terms()) {
                if (t.side == 0)
                    recon.add_term(w, t.cofactor, c * t.coeff);
                else
                    recon.add_term(t.cofactor, w, c * t.coeff);
            }
        }
        CHECK(recon == coproduct(rels[i]));
    }
}

TEST_CASE("element parser round-trips the renderer") {
    const auto& g = inst().algebra;
    const auto& ctx = inst().ctx;
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> nterms(0, 4), coefpick(0, 3), expo(-2, 2), rat(-3, 3);
    for (int i = 0; i < 80; ++i) {
        FreeElement e(g);
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            Scalar c = Scalar::from_rational(ctx, Rational(rat(rng)));
            switch (coefpick(rng)) {
                case 0: break;
                case 1:
                    c = c * Scalar::v_power(ctx, expo(rng)) *
                        Scalar::variable(ctx, "s", expo(rng));
                    break;
                case 2:
                    c = c * (Scalar::q_power(ctx, 1) + Scalar::v_power(ctx, expo(rng)));
                    break;
                default:
                    c = c * qnum_shifted(ctx, expo(rng), "s");
                    break;
            }
            e.add_term(random_word(rng, g->size(), 3), c);
        }
        CHECK(parse_element(g, render_element(e)) == e);
    }
    // the spec-shaped word strings parse directly
    CHECK(parse_element(g, "X+ X+") == FreeElement::word(g, {sl2::kXp, sl2::kXp}));
    CHECK(parse_element(g, "X-") == FreeElement::generator(g, "X-"));
}
