#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qorbit/cell_algebra.hpp"
#include "qorbit/frt.hpp"

using namespace qorbit;

TEST_CASE("normalize on a commutative single-generator cell") {
    ParameterContext ctx = ParameterContext::make({"v"});
    CellPtr cell = CellAlgebra::create(ctx, {"zb"}, {});
    CPolynomial z = CPolynomial::generator(cell, 0);
    CHECK(z * z == CPolynomial::monomial(cell, {0, 0}, Scalar::one(ctx)));
    CHECK(CPolynomial::monomial(cell, {}, Scalar::one(ctx)) == CPolynomial::one(cell));
    CHECK(cell->is_normal({0, 0, 0}));
}

TEST_CASE("rules must strictly decrease and be well formed") {
    ParameterContext ctx = ParameterContext::make({"v"});
    // increasing right-hand side is rejected
    CellAlgebra::Rule bad;
    bad.lhs = {0, 1};
    bad.rhs.emplace(Word{1, 0, 0}, Scalar::one(ctx));
    CHECK_THROWS_AS(CellAlgebra::create(ctx, {"a", "b"}, {bad}), usage_error);
    // same-word right-hand side is rejected too
    CellAlgebra::Rule refl;
    refl.lhs = {1, 0};
    refl.rhs.emplace(Word{1, 0}, Scalar::one(ctx));
    CHECK_THROWS_AS(CellAlgebra::create(ctx, {"a", "b"}, {refl}), usage_error);
    // length-1 left-hand sides are not rules
    CellAlgebra::Rule shrt;
    shrt.lhs = {0};
    CHECK_THROWS_AS(CellAlgebra::create(ctx, {"a", "b"}, {shrt}), usage_error);
}

TEST_CASE("normalization is idempotent and degree non-increasing") {
    FrtInstance f = load_frt(3);
    const CellPtr& cell = f.base.cell;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> gen(0, 2), len(0, 5);
    for (int i = 0; i < 80; ++i) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = gen(rng);
        CPolynomial p = CPolynomial::monomial(cell, w, Scalar::one(f.base.ctx));
        // every stored word is normal, so renormalizing is the identity
        for (const auto& [nw, c] : p.terms()) {
            (void)c;
            CHECK(cell->is_normal(nw));
        }
        std::map<Word, Scalar, DegLex> again =
            cell->normalize({p.terms().begin(), p.terms().end()});
        CHECK(again == p.terms());
        CHECK(p.degree() <= static_cast<int>(w.size()));
    }
}

TEST_CASE("corrupted rule set is caught by the confluence probe") {
    FrtInstance f = load_frt(3);
    const CellPtr& good = f.base.cell;
    REQUIRE(confluence_probe(good, 3).all_passed());

    // copy the rules but damage one coefficient
    std::vector<CellAlgebra::Rule> rules = good->rules();
    REQUIRE(!rules.empty());
    bool damaged = false;
    for (auto& r : rules) {
        for (auto& [w, c] : r.rhs) {
            if (w.size() == 2) {
                c = c * Scalar::q_power(f.base.ctx, 3);
                damaged = true;
                break;
            }
        }
        if (damaged) break;
    }
    REQUIRE(damaged);
    CellPtr bad = CellAlgebra::create(f.base.ctx, good->names(), rules);
    CHECK_FALSE(confluence_probe(bad, 3).all_passed());
}

TEST_CASE("leftmost and rightmost strategies agree on the shipped cells") {
    FrtInstance f = load_frt(3);
    Report rep = confluence_probe(f.base.cell, 3);
    CHECK(rep.all_passed());
    CHECK(rep.checks.size() == 1);
}
