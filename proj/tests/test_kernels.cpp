#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qorbit/rmatrix.hpp"

using namespace qorbit;

namespace {

Matrix random_matrix(const ParameterContext& ctx, int n, std::mt19937& rng, int density = 2) {
    std::uniform_int_distribution<int> expo(-3, 3), coef(-5, 5), pick(0, density);
    Matrix m(n, ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pick(rng) == 0) {
                LaurentScalar x = LaurentScalar::zero(ctx);
                x.add_term({expo(rng)}, Rational(coef(rng)));
                x.add_term({expo(rng)}, Rational(coef(rng)));
                m.at(i, j) = Scalar(x);
            }
    return m;
}

} // namespace

TEST_CASE("serial and parallel kernels agree on random matrices") {
    ParameterContext ctx = ParameterContext::make({"v"});
    std::mt19937 rng(321);
    for (int n : {8, 24, 40}) {
        Matrix a = random_matrix(ctx, n, rng);
        Matrix b = random_matrix(ctx, n, rng);
        Matrix s = a.multiply_serial(b);
        CHECK(a.multiply_parallel(b) == s);
        CHECK(a.multiply(b) == s);  // dispatch picks one of the two
    }
}

TEST_CASE("kernels agree on the three-leg braid workload") {
    ParameterContext ctx = ParameterContext::make({"v"});
    StructureSet s = build_a_series(ctx, 3);
    Matrix r12 = leg_embed(s.R, 3, 1, 2);
    Matrix r13 = leg_embed(s.R, 3, 1, 3);
    Matrix r23 = leg_embed(s.R, 3, 2, 3);
    Matrix serial = r12.multiply_serial(r13).multiply_serial(r23);
    Matrix parallel = r12.multiply_parallel(r13).multiply_parallel(r23);
    CHECK(serial == parallel);
    CHECK(serial == r12.multiply(r13).multiply(r23));
}

TEST_CASE("inverse, transpose, and embedding identities") {
    ParameterContext ctx = ParameterContext::make({"v"});
    StructureSet s = build_a_series(ctx, 3);
    CHECK((s.R * s.R.inverse()).is_identity());
    CHECK((s.P * s.P).is_identity());
    CHECK(s.R.transpose() == s.P * s.R * s.P);  // R12^t == R21 for the A series
    Matrix id9 = Matrix::identity(9, ctx);
    CHECK(leg_embed(id9, 3, 1, 2).is_identity());
    CHECK(leg_embed(id9, 3, 2, 3).is_identity());
}
