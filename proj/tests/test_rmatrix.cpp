#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qorbit/rmatrix.hpp"
#include "qorbit/text.hpp"

using namespace qorbit;

namespace {
ParameterContext vctx() { return ParameterContext::make({"v"}); }
} // namespace

TEST_CASE("A-series structure at N=2") {
    auto ctx = vctx();
    StructureSet s = build_a_series(ctx, 2);
    CHECK(ybe_check(s.R).all_passed());
    CHECK(triangularity_check(s.R).all_passed());
    CHECK(q_symmetry_check(s).all_passed());
    CHECK(k_reconstruction_check(s).all_passed());
    CHECK(k_identities_check(s).all_passed());

    // K = 0 for the A series, so R12 - R21^-1 = (q - q^-1) P exactly
    CHECK(s.K.is_zero());
    Matrix R21 = s.P * s.R * s.P;
    const Scalar hook = Scalar::q_power(ctx, 1) - Scalar::q_power(ctx, -1);
    CHECK(s.R - R21.inverse() == s.P.scaled(hook));

    // Q = diag(R) carries exactly the two distinct diagonal values of R
    CHECK(s.Q.is_diagonal());
    std::set<Scalar> values;
    for (int i = 0; i < s.Q.n(); ++i) values.insert(s.Q.at(i, i));
    CHECK(values.size() == 2);
    CHECK(values.count(Scalar::q_power(ctx, 1)) == 1);
    CHECK(values.count(Scalar::one(ctx)) == 1);
}

TEST_CASE("A-series structure at N=3 and N=4") {
    auto ctx = vctx();
    for (int N : {3, 4}) {
        StructureSet s = build_a_series(ctx, N);
        CHECK(ybe_check(s.R).all_passed());
        CHECK(triangularity_check(s.R).all_passed());
        CHECK(s.K.is_zero());
        if (N == 3) {
            CHECK(k_identities_check(s).all_passed());
            CHECK(q_symmetry_check(s).all_passed());
        }
    }
}

TEST_CASE("identity matrix satisfies the braid relation") {
    auto ctx = vctx();
    CHECK(ybe_check(Matrix::identity(4, ctx)).all_passed());
}

TEST_CASE("negative controls") {
    auto ctx = vctx();
    StructureSet s = build_a_series(ctx, 2);
    Matrix bad = s.R;
    bad.at(3, 0) = Scalar::q_power(ctx, 2);  // perturb one entry
    Report rep = ybe_check(bad);
    CHECK_FALSE(rep.all_passed());
    CHECK(!rep.checks.front().witness.empty());  // names the first failing entry

    CHECK_THROWS_AS(ybe_check(Matrix(5, ctx)), usage_error);  // not a perfect square

    StructureSet s2 = s;
    s2.K = flip_matrix(2, ctx);  // wrong K: reconstruction must fail
    CHECK_FALSE(k_reconstruction_check(s2).all_passed());
}

TEST_CASE("user-supplied K from a C-matrix") {
    // K_{jk,st} = (C^t)_{jk} (C^-1)_{st}; with C = antidiagonal(1, -1)
    auto ctx = vctx();
    Matrix C(2, ctx);
    C.at(0, 1) = Scalar::one(ctx);
    C.at(1, 0) = -Scalar::one(ctx);
    Matrix K = k_from_c(C);
    CHECK(K.n() == 4);
    // rank-one structure: K = (C^t flattened) (C^-1 flattened)^T
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int st = 0; st < 4; ++st)
                CHECK(K.at(j * 2 + k, st) == C.at(k, j) * C.inverse().at(st / 2, st % 2));
    // the d-commutation solver pins d2 = d1^-1 from this K's constraints
    StructureSet s;
    s.n = 2;
    s.R = build_a_series(ctx, 2).R;
    s.P = flip_matrix(2, ctx);
    s.Q = s.R.diagonal_part();
    s.K = K;
    Report rep = k_identities_check(s);
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.id == "k-identities.d-hypothesis") {
            found = true;
            CHECK(c.pass);
        }
    CHECK(found);
}

TEST_CASE("leg embedding commutation sanity") {
    auto ctx = vctx();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> expo(-2, 2), pick(0, 2);
    const int N = 2;
    for (int trial = 0; trial < 10; ++trial) {
        Matrix A(N * N, ctx);
        for (int i = 0; i < N * N; ++i)
            for (int j = 0; j < N * N; ++j)
                if (pick(rng) == 0) A.at(i, j) = Scalar::q_power(ctx, expo(rng));
        Matrix C(N, ctx);
        for (int i = 0; i < N; ++i) C.at(i, i) = Scalar::q_power(ctx, expo(rng));
        // A on legs 1,2 commutes with a diagonal C on leg 3
        Matrix a12 = leg_embed(A, N, 1, 2);
        Matrix c3(N * N * N, ctx);
        for (int x = 0; x < N; ++x)
            for (int y = 0; y < N; ++y)
                for (int z = 0; z < N; ++z) {
                    int idx = (x * N + y) * N + z;
                    c3.at(idx, idx) = C.at(z, z);
                }
        CHECK(a12 * c3 == c3 * a12);
    }
}

TEST_CASE("parallel and serial matrix kernels agree") {
    auto ctx = ParameterContext::make({"v", "s"});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> expo(-3, 3), coef(-4, 4), pick(0, 3);
    const int n = 30;  // above the parallel dispatch threshold
    auto randmat = [&]() {
        Matrix m(n, ctx);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (pick(rng) != 0) {
                    LaurentScalar x = LaurentScalar::zero(ctx);
                    ExpVec e(2);
                    e[0] = expo(rng);
                    e[1] = expo(rng);
                    x.add_term(e, Rational(coef(rng)));
                    m.at(i, j) = Scalar(x);
                }
        return m;
    };
    Matrix a = randmat(), b = randmat();
    Matrix serial = a.multiply_serial(b);
    Matrix parallel = a.multiply_parallel(b);
    CHECK(serial == parallel);
    CHECK(a.multiply(b) == serial);
}
