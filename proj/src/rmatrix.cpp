#include "qorbit/rmatrix.hpp"

#include <cmath>
#include <functional>

#include "qorbit/text.hpp"

namespace qorbit {

namespace {

int pair_index(int N, int j, int k) { return j * N + k; }  // 0-based

int side_of(const Matrix& m) {
    int N = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.n()))));
    if (N * N != m.n())
        throw usage_error("matrix size is not a perfect square");
    return N;
}

} // namespace

StructureSet build_a_series(const ParameterContext& ctx, int N) {
    if (N < 2) throw usage_error("A-series needs N >= 2");
    Matrix R(N * N, ctx);
    const Scalar q = Scalar::q_power(ctx, 1);
    const Scalar qi = Scalar::q_power(ctx, -1);
    const Scalar one = Scalar::one(ctx);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            R.at(pair_index(N, i, k), pair_index(N, i, k)) = (i == k) ? q : one;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < a; ++b)
            R.at(pair_index(N, a, b), pair_index(N, b, a)) = q - qi;
    return derive_structure(ctx, N, std::move(R));
}

StructureSet derive_structure(const ParameterContext& ctx, int N, Matrix R) {
    if (R.n() != N * N) throw usage_error("R must be N^2 x N^2");
    StructureSet s;
    s.n = N;
    s.P = flip_matrix(N, ctx);
    Matrix R21 = s.P * R * s.P;
    Matrix diff = R - R21.inverse();
    const Scalar hook = Scalar::q_power(ctx, 1) - Scalar::q_power(ctx, -1);
    s.K = s.P - diff.scaled(hook.inverse());
    s.Q = R.diagonal_part();
    s.R = std::move(R);
    return s;
}

Matrix k_from_c(const Matrix& C) {
    const int N = C.n();
    Matrix Ci = C.inverse();
    Matrix K(N * N, C.context());
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            for (int ss = 0; ss < N; ++ss)
                for (int t = 0; t < N; ++t)
                    K.at(pair_index(N, j, k), pair_index(N, ss, t)) =
                        C.at(k, j) * Ci.at(ss, t);
    return K;
}

Report ybe_check(const Matrix& R) {
    Report rep;
    rep.suite = "ybe";
    const int N = side_of(R);
    Matrix r12 = leg_embed(R, N, 1, 2);
    Matrix r13 = leg_embed(R, N, 1, 3);
    Matrix r23 = leg_embed(R, N, 2, 3);
    Matrix lhs = r12 * r13 * r23;
    Matrix rhs = r23 * r13 * r12;
    bool ok = lhs == rhs;
    rep.add("ybe.n" + std::to_string(N), "R12 R13 R23 == R23 R13 R12", ok,
            ok ? "" : Matrix::first_difference(lhs, rhs));
    return rep;
}

Report triangularity_check(const Matrix& R) {
    Report rep;
    rep.suite = "triangularity";
    const int N = side_of(R);
    bool lower = true;
    std::string witness;
    for (int r = 0; r < R.n() && lower; ++r)
        for (int c = r + 1; c < R.n(); ++c)
            if (!R.at(r, c).is_zero()) {
                lower = false;
                witness = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
                break;
            }
    rep.add("triangularity.lower", "R is lower triangular in the lexicographic pair order",
            lower, witness);

    bool rowlaw = true;
    witness.clear();
    for (int j = 0; j < N && rowlaw; ++j)
        for (int k = 0; k < N && rowlaw; ++k)
            for (int t = 0; t < N; ++t) {
                if (k == t) continue;
                if (!R.at(pair_index(N, j, k), pair_index(N, j, t)).is_zero()) {
                    rowlaw = false;
                    witness = "R_{(" + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                              "),(" + std::to_string(j + 1) + "," + std::to_string(t + 1) + ")}";
                    break;
                }
            }
    rep.add("triangularity.rows", "R_{jk,jt} == 0 for k != t", rowlaw, witness);
    return rep;
}

Report k_reconstruction_check(const StructureSet& s) {
    Report rep;
    rep.suite = "k-reconstruction";
    const ParameterContext& ctx = s.R.context();
    Matrix R21 = s.P * s.R * s.P;
    Matrix lhs = s.R - R21.inverse();
    const Scalar hook = Scalar::q_power(ctx, 1) - Scalar::q_power(ctx, -1);
    Matrix rhs = (s.P - s.K).scaled(hook);
    bool ok = lhs == rhs;
    rep.add("k-reconstruction", "R12 - R21^-1 == (q - q^-1)(P - K12)", ok,
            ok ? "" : Matrix::first_difference(lhs, rhs));
    return rep;
}

Report q_symmetry_check(const StructureSet& s) {
    Report rep;
    rep.suite = "q-symmetry";
    bool diag = s.Q.is_diagonal() && s.Q == s.R.diagonal_part();
    rep.add("q.diag", "Q == diag(R)", diag,
            diag ? "" : Matrix::first_difference(s.Q, s.R.diagonal_part()));
    Matrix Q21 = s.P * s.Q * s.P;
    bool sym = Q21 == s.Q;
    rep.add("q.symmetric", "Q12 == Q21", sym, sym ? "" : Matrix::first_difference(s.Q, Q21));
    return rep;
}

Report k_identities_check(const StructureSet& s) {
    Report rep;
    rep.suite = "k-identities";
    const int N = s.n;
    const ParameterContext& ctx = s.R.context();

    Matrix k12 = leg_embed(s.K, N, 1, 2);
    Matrix r31 = leg_embed(s.R, N, 3, 1);
    Matrix r32 = leg_embed(s.R, N, 3, 2);
    Matrix r13 = leg_embed(s.R, N, 1, 3);
    Matrix r23 = leg_embed(s.R, N, 2, 3);
    Matrix q13 = leg_embed(s.Q, N, 1, 3);
    Matrix q23 = leg_embed(s.Q, N, 2, 3);
    Matrix r12 = leg_embed(s.R, N, 1, 2);

    {
        Matrix lhs = k12 * r31.inverse();
        Matrix rhs = k12 * r32;
        bool ok = lhs == rhs;
        rep.add("k-identities.k12r31", "K12 R31^-1 == K12 R32", ok,
                ok ? "" : Matrix::first_difference(lhs, rhs));
    }
    {
        Matrix lhs = k12 * r23.inverse();
        Matrix rhs = k12 * r13;
        bool ok = lhs == rhs;
        rep.add("k-identities.k12r23", "K12 R23^-1 == K12 R13", ok,
                ok ? "" : Matrix::first_difference(lhs, rhs));
    }
    {
        Matrix lhs = k12 * q13 * q23;
        bool ok = lhs == k12;
        rep.add("k-identities.k12q", "K12 Q13 Q23 == K12", ok,
                ok ? "" : Matrix::first_difference(lhs, k12));
    }
    {
        Matrix lhs = r12 * q13 * q23;
        Matrix rhs = q13 * q23 * r12;
        bool ok = lhs == rhs;
        rep.add("k-identities.r12q", "R12 Q13 Q23 == Q13 Q23 R12", ok,
                ok ? "" : Matrix::first_difference(lhs, rhs));
    }

    // diagonal-commutation implication, with fully formal d_1..d_N subject
    // to the constraints K12 D1 D2 = K12 imposes
    {
        std::vector<std::string> vars = ctx.vars();
        std::vector<std::string> dnames;
        for (int i = 1; i <= N; ++i) {
            dnames.push_back("d" + std::to_string(i));
            vars.push_back(dnames.back());
        }
        ParameterContext big = ParameterContext::make(vars, ctx.q_unit());
        Substitution lift = Substitution::pin(ctx, big, {});

        // constraints d_j d_l = 1 whenever column (j,l) of K12 is nonzero
        // solved by sign-tracked elimination; forced d^2 = 1 pins d = 1
        std::vector<int> root(static_cast<std::size_t>(N));
        std::vector<int> expo(static_cast<std::size_t>(N), 1);
        std::vector<bool> pinned(static_cast<std::size_t>(N), false);
        for (int i = 0; i < N; ++i) root[static_cast<std::size_t>(i)] = i;
        std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
            if (root[static_cast<std::size_t>(x)] == x) return {x, 1};
            auto [r, e] = find(root[static_cast<std::size_t>(x)]);
            root[static_cast<std::size_t>(x)] = r;
            expo[static_cast<std::size_t>(x)] *= e;
            return {r, expo[static_cast<std::size_t>(x)]};
        };
        bool forced_unit = false;
        if (!s.K.is_zero()) {
            for (int j = 0; j < N; ++j)
                for (int l = 0; l < N; ++l) {
                    bool used = false;
                    for (int r = 0; r < s.K.n() && !used; ++r)
                        used = !s.K.at(r, pair_index(N, j, l)).is_zero();
                    if (!used) continue;
                    auto [rj, ej] = find(j);
                    auto [rl, el] = find(l);
                    if (rj == rl) {
                        if (ej == el) {  // d_rj^2 = 1
                            pinned[static_cast<std::size_t>(rj)] = true;
                            forced_unit = true;
                        }
                    } else {
                        root[static_cast<std::size_t>(rl)] = rj;
                        expo[static_cast<std::size_t>(rl)] = -(ej * el);
                    }
                }
        }
        auto d_value = [&](int i) -> Scalar {
            auto [r, e] = find(i);
            if (pinned[static_cast<std::size_t>(r)]) return Scalar::one(big);
            return Scalar::variable(big, dnames[static_cast<std::size_t>(r)], e);
        };
        Matrix d1d2(N * N, big);
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k)
                d1d2.at(pair_index(N, i, k), pair_index(N, i, k)) = d_value(i) * d_value(k);
        Matrix Rbig = s.R.substituted(lift);
        Matrix Kbig = s.K.substituted(lift);
        {
            Matrix lhs = Kbig * d1d2;
            bool hyp = lhs == Kbig;
            rep.add("k-identities.d-hypothesis", "solved D satisfies K12 D1 D2 == K12", hyp,
                    hyp ? "" : Matrix::first_difference(lhs, Kbig));
        }
        Matrix lhs = Rbig * d1d2;
        Matrix rhs = d1d2 * Rbig;
        bool ok = lhs == rhs;
        std::string note = forced_unit ? " (a constraint forced some d_j = 1)" : "";
        rep.add("k-identities.d-commutation",
                "R12 D1 D2 == D1 D2 R12 for formal diagonal D" + note, ok,
                ok ? "" : Matrix::first_difference(lhs, rhs));
    }
    return rep;
}

Report structure_suite(const StructureSet& s) {
    Report rep;
    rep.suite = "structure";
    rep.merge(ybe_check(s.R));
    rep.merge(triangularity_check(s.R));
    rep.merge(q_symmetry_check(s));
    rep.merge(k_reconstruction_check(s));
    rep.merge(k_identities_check(s));
    return rep;
}

} // namespace qorbit
