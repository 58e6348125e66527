#include "qorbit/frt.hpp"

#include <sstream>

#include "qorbit/text.hpp"

namespace qorbit {

namespace {

int pair_index(int N, int j, int k) { return j * N + k; }  // 0-based

using FreePoly = std::map<Word, Scalar, DegLex>;

void fp_add(FreePoly& p, const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = p.emplace(w, c);
    if (!ins) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

std::string pair_name(const char* base, int i, int j) {
    std::ostringstream os;
    os << base << "_{" << i << j << "}";
    return os.str();
}

} // namespace

int FrtInstance::lplus(int i, int j) const {
    int idx = base.algebra->index_of(pair_name("L+", i, j));
    if (idx < 0) throw usage_error("L+ index out of the upper triangle");
    return idx;
}

int FrtInstance::lminus(int i, int j) const {
    int idx = base.algebra->index_of(pair_name("L-", i, j));
    if (idx < 0) throw usage_error("L- index out of the lower triangle");
    return idx;
}

int frt_q_unit(int N) { return (N % 2 == 0) ? N / 2 : N; }

CellMatrix cell_identity(const CellPtr& cell, int N) {
    CellMatrix m(static_cast<std::size_t>(N),
                 std::vector<CPolynomial>(static_cast<std::size_t>(N), CPolynomial::zero(cell)));
    for (int i = 0; i < N; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = CPolynomial::one(cell);
    return m;
}

CellMatrix cell_mul(const CellMatrix& a, const CellMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw usage_error("cell matrix size mismatch");
    const CellPtr& cell = a[0][0].cell();
    CellMatrix out(n, std::vector<CPolynomial>(n, CPolynomial::zero(cell)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        }
    return out;
}

bool cell_equal(const CellMatrix& a, const CellMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

CellMatrix unipotent_upper(const CellPtr& cell, int N) {
    CellMatrix m = cell_identity(cell, N);
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            int g = cell->index_of(pair_name("z", j, k));
            if (g < 0) throw usage_error("cell lacks generator " + pair_name("z", j, k));
            m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] =
                CPolynomial::generator(cell, g);
        }
    return m;
}

CellMatrix unipotent_lower(const CellPtr& cell, int N) {
    CellMatrix m = cell_identity(cell, N);
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            int g = cell->index_of(pair_name("z", j, k));
            if (g < 0) throw usage_error("cell lacks generator " + pair_name("z", j, k));
            m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] =
                CPolynomial::generator(cell, g);
        }
    return m;
}

CellMatrix invert_unipotent(const CellMatrix& Z) {
    const int N = static_cast<int>(Z.size());
    if (N == 0) throw usage_error("empty matrix");
    const CellPtr& cell = Z[0][0].cell();
    bool upper = true, lower = true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const CPolynomial& e = Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == j) {
                if (!e.is_one()) throw usage_error("matrix is not unipotent (diagonal)");
            } else if (i < j) {
                if (!e.is_zero()) lower = false;
            } else {
                if (!e.is_zero()) upper = false;
            }
        }
    if (!upper && !lower) throw usage_error("matrix is not unipotent (shape)");

    CellMatrix nil = Z;
    for (int i = 0; i < N; ++i)
        nil[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = CPolynomial::zero(cell);

    CellMatrix inv = cell_identity(cell, N);
    CellMatrix power = cell_identity(cell, N);
    int sign = 1;
    for (int k = 1; k < N; ++k) {
        power = cell_mul(power, nil);
        sign = -sign;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                auto& tgt = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const auto& p = power[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                tgt = sign > 0 ? tgt + p : tgt - p;
            }
    }
    if (!cell_equal(cell_mul(Z, inv), cell_identity(cell, N)) ||
        !cell_equal(cell_mul(inv, Z), cell_identity(cell, N)))
        throw engine_error("unipotent inverse verification failed");
    return inv;
}

namespace {

// entry of the true (lower unitriangular) coordinate matrix as a word
// over the cell generators; nullopt = structural zero
std::optional<Word> zstar_entry(int N, int r, int c,
                                const std::vector<std::vector<int>>& zidx) {
    if (r == c) return Word{};
    if (c < r) return Word{zidx[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]};
    (void)N;
    return std::nullopt;
}

struct CellExtraction {
    std::vector<std::string> names;
    std::vector<CellAlgebra::Rule> rules;
};

// expands R12 Z*2 Q Z*1 Q^-1 - Z*1 Q Z*2 Q^-1 R12 entrywise in the free
// algebra on the cell letters and solves for the deg-lex-largest words
CellExtraction extract_cell_rules(const ParameterContext& ctx, int N, const Matrix& R) {
    CellExtraction out;
    std::vector<std::vector<int>> zidx(static_cast<std::size_t>(N + 1),
                                       std::vector<int>(static_cast<std::size_t>(N + 1), -1));
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            zidx[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                static_cast<int>(out.names.size());
            out.names.push_back(pair_name("z", j, k));
        }

    auto zw = [&](int r, int c) { return zstar_entry(N, r, c, zidx); };
    std::vector<FreePoly> equations;
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k)
            for (int j = 1; j <= N; ++j)
                for (int l = 1; l <= N; ++l) {
                    FreePoly e;
                    for (int a = 1; a <= N; ++a) {
                        // left: sum_ab R_{(ik),(ab)} q^{d_al - d_jl} Z*_bl Z*_aj
                        for (int b = 1; b <= N; ++b) {
                            const Scalar& r1 = R.at(pair_index(N, i - 1, k - 1),
                                                    pair_index(N, a - 1, b - 1));
                            if (r1.is_zero()) continue;
                            auto w1 = zw(b, l), w2 = zw(a, j);
                            if (!w1 || !w2) continue;
                            int qe = (a == l ? 1 : 0) - (j == l ? 1 : 0);
                            fp_add(e, concat(*w1, *w2), r1 * Scalar::q_power(ctx, qe));
                        }
                        // right: sum_ad q^{d_ak - d_ad} Z*_ia Z*_kd R_{(ad),(jl)}
                        for (int d = 1; d <= N; ++d) {
                            const Scalar& r2 = R.at(pair_index(N, a - 1, d - 1),
                                                    pair_index(N, j - 1, l - 1));
                            if (r2.is_zero()) continue;
                            auto w1 = zw(i, a), w2 = zw(k, d);
                            if (!w1 || !w2) continue;
                            int qe = (a == k ? 1 : 0) - (a == d ? 1 : 0);
                            fp_add(e, concat(*w1, *w2), -(r2 * Scalar::q_power(ctx, qe)));
                        }
                    }
                    if (!e.empty()) equations.push_back(std::move(e));
                }

    // echelonize on the deg-lex-largest word of each equation
    std::map<Word, FreePoly, DegLex> rows;
    for (auto& eq : equations) {
        FreePoly v = std::move(eq);
        while (!v.empty()) {
            const Word lead = v.rbegin()->first;
            auto it = rows.find(lead);
            if (it == rows.end()) {
                Scalar inv = v.rbegin()->second.inverse();
                for (auto& [w, c] : v) c = c * inv;
                rows.emplace(lead, std::move(v));
                break;
            }
            Scalar c = v.rbegin()->second;
            for (const auto& [w, rc] : it->second) {
                Scalar delta = c * rc;
                auto [vit, ins] = v.emplace(w, -delta);
                if (!ins) {
                    vit->second = vit->second - delta;
                    if (vit->second.is_zero()) v.erase(vit);
                }
            }
        }
    }

    for (auto& [lead, row] : rows) {
        if (lead.size() != 2 || lead[0] <= lead[1])
            throw engine_error(
                "cell relation solves for an in-order term; offending lead word: " +
                render_monomial(out.names, lead));
        CellAlgebra::Rule rule;
        rule.lhs = lead;
        for (const auto& [w, c] : row) {
            if (w == lead) continue;
            rule.rhs.emplace(w, -c);
        }
        out.rules.push_back(std::move(rule));
    }
    return out;
}

} // namespace

FrtInstance load_frt(int N) {
    if (N < 2 || N > 3)
        throw usage_error("shipped A-series instances cover N in {2,3}");
    const int u = frt_q_unit(N);
    std::vector<std::string> vars{"v"};
    std::vector<std::string> ds;
    for (int i = 1; i <= N; ++i) {
        ds.push_back("d" + std::to_string(i));
        vars.push_back(ds.back());
    }
    ParameterContext ctx = ParameterContext::with_product_one(vars, ds, u);

    FrtInstance inst;
    inst.N = N;
    inst.dnames = ds;
    inst.structure = build_a_series(ctx, N);
    const Matrix& R = inst.structure.R;

    // --- cell algebra from the quadratic matrix relation
    CellExtraction ext = extract_cell_rules(ctx, N, R);
    CellPtr cell = CellAlgebra::create(ctx, ext.names, ext.rules);

    // --- L generators, coproduct, counit
    const Scalar one = Scalar::one(ctx);
    const Scalar zero = Scalar::zero(ctx);
    std::vector<std::string> names;
    std::vector<std::pair<int, std::pair<int, int>>> gens;  // (sign, (i,j)), sign +1/-1
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            names.push_back(pair_name("L+", i, j));
            gens.push_back({+1, {i, j}});
        }
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= i; ++j) {
            names.push_back(pair_name("L-", i, j));
            gens.push_back({-1, {i, j}});
        }
    auto lidx = [&](int sign, int i, int j) -> int {
        if (sign > 0 && i <= j) {
            int k = 0;
            for (int a = 1; a < i; ++a) k += N - a + 1;
            return k + (j - i);
        }
        if (sign < 0 && i >= j) {
            int base = N * (N + 1) / 2;
            int k = 0;
            for (int a = 1; a < i; ++a) k += a;
            return base + k + (j - 1);
        }
        return -1;
    };
    using DT = GeneratorSet::DeltaTerm;
    std::vector<std::vector<DT>> delta(names.size());
    std::vector<Scalar> eps(names.size(), zero);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto [sign, ij] = gens[g];
        auto [i, j] = ij;
        for (int m = 1; m <= N; ++m) {
            int a = lidx(sign, i, m), b = lidx(sign, m, j);
            if (a < 0 || b < 0) continue;
            delta[g].push_back({{a}, {b}, one});
        }
        eps[g] = i == j ? one : zero;
    }
    GenSetPtr algebra = GeneratorSet::create(ctx, names, std::move(delta), std::move(eps));

    // --- relations
    std::vector<FreeElement> relations;
    auto lentry = [&](int sign, int r, int c) -> std::optional<Word> {
        int g = lidx(sign, r, c);
        if (g < 0) return std::nullopt;
        return Word{g};
    };
    auto add_family = [&](int sx, int sy) {
        // R12 X2 Y1 - Y1 X2 R12 with X = L^{sx}, Y = L^{sy}
        for (int i = 1; i <= N; ++i)
            for (int k = 1; k <= N; ++k)
                for (int j = 1; j <= N; ++j)
                    for (int l = 1; l <= N; ++l) {
                        FreeElement e(algebra);
                        for (int a = 1; a <= N; ++a)
                            for (int b = 1; b <= N; ++b) {
                                const Scalar& r1 = R.at(pair_index(N, i - 1, k - 1),
                                                        pair_index(N, a - 1, b - 1));
                                if (!r1.is_zero()) {
                                    auto x = lentry(sx, b, l);
                                    auto y = lentry(sy, a, j);
                                    if (x && y) e.add_term(concat(*x, *y), r1);
                                }
                                const Scalar& r2 = R.at(pair_index(N, a - 1, b - 1),
                                                        pair_index(N, j - 1, l - 1));
                                if (!r2.is_zero()) {
                                    auto y = lentry(sy, i, a);
                                    auto x = lentry(sx, k, b);
                                    if (x && y) e.add_term(concat(*y, *x), -r2);
                                }
                            }
                        if (!e.is_zero()) relations.push_back(std::move(e));
                    }
    };
    add_family(+1, +1);
    add_family(-1, -1);
    add_family(+1, -1);
    for (int j = 1; j <= N; ++j) {
        FreeElement a(algebra), b(algebra);
        a.add_term(concat(*lentry(+1, j, j), *lentry(-1, j, j)), one);
        a.add_term({}, -one);
        b.add_term(concat(*lentry(-1, j, j), *lentry(+1, j, j)), one);
        b.add_term({}, -one);
        relations.push_back(std::move(a));
        relations.push_back(std::move(b));
    }
    {
        FreeElement det(algebra);
        Word w;
        for (int j = 1; j <= N; ++j) w.push_back(lidx(+1, j, j));
        det.add_term(w, one);
        det.add_term({}, -one);
        relations.push_back(std::move(det));
    }

    // --- action table from the exact matrix formulas
    Matrix R21 = inst.structure.P * R * inst.structure.P;
    Matrix R21i = R21.inverse();
    CellMatrix Z = unipotent_lower(cell, N);
    CellMatrix Zi = invert_unipotent(Z);
    auto zpoly = [&](const CellMatrix& M, int r, int c) -> const CPolynomial& {
        return M[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    };
    auto act_plus = [&](int i, int j, int r, int c) {
        CPolynomial out = CPolynomial::zero(cell);
        for (int b = 1; b <= N; ++b) {
            const Scalar& rr = R21i.at(pair_index(N, i - 1, r - 1), pair_index(N, j - 1, b - 1));
            if (rr.is_zero()) continue;
            const CPolynomial& z = zpoly(Z, b, c);
            if (z.is_zero()) continue;
            out = out + z.scaled(rr * Scalar::q_power(ctx, j == c ? 1 : 0));
        }
        return out;
    };
    auto act_minus = [&](int i, int j, int r, int c) {
        CPolynomial out = CPolynomial::zero(cell);
        const CPolynomial& mid = zpoly(Z, r, c);
        if (mid.is_zero()) return out;
        for (int a = 1; a <= N; ++a) {
            const CPolynomial& zi_ = zpoly(Z, i, a);
            if (zi_.is_zero()) continue;
            const CPolynomial& zj = zpoly(Zi, a, j);
            if (zj.is_zero()) continue;
            int qe = (a == r ? 1 : 0) - (a == c ? 1 : 0);
            out = out + (zi_ * mid * zj).scaled(Scalar::q_power(ctx, qe));
        }
        return out;
    };
    auto act_entry = [&](int sign, int i, int j, int r, int c) {
        return sign > 0 ? act_plus(i, j, r, c) : act_minus(i, j, r, c);
    };

    // consistency at the unit and structurally-zero slots
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto [sign, ij] = gens[g];
        auto [i, j] = ij;
        for (int r = 1; r <= N; ++r)
            for (int c = r; c <= N; ++c) {
                CPolynomial got = act_entry(sign, i, j, r, c);
                CPolynomial want = (r == c && i == j) ? CPolynomial::one(cell)
                                                      : CPolynomial::zero(cell);
                if (got != want)
                    throw engine_error("action formula inconsistent at " + names[g] +
                                       " on slot (" + std::to_string(r) + "," +
                                       std::to_string(c) + "): " + got.render());
            }
    }

    std::vector<std::vector<CPolynomial>> values(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto [sign, ij] = gens[g];
        auto [i, j] = ij;
        for (int a = 1; a <= N; ++a)
            for (int b = a + 1; b <= N; ++b)
                values[g].push_back(act_entry(sign, i, j, b, a));  // generator z_{ab} at (b,a)
    }
    ActionPtr action = ActionTable::create(algebra, cell, std::move(values));

    // --- twist values: phi(L+) = D^-1, phi(L-) = Z* D^2 (Z*)^-1 D^-1
    std::vector<CPolynomial> phivals(gens.size(), CPolynomial::zero(cell));
    CellMatrix M = cell_identity(cell, N);
    {
        CellMatrix D2 = cell_identity(cell, N);
        for (int a = 1; a <= N; ++a)
            D2[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(a - 1)] =
                CPolynomial::constant(cell,
                                      Scalar::variable(ctx, "d" + std::to_string(a), 2));
        M = cell_mul(cell_mul(Z, D2), Zi);
        for (int c = 1; c <= N; ++c) {
            Scalar dinv = Scalar::variable(ctx, "d" + std::to_string(c), -1);
            for (int r = 1; r <= N; ++r)
                M[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
                    M[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)].scaled(
                        dinv);
        }
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
        auto [sign, ij] = gens[g];
        auto [i, j] = ij;
        if (sign > 0)
            phivals[g] = i == j ? CPolynomial::constant(
                                      cell, Scalar::variable(ctx, "d" + std::to_string(i), -1))
                                : CPolynomial::zero(cell);
        else
            phivals[g] = zpoly(M, i, j);
    }
    PhiPtr phi = PhiMap::create(action, std::move(phivals));

    inst.base.name = "frt-A" + std::to_string(N);
    inst.base.ctx = ctx;
    inst.base.algebra = algebra;
    inst.base.cell = cell;
    inst.base.action = action;
    inst.base.phi = phi;
    inst.base.relations = std::move(relations);
    inst.base.closure = ClosurePair{inst.base.relations, inst.base.relations};
    inst.base.certificate = coideal_certificate(inst.base.relations, inst.base.closure);
    if (!inst.base.certificate.ok)
        throw engine_error("frt load failed: no coideal certificate");
    Report pr = check_phi_relations(*inst.base.phi, inst.base.relations, inst.base.certificate);
    if (!pr.all_passed()) {
        std::string w;
        for (const auto& c : pr.checks)
            if (!c.pass) {
                w = c.witness;
                break;
            }
        throw engine_error("frt load failed: phi does not vanish on R: " + w);
    }
    return inst;
}

Report verify_quadratic_phi(const FrtInstance& inst) {
    Report rep;
    rep.suite = "quadratic-phi";
    const int N = inst.N;
    const int n2 = N * N;
    const Instance& b = inst.base;
    const ParameterContext& ctx = b.ctx;
    const CellPtr& cell = b.cell;

    CellMatrix Z = unipotent_lower(cell, N);
    CellMatrix Zi = invert_unipotent(Z);

    auto scalar_const = [&](const Scalar& s) { return CPolynomial::constant(cell, s); };
    auto dpow = [&](int a, int k) {
        return Scalar::variable(ctx, "d" + std::to_string(a), k);
    };

    // N^2-leg embeddings over the cell algebra
    auto embed1 = [&](const CellMatrix& m) {
        CellMatrix out(static_cast<std::size_t>(n2),
                       std::vector<CPolynomial>(static_cast<std::size_t>(n2),
                                                CPolynomial::zero(cell)));
        for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c)
                for (int bdx = 0; bdx < N; ++bdx)
                    out[static_cast<std::size_t>(a * N + bdx)]
                       [static_cast<std::size_t>(c * N + bdx)] =
                           m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        return out;
    };
    auto embed2 = [&](const CellMatrix& m) {
        CellMatrix out(static_cast<std::size_t>(n2),
                       std::vector<CPolynomial>(static_cast<std::size_t>(n2),
                                                CPolynomial::zero(cell)));
        for (int a = 0; a < N; ++a)
            for (int c = 0; c < N; ++c)
                for (int bdx = 0; bdx < N; ++bdx)
                    out[static_cast<std::size_t>(bdx * N + a)]
                       [static_cast<std::size_t>(bdx * N + c)] =
                           m[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        return out;
    };
    auto from_scalar_matrix = [&](const Matrix& m) {
        CellMatrix out(static_cast<std::size_t>(m.n()),
                       std::vector<CPolynomial>(static_cast<std::size_t>(m.n()),
                                                CPolynomial::zero(cell)));
        for (int i = 0; i < m.n(); ++i)
            for (int j = 0; j < m.n(); ++j)
                if (!m.at(i, j).is_zero()) out[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)] =
                    scalar_const(m.at(i, j));
        return out;
    };
    auto diag_n2 = [&](auto f) {
        CellMatrix out(static_cast<std::size_t>(n2),
                       std::vector<CPolynomial>(static_cast<std::size_t>(n2),
                                                CPolynomial::zero(cell)));
        for (int a = 1; a <= N; ++a)
            for (int bdx = 1; bdx <= N; ++bdx) {
                int idx = pair_index(N, a - 1, bdx - 1);
                out[static_cast<std::size_t>(idx)][static_cast<std::size_t>(idx)] =
                    scalar_const(f(a, bdx));
            }
        return out;
    };

    const CellMatrix Z1 = embed1(Z), Z2 = embed2(Z), Z1i = embed1(Zi), Z2i = embed2(Zi);
    const CellMatrix Rm = from_scalar_matrix(inst.structure.R);
    const CellMatrix Rmi = from_scalar_matrix(inst.structure.R.inverse());
    const CellMatrix Qm = from_scalar_matrix(inst.structure.Q);
    const CellMatrix Qmi = from_scalar_matrix(inst.structure.Q.inverse());
    const CellMatrix D1sq = diag_n2([&](int a, int) { return dpow(a, 2); });
    const CellMatrix D2sq = diag_n2([&](int, int bb) { return dpow(bb, 2); });
    const CellMatrix D12inv =
        diag_n2([&](int a, int bb) { return dpow(a, -1) * dpow(bb, -1); });

    auto phi_family = [&](auto wordof) {
        CellMatrix out(static_cast<std::size_t>(n2),
                       std::vector<CPolynomial>(static_cast<std::size_t>(n2),
                                                CPolynomial::zero(cell)));
        for (int i = 1; i <= N; ++i)
            for (int k = 1; k <= N; ++k)
                for (int j = 1; j <= N; ++j)
                    for (int l = 1; l <= N; ++l) {
                        std::optional<Word> w = wordof(i, k, j, l);
                        if (!w) continue;
                        out[static_cast<std::size_t>(pair_index(N, i - 1, k - 1))]
                           [static_cast<std::size_t>(pair_index(N, j - 1, l - 1))] =
                               b.phi->value(*w);
                    }
        return out;
    };
    auto lp = [&](int i, int j) -> std::optional<Word> {
        if (i > j) return std::nullopt;
        return Word{inst.lplus(i, j)};
    };
    auto lm = [&](int i, int j) -> std::optional<Word> {
        if (i < j) return std::nullopt;
        return Word{inst.lminus(i, j)};
    };
    auto join = [](std::optional<Word> a, std::optional<Word> bw) -> std::optional<Word> {
        if (!a || !bw) return std::nullopt;
        return concat(*a, *bw);
    };

    // phi(L+1 L+2) = D1^-1 D2^-1
    {
        CellMatrix got = phi_family([&](int i, int k, int j, int l) {
            return join(lp(i, j), lp(k, l));
        });
        CellMatrix want = diag_n2([&](int a, int bb) { return dpow(a, -1) * dpow(bb, -1); });
        bool ok = cell_equal(got, want);
        rep.add("quadratic-phi.pp", "phi(L+1 L+2) == D1^-1 D2^-1", ok);
    }
    // phi(L-1 L-2) = Z*1 Q Z*2 D1^2 D2^2 (Z*2)^-1 Q^-1 (Z*1)^-1 D1^-1 D2^-1
    {
        CellMatrix got = phi_family([&](int i, int k, int j, int l) {
            return join(lm(i, j), lm(k, l));
        });
        CellMatrix want = cell_mul(
            cell_mul(cell_mul(cell_mul(Z1, Qm), Z2),
                     cell_mul(cell_mul(D1sq, D2sq), cell_mul(Z2i, Qmi))),
            cell_mul(Z1i, D12inv));
        bool ok = cell_equal(got, want);
        rep.add("quadratic-phi.mm",
                "phi(L-1 L-2) == Z*1 Q Z*2 D1^2 D2^2 Z*2^-1 Q^-1 Z*1^-1 D1^-1 D2^-1", ok);
    }
    // phi(L+2 L-1) = R12^-1 Z*1 D1^2 (Z*1)^-1 D1^-1 D2^-1 R12
    {
        CellMatrix got = phi_family([&](int i, int k, int j, int l) {
            return join(lp(k, l), lm(i, j));
        });
        CellMatrix want = cell_mul(
            cell_mul(cell_mul(Rmi, cell_mul(Z1, cell_mul(D1sq, Z1i))), D12inv), Rm);
        bool ok = cell_equal(got, want);
        rep.add("quadratic-phi.pm", "phi(L+2 L-1) == R12^-1 Z*1 D1^2 Z*1^-1 D1^-1 D2^-1 R12",
                ok);
    }
    // phi(L-1 L+2) = Z*1 D1^2 (Z*1)^-1 D1^-1 D2^-1
    {
        CellMatrix got = phi_family([&](int i, int k, int j, int l) {
            return join(lm(i, j), lp(k, l));
        });
        CellMatrix want = cell_mul(cell_mul(Z1, cell_mul(D1sq, Z1i)), D12inv);
        bool ok = cell_equal(got, want);
        rep.add("quadratic-phi.mp", "phi(L-1 L+2) == Z*1 D1^2 Z*1^-1 D1^-1 D2^-1", ok);
    }
    // and phi annihilates every relation
    {
        bool ok = true;
        std::string witness;
        for (const auto& r : b.relations) {
            CPolynomial val = b.phi->value(r);
            if (!val.is_zero()) {
                ok = false;
                witness = render_element(r);
                break;
            }
        }
        rep.add("quadratic-phi.relations", "phi(R) == 0", ok, witness);
    }
    return rep;
}

std::vector<int> weight_exponents(int N, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != N - 1)
        throw usage_error("expected " + std::to_string(N - 1) + " weights");
    for (int w : weights)
        if (w < 0) throw usage_error("weights must be nonnegative integers");
    const int u = frt_q_unit(N);
    // d_j = q^{sum_i n_i (1_{j<=i} - i/N)}; v-exponent 2u/N * sum_i n_i (N 1_{j<=i} - i)
    const int scale = 2 * u / N;  // 1 for even N, 2 for odd N
    std::vector<int> out;
    for (int j = 1; j <= N; ++j) {
        long acc = 0;
        for (int i = 1; i <= N - 1; ++i)
            acc += static_cast<long>(weights[static_cast<std::size_t>(i - 1)]) *
                   ((j <= i ? N : 0) - i);
        out.push_back(static_cast<int>(scale * acc));
    }
    return out;
}

Instance frt_at_weights(const FrtInstance& formal, const std::vector<int>& weights) {
    std::vector<int> e = weight_exponents(formal.N, weights);
    std::map<std::string, int> pin;
    for (int j = 1; j <= formal.N - 1; ++j)
        pin["d" + std::to_string(j)] = e[static_cast<std::size_t>(j - 1)];
    return formal.base.substituted(pin);
}

CyclicSubmodule build_frt_rep(const FrtInstance& formal, const std::vector<int>& weights,
                              int dim_cutoff) {
    Instance pinned = frt_at_weights(formal, weights);
    return build_cyclic_submodule(pinned.twisted(), dim_cutoff);
}

} // namespace qorbit
