#include "qorbit/polygcd.hpp"

#include <algorithm>

namespace qorbit {

namespace {

void add_term(TermMap& m, const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

int degree_in(const TermMap& p, std::size_t var) {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : p) {
        (void)c;
        if (first || e[var] > d) d = e[var];
        first = false;
    }
    return d;
}

bool involves(const TermMap& p, std::size_t var) {
    for (const auto& [e, c] : p) {
        (void)c;
        if (e[var] != 0) return true;
    }
    return false;
}

// coefficient of x_var^deg, with the var slot zeroed
TermMap coeff_at(const TermMap& p, std::size_t var, int deg) {
    TermMap out;
    for (const auto& [e, c] : p) {
        if (e[var] != deg) continue;
        ExpVec e2 = e;
        e2[var] = 0;
        out.emplace(std::move(e2), c);
    }
    return out;
}

TermMap shift_var(const TermMap& p, std::size_t var, int by) {
    TermMap out;
    for (const auto& [e, c] : p) {
        ExpVec e2 = e;
        e2[var] += by;
        out.emplace(std::move(e2), c);
    }
    return out;
}

// divide away the per-variable minimum exponents (monomial content)
TermMap drop_monomial_content(const TermMap& p) {
    if (p.empty()) return p;
    ExpVec m = p.begin()->first;
    for (const auto& [e, c] : p) {
        (void)c;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    TermMap out;
    for (const auto& [e, c] : p) {
        ExpVec e2 = e;
        for (std::size_t i = 0; i < m.size(); ++i) e2[i] -= m[i];
        out.emplace(std::move(e2), c);
    }
    return out;
}

TermMap make_monic(TermMap p) {
    if (p.empty()) return p;
    Rational lead = p.rbegin()->second;
    if (lead == 1) return p;
    for (auto& [e, c] : p) c /= lead;
    return p;
}

TermMap canonical_unit(TermMap p) { return make_monic(drop_monomial_content(std::move(p))); }

// scales to coprime integer coefficients with a positive lex-leading one;
// keeps pseudo-remainder sequences from exploding bit-length
void make_integer_primitive(TermMap& p) {
    if (p.empty()) return;
    BigInt g = 0, l = 1;
    for (const auto& [e, c] : p) {
        (void)e;
        g = boost::multiprecision::gcd(g, BigInt(boost::multiprecision::abs(numerator(c))));
        l = boost::multiprecision::lcm(l, BigInt(denominator(c)));
    }
    if (g == 0) return;
    Rational f{l, g};
    if (p.rbegin()->second * f < 0) f = -f;
    if (f == 1) return;
    for (auto& [e, c] : p) {
        (void)e;
        c *= f;
    }
}

// gcd of p with a monomial: exponent-wise minimum, coefficient 1
TermMap monomial_gcd(const TermMap& p, const ExpVec& mono) {
    ExpVec m = mono;
    for (const auto& [e, c] : p) {
        (void)c;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    TermMap out;
    out.emplace(std::move(m), Rational(1));
    return out;
}

// gcd of the x_var-coefficients (a polynomial in the remaining variables)
TermMap content_wrt(const TermMap& p, std::size_t var) {
    TermMap acc;
    int d = degree_in(p, var);
    for (int k = 0; k <= d; ++k) {
        TermMap c = coeff_at(p, var, k);
        if (c.empty()) continue;
        acc = acc.empty() ? canonical_unit(std::move(c)) : poly_gcd(std::move(acc), std::move(c));
        if (acc.size() == 1 && acc.begin()->first ==
                ExpVec(acc.begin()->first.size(), 0))
            break;  // content already 1
    }
    return acc;
}

// Univariate specialization probe: evaluate every variable except x_var at
// fixed nonzero points and run monic Euclid.  When the specialization keeps
// both leading coefficients alive and the univariate gcd is constant, the
// true gcd has degree 0 in x_var, so it divides both contents.
// Returns -1 when no conclusive specialization was found.
int specialized_gcd_degree(const TermMap& a, const TermMap& b, std::size_t var) {
    static const int points[][6] = {{2, 3, 5, 7, 11, 13},
                                    {3, 5, 7, 11, 13, 17},
                                    {5, 2, 11, 3, 17, 7}};
    const std::size_t nvars = a.begin()->first.size();
    for (const auto& pts : points) {
        auto specialize = [&](const TermMap& p) {
            int deg = degree_in(p, var);
            std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
            for (const auto& [e, k] : p) {
                Rational t = k;
                for (std::size_t i = 0; i < nvars; ++i) {
                    if (i == var || e[i] == 0) continue;
                    Rational base(pts[i < 6 ? i : 5]);
                    for (int j = 0; j < e[i]; ++j) t *= base;
                }
                c[static_cast<std::size_t>(e[var])] += t;
            }
            return c;
        };
        std::vector<Rational> fa = specialize(a), fb = specialize(b);
        if (fa.back() == 0 || fb.back() == 0) continue;  // leading term collapsed
        // monic univariate Euclid
        auto deg_of = [](const std::vector<Rational>& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d >= 0 && p[static_cast<std::size_t>(d)] == 0) --d;
            return d;
        };
        std::vector<Rational> u = fa, v = fb;
        int du = deg_of(u), dv = deg_of(v);
        while (dv > 0) {
            if (du < dv) {
                std::swap(u, v);
                std::swap(du, dv);
                continue;
            }
            Rational f = u[static_cast<std::size_t>(du)] / v[static_cast<std::size_t>(dv)];
            for (int i = 0; i <= dv; ++i)
                u[static_cast<std::size_t>(du - dv + i)] -=
                    f * v[static_cast<std::size_t>(i)];
            int d2 = deg_of(u);
            if (d2 < 0) {  // v divides u: gcd degree is dv
                return dv;
            }
            du = d2;
            if (du < dv) {
                std::swap(u, v);
                std::swap(du, dv);
            }
        }
        if (dv == 0) return 0;
        if (du == 0) return 0;
    }
    return -1;
}

// pseudo-remainder of a by b with respect to x_var
TermMap prem(TermMap a, const TermMap& b, std::size_t var) {
    const int db = degree_in(b, var);
    const TermMap lb = coeff_at(b, var, db);
    int da = degree_in(a, var);
    while (!a.empty() && (da = degree_in(a, var)) >= db) {
        TermMap la = coeff_at(a, var, da);
        if (la.empty()) break;
        // a := lb*a - la*x^(da-db)*b
        TermMap t = shift_var(poly_mul(la, b), var, da - db);
        a = poly_sub(poly_mul(lb, a), t);
        make_integer_primitive(a);
        if (degree_in(a, var) == da && !a.empty() && !coeff_at(a, var, da).empty())
            throw engine_error("pseudo-remainder failed to reduce degree");
    }
    return a;
}

} // namespace

TermMap poly_mul(const TermMap& a, const TermMap& b) {
    TermMap out;
    if (a.empty() || b.empty()) return out;
    ExpVec e(a.begin()->first.size());
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    return out;
}

TermMap poly_sub(const TermMap& a, const TermMap& b) {
    TermMap out = a;
    for (const auto& [e, c] : b) add_term(out, e, -c);
    return out;
}

TermMap poly_exact_div(const TermMap& a, const TermMap& b) {
    if (b.empty()) throw engine_error("polynomial division by zero");
    TermMap rem = a, out;
    const auto& [eb, cb] = *b.rbegin();  // lex-leading divisor term
    while (!rem.empty()) {
        const auto& [er, cr] = *rem.rbegin();
        ExpVec q(er.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = er[i] - eb[i];
            if (q[i] < 0) throw engine_error("inexact polynomial division");
        }
        Rational qc = cr / cb;
        add_term(out, q, qc);
        TermMap t;
        t.emplace(std::move(q), std::move(qc));
        rem = poly_sub(rem, poly_mul(t, b));
    }
    return out;
}

TermMap poly_gcd(TermMap a, TermMap b) {
    if (a.empty()) return canonical_unit(std::move(b));
    if (b.empty()) return canonical_unit(std::move(a));
    if (a.size() == 1) return monomial_gcd(b, a.begin()->first);
    if (b.size() == 1) return monomial_gcd(a, b.begin()->first);

    const std::size_t nvars = a.begin()->first.size();
    // main variable: last one actually present
    std::size_t var = nvars;
    for (std::size_t i = nvars; i-- > 0;) {
        if (involves(a, i) || involves(b, i)) {
            var = i;
            break;
        }
    }
    if (var == nvars) {  // both constants
        TermMap out;
        out.emplace(ExpVec(nvars, 0), Rational(1));
        return out;
    }

    // divisibility fast paths cover most fraction reductions
    try {
        poly_exact_div(a, b);
        return canonical_unit(b);
    } catch (const engine_error&) {
    }
    try {
        poly_exact_div(b, a);
        return canonical_unit(a);
    } catch (const engine_error&) {
    }

    // a conclusive trivial specialization settles the main-variable degree:
    // the gcd then divides both contents
    if (specialized_gcd_degree(a, b, var) == 0)
        return poly_gcd(content_wrt(a, var), content_wrt(b, var));

    TermMap ca = content_wrt(a, var);
    TermMap cb = content_wrt(b, var);
    TermMap cg = poly_gcd(ca, cb);
    TermMap A = poly_exact_div(a, ca);
    TermMap B = poly_exact_div(b, cb);
    if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);

    TermMap G;
    while (true) {
        if (degree_in(B, var) == 0) {
            // primitive and degree zero in the main variable -> unit
            G.clear();
            G.emplace(ExpVec(nvars, 0), Rational(1));
            break;
        }
        TermMap R = prem(A, B, var);
        if (R.empty()) {
            G = B;
            break;
        }
        R = poly_exact_div(R, content_wrt(R, var));
        make_integer_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    return canonical_unit(poly_mul(cg, G));
}

} // namespace qorbit
