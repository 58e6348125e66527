#include "qorbit/serialize.hpp"

#include "qorbit/text.hpp"

namespace qorbit {

Json context_to_json(const ParameterContext& ctx) {
    Json j;
    j["version"] = kFormatVersion;
    j["variables"] = ctx.vars();
    j["q_unit"] = ctx.q_unit();
    if (!ctx.eliminated_name().empty()) {
        j["eliminated"] = ctx.eliminated_name();
        j["eliminated_exponents"] = ctx.eliminated_value();
    }
    return j;
}

ParameterContext context_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    int q_unit = j.at("q_unit").get<int>();
    if (j.contains("eliminated")) {
        // reconstruct the product-one constraint: the eliminated variable is
        // the inverse of the product of the constrained ones
        std::string victim = j.at("eliminated").get<std::string>();
        ExpVec e = j.at("eliminated_exponents").get<ExpVec>();
        std::vector<std::string> constrained;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] != -1)
                throw usage_error("unsupported eliminated-variable exponent vector");
            constrained.push_back(vars[i]);
        }
        constrained.push_back(victim);
        std::vector<std::string> all = vars;
        all.push_back(victim);
        ParameterContext ctx = ParameterContext::with_product_one(all, constrained, q_unit);
        if (!(ctx.vars() == vars) || ctx.eliminated_value() != e)
            throw usage_error("context does not round-trip");
        return ctx;
    }
    return ParameterContext::make(std::move(vars), q_unit);
}

Json laurent_to_json(const LaurentScalar& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json t;
        t["exponents"] = e;
        t["num"] = to_string(numerator(c));
        t["den"] = to_string(denominator(c));
        terms.push_back(std::move(t));
    }
    return terms;
}

LaurentScalar laurent_from_json(const ParameterContext& ctx, const Json& j) {
    LaurentScalar out = LaurentScalar::zero(ctx);
    for (const auto& t : j) {
        ExpVec e = t.at("exponents").get<ExpVec>();
        if (e.size() != ctx.size()) throw usage_error("exponent vector length mismatch");
        BigInt num(t.at("num").get<std::string>());
        BigInt den(t.at("den").get<std::string>());
        if (den == 0) throw usage_error("zero denominator in rational");
        out.add_term(e, Rational(num, den));
    }
    return out;
}

Json scalar_to_json(const Scalar& s) {
    Json j;
    j["num"] = laurent_to_json(s.num());
    j["den"] = laurent_to_json(s.den());
    return j;
}

Scalar scalar_from_json(const ParameterContext& ctx, const Json& j) {
    LaurentScalar num = laurent_from_json(ctx, j.at("num"));
    LaurentScalar den = laurent_from_json(ctx, j.at("den"));
    return Scalar(std::move(num), std::move(den));
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["n"] = m.n();
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.n(); ++k) row.push_back(scalar_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const ParameterContext& ctx, const Json& j) {
    int n = j.at("n").get<int>();
    Matrix m(n, ctx);
    const Json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != n) throw usage_error("matrix row count mismatch");
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n)
            throw usage_error("matrix column count mismatch");
        for (int k = 0; k < n; ++k)
            m.at(i, k) = scalar_from_json(ctx, row[static_cast<std::size_t>(k)]);
    }
    return m;
}

Json cpoly_to_json(const CPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) {
        Json t;
        t["word"] = w;
        t["coeff"] = scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

CPolynomial cpoly_from_json(const CellPtr& cell, const Json& j) {
    CPolynomial out = CPolynomial::zero(cell);
    for (const auto& t : j) {
        Word w = t.at("word").get<Word>();
        Scalar c = scalar_from_json(cell->context(), t.at("coeff"));
        out = out + CPolynomial::monomial(cell, std::move(w), std::move(c));
    }
    return out;
}

Json cell_to_json(const CellAlgebra& cell) {
    Json j;
    j["version"] = kFormatVersion;
    j["context"] = context_to_json(cell.context());
    j["generators"] = cell.names();
    Json rules = Json::array();
    for (const auto& r : cell.rules()) {
        Json jr;
        jr["lhs"] = r.lhs;
        Json rhs = Json::array();
        for (const auto& [w, c] : r.rhs) {
            Json t;
            t["word"] = w;
            t["coeff"] = scalar_to_json(c);
            rhs.push_back(std::move(t));
        }
        jr["rhs"] = std::move(rhs);
        rules.push_back(std::move(jr));
    }
    j["rules"] = std::move(rules);
    return j;
}

CellPtr cell_from_json(const Json& j) {
    ParameterContext ctx = context_from_json(j.at("context"));
    std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
    std::vector<CellAlgebra::Rule> rules;
    for (const auto& jr : j.at("rules")) {
        CellAlgebra::Rule r;
        r.lhs = jr.at("lhs").get<Word>();
        for (const auto& t : jr.at("rhs")) {
            Word w = t.at("word").get<Word>();
            Scalar c = scalar_from_json(ctx, t.at("coeff"));
            if (!c.is_zero()) r.rhs.emplace(std::move(w), std::move(c));
        }
        rules.push_back(std::move(r));
    }
    return CellAlgebra::create(std::move(ctx), std::move(names), std::move(rules));
}

Json action_table_to_json(const ActionTable& t) {
    Json j;
    j["version"] = kFormatVersion;
    j["context"] = context_to_json(t.algebra()->context());
    Json entries = Json::array();
    for (std::size_t g = 0; g < t.algebra()->size(); ++g)
        for (std::size_t c = 0; c < t.cell()->size(); ++c) {
            Json e;
            e["algebra"] = t.algebra()->name(g);
            e["cell"] = t.cell()->name(c);
            e["value"] = cpoly_to_json(t.value(static_cast<int>(g), static_cast<int>(c)));
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

ActionPtr action_table_from_json(const GenSetPtr& algebra, const CellPtr& cell,
                                 const Json& j) {
    std::vector<std::vector<CPolynomial>> values(
        algebra->size(),
        std::vector<CPolynomial>(cell->size(), CPolynomial::zero(cell)));
    std::vector<std::vector<bool>> seen(algebra->size(),
                                        std::vector<bool>(cell->size(), false));
    for (const auto& e : j.at("entries")) {
        int g = algebra->index_of(e.at("algebra").get<std::string>());
        int c = cell->index_of(e.at("cell").get<std::string>());
        if (g < 0 || c < 0) throw usage_error("action table references unknown generators");
        values[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] =
            cpoly_from_json(cell, e.at("value"));
        seen[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = true;
    }
    for (std::size_t g = 0; g < algebra->size(); ++g)
        for (std::size_t c = 0; c < cell->size(); ++c)
            if (!seen[g][c])
                throw usage_error("action table misses the entry (" + algebra->name(g) +
                                  ", " + cell->name(c) + ")");
    return ActionTable::create(algebra, cell, std::move(values));
}

Json report_to_json(const Report& r) {
    Json j;
    j["version"] = kFormatVersion;
    j["suite"] = r.suite;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["id"] = c.id;
        jc["detail"] = c.detail;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) jc["witness"] = c.witness;
        checks.push_back(std::move(jc));
    }
    j["checks"] = std::move(checks);
    j["status"] = r.all_passed() ? "pass" : "fail";
    return j;
}

RepArchive make_archive(const std::string& instance,
                        std::vector<std::pair<std::string, std::string>> parameters,
                        const CyclicSubmodule& mod) {
    RepArchive a;
    a.instance = instance;
    a.parameters = std::move(parameters);
    a.ctx = mod.rep.matrices.empty() ? ParameterContext()
                                     : mod.rep.matrices.front().context();
    for (const auto& b : mod.basis) a.basis.push_back(b.render());
    a.generator_names = mod.rep.algebra->names();
    a.matrices = mod.rep.matrices;
    return a;
}

Json archive_to_json(const RepArchive& a) {
    Json j;
    j["version"] = kFormatVersion;
    j["scalar_encoding"] = kScalarEncoding;
    Json inst;
    inst["name"] = a.instance;
    Json params = Json::object();
    for (const auto& [k, v] : a.parameters) params[k] = v;
    inst["parameters"] = std::move(params);
    j["instance"] = std::move(inst);
    j["context"] = context_to_json(a.ctx);
    j["basis"] = a.basis;
    Json gens = Json::object();
    for (std::size_t g = 0; g < a.generator_names.size(); ++g)
        gens[a.generator_names[g]] = matrix_to_json(a.matrices[g]);
    j["generators"] = std::move(gens);
    return j;
}

RepArchive archive_from_json(const Json& j) {
    if (j.at("scalar_encoding").get<std::string>() != kScalarEncoding)
        throw usage_error("unsupported scalar encoding");
    RepArchive a;
    a.instance = j.at("instance").at("name").get<std::string>();
    for (const auto& [k, v] : j.at("instance").at("parameters").items())
        a.parameters.emplace_back(k, v.get<std::string>());
    a.ctx = context_from_json(j.at("context"));
    a.basis = j.at("basis").get<std::vector<std::string>>();
    for (const auto& [name, jm] : j.at("generators").items()) {
        a.generator_names.push_back(name);
        a.matrices.push_back(matrix_from_json(a.ctx, jm));
    }
    return a;
}

Json archive_evaluated(const RepArchive& a, const std::string& var, const Rational& value) {
    if (value == 0) throw usage_error("evaluation point must be nonzero");
    Json j;
    j["version"] = kFormatVersion;
    j["instance"] = a.instance;
    j["evaluated_at"] = Json{{var, to_string(value)}};
    const int unit = 2 * a.ctx.q_unit();

    auto eval_scalar = [&](const Scalar& s) -> Rational {
        auto eval_laurent = [&](const LaurentScalar& l) -> Rational {
            Rational acc(0);
            for (const auto& [e, c] : l.terms()) {
                for (std::size_t i = 1; i < e.size(); ++i)
                    if (e[i] != 0)
                        throw usage_error("archive still carries formal parameters");
                Rational t = c;
                int p = e.empty() ? 0 : e[0];
                if (var == "q") {
                    if (p % unit != 0)
                        throw usage_error(
                            "archive has fractional q-powers; substitute v instead");
                    p /= unit;
                }
                Rational base = p >= 0 ? value : Rational(denominator(value), numerator(value));
                for (int k = 0; k < std::abs(p); ++k) t *= base;
                acc += t;
            }
            return acc;
        };
        Rational den = eval_laurent(s.den());
        if (den == 0) throw usage_error("evaluation point hits a pole");
        return eval_laurent(s.num()) / den;
    };

    j["basis"] = a.basis;
    Json gens = Json::object();
    for (std::size_t g = 0; g < a.generator_names.size(); ++g) {
        const Matrix& m = a.matrices[g];
        Json rows = Json::array();
        for (int r = 0; r < m.n(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < m.n(); ++c) row.push_back(to_string(eval_scalar(m.at(r, c))));
            rows.push_back(std::move(row));
        }
        gens[a.generator_names[g]] = std::move(rows);
    }
    j["generators"] = std::move(gens);
    return j;
}

StructureSet structure_from_json(const Json& j) {
    ParameterContext ctx = context_from_json(j.at("context"));
    int n = j.at("n").get<int>();
    Matrix R = matrix_from_json(ctx, j.at("R"));
    if (R.n() != n * n) throw usage_error("R must be n^2 x n^2");
    if (j.contains("C")) {
        Matrix C = matrix_from_json(ctx, j.at("C"));
        if (C.n() != n) throw usage_error("C must be n x n");
        StructureSet s;
        s.n = n;
        s.P = flip_matrix(n, ctx);
        s.K = k_from_c(C);
        s.Q = R.diagonal_part();
        s.R = std::move(R);
        return s;
    }
    return derive_structure(ctx, n, std::move(R));
}

} // namespace qorbit
