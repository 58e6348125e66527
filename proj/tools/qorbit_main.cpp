// qorbit -- exact computer algebra for twisted module actions of quantized
// enveloping algebras.  Subcommands: verify, rep, phi-eval.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "qorbit/adjoint.hpp"
#include "qorbit/config.hpp"
#include "qorbit/frt.hpp"
#include "qorbit/serialize.hpp"
#include "qorbit/sl2.hpp"
#include "qorbit/text.hpp"

using namespace qorbit;

namespace {

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw usage_error("cannot write to '" + out_path + "'");
        out << j.dump(2) << "\n";
    }
}

struct InstanceSelector {
    std::string name = "sl2";  // sl2 | frt | adjoint
    int n = 2;                 // frt size
    std::string type = "A1";   // adjoint type
};

Instance load_selected(const InstanceSelector& sel) {
    if (sel.name == "sl2") return sl2::load();
    if (sel.name == "frt") return load_frt(sel.n).base;
    if (sel.name == "adjoint") {
        CartanData c = sel.type == "A2" ? CartanData::A2() : CartanData::A1();
        return load_twisted_adjoint(c).base;
    }
    throw usage_error("unknown instance '" + sel.name + "'");
}

std::vector<CPolynomial> sample_probes(const Instance& inst, int max_degree, int count,
                                       std::mt19937& rng) {
    std::vector<CPolynomial> probes{CPolynomial::one(inst.cell)};
    std::uniform_int_distribution<int> len(0, max_degree);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(inst.cell->size()) - 1);
    for (int i = 0; i < count; ++i) {
        Word w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) x = gen(rng);
        probes.push_back(CPolynomial::monomial(inst.cell, std::move(w), Scalar::one(inst.ctx)));
    }
    return probes;
}

Word sample_word(const Instance& inst, int max_len, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(inst.algebra->size()) - 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = gen(rng);
    return w;
}

Report run_coassoc(const InstanceSelector& sel, int max_len) {
    Instance inst = load_selected(sel);
    return check_coassociativity(inst.algebra, all_words_up_to(inst.algebra, max_len));
}

Report run_leibniz(const InstanceSelector& sel, const Config& cfg) {
    Instance inst = load_selected(sel);
    TwistedAction tw = inst.twisted();
    std::mt19937 rng(cfg.seed);
    std::vector<TwistedLeibnizSample> samples;
    std::vector<CPolynomial> probes = sample_probes(inst, cfg.probe_degree,
                                                    2 * cfg.sample_count, rng);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(probes.size()) - 1);
    for (int i = 0; i < cfg.sample_count; ++i)
        samples.push_back({sample_word(inst, 2, rng), probes[static_cast<std::size_t>(
                                                          pick(rng))],
                           probes[static_cast<std::size_t>(pick(rng))]});
    return check_generalized_leibniz(tw, samples);
}

Report run_module_law(const InstanceSelector& sel, const Config& cfg) {
    Instance inst = load_selected(sel);
    TwistedAction tw = inst.twisted();
    std::mt19937 rng(cfg.seed);
    std::vector<CPolynomial> probes = sample_probes(inst, cfg.probe_degree, 8, rng);
    std::vector<TwistedLawSample> samples;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(probes.size()) - 1);
    for (int i = 0; i < cfg.sample_count; ++i)
        samples.push_back({sample_word(inst, 2, rng), sample_word(inst, 2, rng),
                           probes[static_cast<std::size_t>(pick(rng))]});
    return check_twisted_module_law(tw, samples, inst.relations, probes);
}

Report run_phi_relations(const InstanceSelector& sel) {
    Instance inst = load_selected(sel);
    Report rep = inst.certificate.report;
    rep.suite = "phi-relations";
    rep.merge(check_phi_relations(*inst.phi, inst.relations, inst.certificate));
    if (sel.name == "adjoint")
        rep.merge(check_phi_vanishes(*inst.phi, inst.closure.right, "phi-right-closure"));
    return rep;
}

Report run_eq35(const std::string& sigma, int n_max) {
    Instance formal = sl2::load();
    if (sigma == "formal") return sl2::verify_closed_forms(formal, n_max);
    int s = std::stoi(sigma);
    Instance pinned = sl2::at_sigma(formal, s);
    Report rep;
    rep.suite = "eq35";
    Substitution sub =
        Substitution::pin(formal.ctx, pinned.ctx, {{"s", s * formal.ctx.q_unit()}});
    TwistedAction tf = formal.twisted();
    TwistedAction tp = pinned.twisted();
    for (int n = 0; n <= n_max; ++n) {
        CPolynomial zn = CPolynomial::monomial(formal.cell,
                                               Word(static_cast<std::size_t>(n), 0),
                                               Scalar::one(formal.ctx));
        CPolynomial zn_p = CPolynomial::monomial(pinned.cell,
                                                 Word(static_cast<std::size_t>(n), 0),
                                                 Scalar::one(pinned.ctx));
        for (std::size_t g = 0; g < formal.algebra->size(); ++g) {
            CPolynomial expect =
                tf.act_word({static_cast<int>(g)}, zn).substituted(pinned.cell, sub);
            CPolynomial got = tp.act_word({static_cast<int>(g)}, zn_p);
            bool ok = got == expect;
            rep.add("eq35." + formal.algebra->name(g) + ".n" + std::to_string(n),
                    "pinned action matches the formal closed form", ok,
                    ok ? "" : got.render() + " vs " + expect.render());
        }
    }
    return rep;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

Report run_ybe(const std::string& series, int n, const std::string& file) {
    if (!file.empty()) {
        StructureSet s = structure_from_json(read_json_file(file));
        return ybe_check(s.R);
    }
    if (series != "A") throw usage_error("shipped construction covers the A series only");
    ParameterContext ctx = ParameterContext::make({"v"});
    return ybe_check(build_a_series(ctx, n).R);
}

Report run_k_identities(const std::string& series, int n, const std::string& file) {
    StructureSet s;
    if (!file.empty()) {
        s = structure_from_json(read_json_file(file));
    } else {
        if (series != "A") throw usage_error("shipped construction covers the A series only");
        ParameterContext ctx = ParameterContext::make({"v"});
        s = build_a_series(ctx, n);
    }
    return structure_suite(s);
}

Report run_eq52(int n) { return verify_quadratic_phi(load_frt(n)); }

Report run_adjoint_suite(const std::string& type, const std::vector<int>& lambda,
                         const Config& cfg) {
    CartanData c = type == "A2" ? CartanData::A2() : CartanData::A1();
    AdjointInstance inst = load_twisted_adjoint(c);
    Report rep;
    rep.suite = "adjoint";
    rep.merge(check_antipode_axiom(inst));
    rep.merge(confluence_probe(inst.base.cell, cfg.probe_degree));

    std::mt19937 rng(cfg.seed);
    std::vector<CPolynomial> probes = sample_probes(inst.base, cfg.probe_degree, 24, rng);
    rep.merge(check_relations_kill(*inst.base.action, inst.base.relations, probes));
    rep.merge(check_phi_relations(*inst.base.phi, inst.base.relations, inst.base.certificate));
    rep.merge(check_phi_vanishes(*inst.base.phi, inst.base.closure.right,
                                 "phi-right-closure"));

    // lambda = 0 recovers the base action
    {
        std::vector<int> zeros(static_cast<std::size_t>(c.rank), 0);
        Instance p0 = adjoint_at_lambda(inst, zeros);
        TwistedAction tw = p0.twisted();
        std::mt19937 rng0(cfg.seed);
        std::vector<CPolynomial> probes0 = sample_probes(p0, cfg.probe_degree, 12, rng0);
        bool ok = true;
        std::string witness;
        for (int k = 0; k < 50 && ok; ++k) {
            Word x = sample_word(p0, 2, rng0);
            for (const auto& f : probes0) {
                if (tw.act_word(x, f) != p0.action->act_word(x, f)) {
                    ok = false;
                    witness = render_word(*p0.algebra, x) + " on " + f.render();
                    break;
                }
            }
        }
        rep.add("adjoint.character-zero", "weight zero reproduces the base action", ok,
                witness);
    }

    if (!lambda.empty()) {
        Instance p = adjoint_at_lambda(inst, lambda);
        CyclicSubmodule mod = build_cyclic_submodule(p.twisted(), cfg.dim_cutoff);
        rep.add("adjoint.module-finite", "cyclic submodule closes below the cutoff",
                mod.finite, mod.finite ? "" : "cutoff exceeded");
        if (mod.finite) rep.merge(check_matrix_relations(mod.rep, p.relations));
    }
    return rep;
}

std::pair<std::string, Rational> parse_substitute(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos)
        throw usage_error("--substitute expects q=<rational> or v=<rational>");
    std::string var = text.substr(0, eq);
    if (var != "q" && var != "v")
        throw usage_error("--substitute supports only the base variable (q or v)");
    return {var, rational_from_string(text.substr(eq + 1))};
}

Json rep_summary(const RepArchive& a) {
    Json j;
    j["dimension"] = a.basis.size();
    Json lw = Json::object();
    for (std::size_t g = 0; g < a.generator_names.size(); ++g) {
        const Matrix& m = a.matrices[g];
        if (m.n() == 0) continue;
        bool diag0 = true;
        for (int r = 1; r < m.n(); ++r)
            if (!m.at(r, 0).is_zero()) {
                diag0 = false;
                break;
            }
        if (diag0 && !m.at(0, 0).is_zero())
            lw[a.generator_names[g]] = render_scalar(m.at(0, 0));
    }
    j["action_on_cyclic_vector"] = std::move(lw);
    return j;
}

int cmd_verify(const std::string& suite, const InstanceSelector& sel,
               const std::string& sigma, int n_max, const std::string& series, int n,
               const std::vector<int>& weights, const std::string& type,
               std::vector<int> lambda, const std::string& file, const std::string& out,
               const Config& cfg) {
    (void)weights;
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (suite == "coassoc")
        rep = run_coassoc(sel, 3);
    else if (suite == "leibniz")
        rep = run_leibniz(sel, cfg);
    else if (suite == "module-law")
        rep = run_module_law(sel, cfg);
    else if (suite == "phi-relations")
        rep = run_phi_relations(sel);
    else if (suite == "eq35")
        rep = run_eq35(sigma, n_max);
    else if (suite == "ybe")
        rep = run_ybe(series, n, file);
    else if (suite == "k-identities")
        rep = run_k_identities(series, n, file);
    else if (suite == "eq52")
        rep = run_eq52(n);
    else if (suite == "adjoint")
        rep = run_adjoint_suite(type, lambda, cfg);
    else
        throw usage_error("unknown suite '" + suite + "'");
    if (rep.suite.empty() || rep.suite != suite) rep.suite = suite;
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "suite " << suite << ": " << rep.checks.size() << " checks, "
              << rep.failures() << " failures, " << dt << " ms\n";
    emit(report_to_json(rep), out);
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and construction of twisted module actions "
                 "of quantized enveloping algebras"};
    app.require_subcommand(1);

    Config cfg = Config::load_default();

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite,
                       "one of: coassoc, leibniz, module-law, phi-relations, eq35, ybe, "
                       "k-identities, eq52, adjoint")
        ->required();
    InstanceSelector sel;
    verify->add_option("--instance", sel.name, "sl2 | frt | adjoint (default sl2)");
    std::string sigma = "formal";
    verify->add_option("--sigma", sigma, "formal or a nonnegative integer");
    int n_max = 8;
    verify->add_option("--n-max", n_max, "largest monomial degree checked");
    std::string series = "A";
    verify->add_option("--series", series, "matrix series (A)");
    int nval = 2;
    verify->add_option("--n", nval, "matrix size N");
    std::string type = "A1";
    verify->add_option("--type", type, "A1 | A2");
    std::vector<int> lambda;
    verify->add_option("--lambda", lambda, "weight pairings, comma separated")
        ->delimiter(',');
    std::string file;
    verify->add_option("--file", file, "JSON matrix/structure file");
    std::string out;
    verify->add_option("--out", out, "write the JSON report here instead of stdout");
    verify->add_option("--samples", cfg.sample_count, "random sample count");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--dim-cutoff", cfg.dim_cutoff, "closure cutoff");

    // ---- rep
    auto* rep = app.add_subcommand("rep", "build representation matrices");
    std::string inst_name;
    rep->add_option("instance", inst_name, "sl2 | frt | adjoint")->required();
    int rep_sigma = 0;
    rep->add_option("--sigma", rep_sigma, "lowest-weight parameter (sl2)");
    std::string rep_series = "A";
    rep->add_option("--series", rep_series, "matrix series (A)");
    int rep_n = 2;
    rep->add_option("--n", rep_n, "matrix size N (frt)");
    std::vector<int> rep_weights;
    rep->add_option("--weights", rep_weights, "fundamental-weight multiplicities (frt)")
        ->delimiter(',');
    std::string rep_type = "A1";
    rep->add_option("--type", rep_type, "A1 | A2 (adjoint)");
    std::vector<int> rep_lambda;
    rep->add_option("--lambda", rep_lambda, "weight pairings (adjoint)")->delimiter(',');
    std::string rep_out;
    rep->add_option("--out", rep_out, "archive path (stdout otherwise)");
    std::string rep_format = "json";
    rep->add_option("--format", rep_format, "json");
    std::string substitute;
    rep->add_option("--substitute", substitute, "evaluate at q=<rational> or v=<rational>");
    rep->add_option("--dim-cutoff", cfg.dim_cutoff, "closure cutoff");

    // ---- phi-eval
    auto* pe = app.add_subcommand("phi-eval", "evaluate the twist map on a word");
    std::string pe_inst;
    pe->add_option("instance", pe_inst, "sl2 | frt | adjoint")->required();
    std::string pe_word;
    pe->add_option("--word", pe_word, "whitespace-separated generator names")->required();
    std::string pe_sigma = "formal";
    pe->add_option("--sigma", pe_sigma, "formal or an integer (sl2)");
    int pe_n = 2;
    pe->add_option("--n", pe_n, "matrix size N (frt)");
    std::string pe_type = "A1";
    pe->add_option("--type", pe_type, "A1 | A2 (adjoint)");
    std::vector<int> pe_lambda;
    pe->add_option("--lambda", pe_lambda, "weight pairings (adjoint)")->delimiter(',');
    std::string pe_out;
    pe->add_option("--out", pe_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(suite, sel, sigma, n_max, series, nval, {}, type, lambda, file,
                              out, cfg);

        if (rep->parsed()) {
            CyclicSubmodule mod;
            std::vector<std::pair<std::string, std::string>> params;
            if (inst_name == "sl2") {
                if (rep_sigma < 0) throw usage_error("--sigma must be a nonnegative integer");
                Instance formal = sl2::load();
                mod = sl2::build_rep(formal, rep_sigma, cfg.dim_cutoff);
                params = {{"sigma", std::to_string(rep_sigma)}};
            } else if (inst_name == "frt") {
                if (rep_series != "A")
                    throw usage_error("shipped construction covers the A series only");
                FrtInstance formal = load_frt(rep_n);
                if (static_cast<int>(rep_weights.size()) != rep_n - 1)
                    throw usage_error("expected " + std::to_string(rep_n - 1) + " weights");
                mod = build_frt_rep(formal, rep_weights, cfg.dim_cutoff);
                std::string ws;
                for (std::size_t i = 0; i < rep_weights.size(); ++i)
                    ws += (i ? "," : "") + std::to_string(rep_weights[i]);
                params = {{"series", "A"}, {"n", std::to_string(rep_n)}, {"weights", ws}};
            } else if (inst_name == "adjoint") {
                CartanData c = rep_type == "A2" ? CartanData::A2() : CartanData::A1();
                AdjointInstance formal = load_twisted_adjoint(c);
                if (static_cast<int>(rep_lambda.size()) != c.rank)
                    throw usage_error("expected " + std::to_string(c.rank) +
                                      " weight pairings");
                Instance pinned = adjoint_at_lambda(formal, rep_lambda);
                mod = build_cyclic_submodule(pinned.twisted(), cfg.dim_cutoff);
                std::string ls;
                for (std::size_t i = 0; i < rep_lambda.size(); ++i)
                    ls += (i ? "," : "") + std::to_string(rep_lambda[i]);
                params = {{"type", rep_type}, {"lambda", ls}};
            } else {
                throw usage_error("unknown instance '" + inst_name + "'");
            }

            if (!mod.finite) {
                std::cerr << "closure exceeded the cutoff (" << cfg.dim_cutoff
                          << "); explored " << mod.explored
                          << " dimensions without closing\n";
                return 3;
            }
            if (rep_format != "json") throw usage_error("--format supports json");
            RepArchive archive = make_archive(inst_name, std::move(params), mod);
            std::cerr << "dimension " << archive.basis.size() << "\n";
            std::cerr << rep_summary(archive).dump() << "\n";
            if (!substitute.empty()) {
                auto [var, value] = parse_substitute(substitute);
                emit(archive_evaluated(archive, var, value), rep_out);
            } else {
                emit(archive_to_json(archive), rep_out);
            }
            return 0;
        }

        if (pe->parsed()) {
            Instance inst;
            if (pe_inst == "sl2") {
                inst = sl2::load();
                if (pe_sigma != "formal")
                    inst = sl2::at_sigma(inst, std::stoi(pe_sigma));
            } else if (pe_inst == "frt") {
                inst = load_frt(pe_n).base;
            } else if (pe_inst == "adjoint") {
                CartanData c = pe_type == "A2" ? CartanData::A2() : CartanData::A1();
                AdjointInstance formal = load_twisted_adjoint(c);
                inst = pe_lambda.empty() ? formal.base
                                         : adjoint_at_lambda(formal, pe_lambda);
            } else {
                throw usage_error("unknown instance '" + pe_inst + "'");
            }
            FreeElement x = parse_element(inst.algebra, pe_word);
            CPolynomial value = inst.phi->value(x);
            std::cout << value.render() << "\n";
            Json j;
            j["version"] = kFormatVersion;
            j["instance"] = pe_inst;
            j["word"] = pe_word;
            j["value"] = cpoly_to_json(value);
            j["rendered"] = value.render();
            emit(j, pe_out);
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const engine_error& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
