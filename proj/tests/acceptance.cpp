// Acceptance suite: every criterion is exact symbolic equality (zero
// tolerance); the two timed criteria also enforce their wall-clock budgets.
// Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "qorbit/adjoint.hpp"
#include "qorbit/frt.hpp"
#include "qorbit/serialize.hpp"
#include "qorbit/sl2.hpp"
#include "qorbit/text.hpp"

using namespace qorbit;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool require(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

// ---------------------------------------------------------------- 1
bool crit_sl2_modules(std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    Instance formal = sl2::load();
    bool ok = true;
    for (int sigma = 0; sigma <= 4; ++sigma) {
        CyclicSubmodule mod = sl2::build_rep(formal, sigma, 64);
        ok &= require(mod.finite, why, "closure did not terminate");
        ok &= require(static_cast<int>(mod.basis.size()) == sigma + 1, why,
                      "dim != sigma + 1 at sigma = " + std::to_string(sigma));
        Instance pinned = sl2::at_sigma(formal, sigma);
        ok &= require(check_matrix_relations(mod.rep, pinned.relations).all_passed(), why,
                      "a relation of R' is nonzero on the module");
        TwistedAction tw = pinned.twisted();
        ok &= require(tw.act_word({sl2::kXm}, CPolynomial::one(pinned.cell)).is_zero(), why,
                      "X- does not annihilate the unit");
        Matrix qH = mod.rep.evaluate_word({sl2::kQHp, sl2::kQHp});
        ok &= require(qH.at(0, 0) == Scalar::q_power(pinned.ctx, -sigma), why,
                      "lowest weight differs from q^{-sigma}");
        for (int r = 1; r < qH.n(); ++r)
            ok &= require(qH.at(r, 0).is_zero(), why, "unit is not a weight vector");
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= require(dt < 5.0, why, "runtime exceeded 5 s");
    return ok;
}

// ---------------------------------------------------------------- 2
bool crit_closed_forms(std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    Instance formal = sl2::load();
    Report rep = sl2::verify_closed_forms(formal, 8);
    bool ok = require(rep.all_passed(), why, "closed-form mismatch: " +
                                                 (rep.failures() ? rep.checks.front().id : ""));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= require(dt < 5.0, why, "runtime exceeded 5 s");
    return ok;
}

// ---------------------------------------------------------------- 3
bool crit_phi_factorization(std::string& why) {
    Instance s = sl2::load();
    bool ok = require(s.certificate.ok, why, "sl2 certificate missing");
    ok &= require(check_phi_relations(*s.phi, s.relations, s.certificate).all_passed(), why,
                  "phi(R') != 0 for sl2");
    for (int n : {2, 3}) {
        FrtInstance f = load_frt(n);
        ok &= require(f.base.certificate.ok, why, "frt certificate missing");
        ok &= require(
            check_phi_relations(*f.base.phi, f.base.relations, f.base.certificate)
                .all_passed(),
            why, "phi(R) != 0 for frt N=" + std::to_string(n));
    }
    // negative control: perturbed phi must fail
    std::vector<CPolynomial> vals;
    for (std::size_t g = 0; g < s.algebra->size(); ++g)
        vals.push_back(s.phi->generator_value(static_cast<int>(g)));
    vals[sl2::kXm] = CPolynomial::generator(s.cell, 0);
    PhiPtr bad = PhiMap::create(s.action, vals);
    ok &= require(!check_phi_relations(*bad, s.relations, s.certificate).all_passed(), why,
                  "perturbed phi passed");
    return ok;
}

// ---------------------------------------------------------------- 4
bool crit_quadratic_families(std::string& why) {
    bool ok = true;
    for (int n : {2, 3}) {
        Report rep = verify_quadratic_phi(load_frt(n));
        ok &= require(rep.all_passed(), why,
                      "quadratic family mismatch at N=" + std::to_string(n));
    }
    return ok;
}

// ---------------------------------------------------------------- 5
bool crit_rmatrix_suite(std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    ParameterContext ctx = ParameterContext::make({"v"});
    bool ok = true;
    for (int n : {2, 3, 4}) {
        StructureSet s = build_a_series(ctx, n);
        ok &= require(ybe_check(s.R).all_passed(), why,
                      "braid identity fails at N=" + std::to_string(n));
        ok &= require(s.K.is_zero(), why, "K != 0 for the A series");
        ok &= require(k_reconstruction_check(s).all_passed(), why,
                      "difference identity fails at N=" + std::to_string(n));
        if (n <= 3) {
            ok &= require(q_symmetry_check(s).all_passed(), why, "Q symmetry fails");
            ok &= require(k_identities_check(s).all_passed(), why,
                          "K/Q identities fail at N=" + std::to_string(n));
        }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok &= require(dt < 30.0, why, "runtime exceeded 30 s");
    return ok;
}

// ---------------------------------------------------------------- 6
bool crit_generic_engine(std::string& why) {
    bool ok = true;
    std::mt19937 rng(20240811);
    Instance instances[] = {sl2::load(), load_frt(2).base,
                            load_twisted_adjoint(CartanData::A2()).base};
    for (const Instance& inst : instances) {
        ok &= require(
            check_coassociativity(inst.algebra, all_words_up_to(inst.algebra, 3)).all_passed(),
            why, "coassociativity fails for " + inst.name);

        TwistedAction tw = inst.twisted();
        std::uniform_int_distribution<int> glen(0, 2),
            cgen(0, static_cast<int>(inst.cell->size()) - 1),
            agen(0, static_cast<int>(inst.algebra->size()) - 1), clen(0, 2);
        auto rand_word = [&]() {
            Word w(static_cast<std::size_t>(glen(rng)));
            for (auto& x : w) x = agen(rng);
            return w;
        };
        auto rand_probe = [&]() {
            Word w(static_cast<std::size_t>(clen(rng)));
            for (auto& x : w) x = cgen(rng);
            return CPolynomial::monomial(inst.cell, std::move(w), Scalar::one(inst.ctx));
        };

        std::vector<TwistedLeibnizSample> ls;
        for (int i = 0; i < 100; ++i) ls.push_back({rand_word(), rand_probe(), rand_probe()});
        ok &= require(check_generalized_leibniz(tw, ls).all_passed(), why,
                      "generalized Leibniz fails for " + inst.name);

        std::vector<TwistedLawSample> ms;
        for (int i = 0; i < 100; ++i) ms.push_back({rand_word(), rand_word(), rand_probe()});
        ok &= require(check_twisted_module_law(tw, ms, {}, {}).all_passed(), why,
                      "module law fails for " + inst.name);

        // trivial character: phi = eps recovers the base action
        std::vector<CPolynomial> evals;
        for (std::size_t g = 0; g < inst.algebra->size(); ++g)
            evals.push_back(CPolynomial::constant(inst.cell, inst.algebra->eps(g)));
        TwistedAction te(PhiMap::create(inst.action, evals));
        for (int i = 0; i < 50; ++i) {
            Word x = rand_word();
            CPolynomial f = rand_probe();
            ok &= require(te.act_word(x, f) == inst.action->act_word(x, f), why,
                          "trivial character does not recover xi for " + inst.name);
        }
    }
    return ok;
}

// ---------------------------------------------------------------- 7
bool crit_twisted_adjoint(std::string& why) {
    bool ok = true;
    for (const char* type : {"A1", "A2"}) {
        CartanData c = std::string(type) == "A2" ? CartanData::A2() : CartanData::A1();
        AdjointInstance inst = load_twisted_adjoint(c);
        std::vector<CPolynomial> probes;
        for (const auto& w : all_words_up_to(inst.base.algebra, 0)) (void)w;
        // degree <= 3 normal monomials over the nilpotent algebra
        std::vector<Word> stack{Word{}};
        for (int len = 1; len <= 3; ++len) {
            std::size_t end = stack.size();
            for (std::size_t i = 0; i < end; ++i)
                if (static_cast<int>(stack[i].size()) == len - 1)
                    for (int g = 0; g < static_cast<int>(inst.base.cell->size()); ++g) {
                        Word w = stack[i];
                        w.push_back(g);
                        stack.push_back(std::move(w));
                    }
        }
        for (const auto& w : stack)
            if (inst.base.cell->is_normal(w))
                probes.push_back(
                    CPolynomial::monomial(inst.base.cell, w, Scalar::one(inst.base.ctx)));
        ok &= require(
            check_relations_kill(*inst.base.action, inst.base.relations, probes).all_passed(),
            why, std::string("relation kill fails for ") + type);
        ok &= require(check_phi_relations(*inst.base.phi, inst.base.relations,
                                          inst.base.certificate)
                          .all_passed(),
                      why, std::string("phi check fails for ") + type);
        ok &= require(check_phi_vanishes(*inst.base.phi, inst.base.closure.right, "rc")
                          .all_passed(),
                      why, std::string("phi does not kill the right closure for ") + type);

        // weight zero reproduces xi
        std::vector<int> zeros(static_cast<std::size_t>(c.rank), 0);
        Instance p0 = adjoint_at_lambda(inst, zeros);
        TwistedAction tw0 = p0.twisted();
        for (const auto& w : all_words_up_to(p0.algebra, 2)) {
            CPolynomial f = CPolynomial::generator(p0.cell, 0);
            ok &= require(tw0.act_word(w, f) == p0.action->act_word(w, f), why,
                          std::string("weight zero differs from xi for ") + type);
            if (!ok) break;
        }
    }

    // A1 modules match the sl2 modules under the documented dictionary
    AdjointInstance a1 = load_twisted_adjoint(CartanData::A1());
    Instance s = sl2::load();
    for (int m = 0; m <= 3; ++m) {
        Instance p = adjoint_at_lambda(a1, {-m});
        CyclicSubmodule mod = build_cyclic_submodule(p.twisted(), 64);
        ok &= require(mod.finite && static_cast<int>(mod.basis.size()) == m + 1, why,
                      "A1 module dimension != m + 1");
        ok &= require(check_matrix_relations(mod.rep, p.relations).all_passed(), why,
                      "A1 module violates a relation");
        CyclicSubmodule msl = sl2::build_rep(s, m, 64);
        ParameterContext vctx = mod.rep.matrices[0].context();
        Scalar hook = Scalar::q_power(vctx, 1) - Scalar::q_power(vctx, -1);
        Scalar q = Scalar::q_power(vctx, 1);
        ok &= require(mod.rep.matrices[a1.t(1)] ==
                          msl.rep.evaluate_word({sl2::kQHp, sl2::kQHp}),
                      why, "t1 does not match (q^{H/2})^2");
        ok &= require(mod.rep.matrices[a1.e(1)] ==
                          msl.rep.evaluate_word({sl2::kQHp, sl2::kXp})
                              .scaled(-(q.inverse() * hook)),
                      why, "e1 does not match the dictionary");
        ok &= require(mod.rep.matrices[a1.f(1)] ==
                          msl.rep.evaluate_word({sl2::kXm, sl2::kQHm})
                              .scaled(-(q * hook.inverse())),
                      why, "f1 does not match the dictionary");
    }
    return ok;
}

// ---------------------------------------------------------------- 8
bool crit_cross_instance(std::string& why) {
    bool ok = true;
    FrtInstance f = load_frt(2);
    Instance s = sl2::load();
    for (int m = 0; m <= 2; ++m) {
        CyclicSubmodule mf = build_frt_rep(f, {m}, 64);
        CyclicSubmodule ms = sl2::build_rep(s, m, 64);
        ok &= require(mf.finite && ms.finite, why, "a module did not close");
        ok &= require(mf.basis.size() == ms.basis.size(), why,
                      "dimension mismatch at m = " + std::to_string(m));
        ParameterContext vctx = ms.rep.matrices[0].context();
        Scalar hook = Scalar::q_power(vctx, 1) - Scalar::q_power(vctx, -1);
        ok &= require(mf.rep.matrices[f.lplus(1, 1)] == ms.rep.matrices[sl2::kQHp], why,
                      "L+_{11} spectrum differs from q^{H/2}");
        ok &= require(mf.rep.matrices[f.lplus(2, 2)] == ms.rep.matrices[sl2::kQHm], why,
                      "L+_{22} spectrum differs from q^{-H/2}");
        ok &= require(mf.rep.matrices[f.lminus(2, 1)] ==
                          ms.rep.matrices[sl2::kXp].scaled(-hook),
                      why, "L-_{21} does not match -(q-q^-1) X+");
        ok &= require(mf.rep.matrices[f.lplus(1, 2)] ==
                          ms.rep.matrices[sl2::kXm].scaled(hook),
                      why, "L+_{12} does not match (q-q^-1) X-");
    }
    return ok;
}

// ---------------------------------------------------------------- 9
bool crit_infrastructure(std::string& why) {
    bool ok = true;
    FrtInstance f3 = load_frt(3);
    ok &= require(confluence_probe(f3.base.cell, 3).all_passed(), why,
                  "A2 cell confluence probe fails");
    AdjointInstance a2 = load_twisted_adjoint(CartanData::A2());
    ok &= require(confluence_probe(a2.base.cell, 3).all_passed(), why,
                  "A2 nilpotent confluence probe fails");

    for (int n : {2, 3}) {
        FrtInstance f = load_frt(n);
        CellMatrix Z = unipotent_lower(f.base.cell, n);
        CellMatrix Zi = invert_unipotent(Z);
        ok &= require(cell_equal(cell_mul(Z, Zi), cell_identity(f.base.cell, n)) &&
                          cell_equal(cell_mul(Zi, Z), cell_identity(f.base.cell, n)),
                      why, "unipotent inverse is not two-sided at N=" + std::to_string(n));
    }

    // JSON round-trip is bit-exact
    Instance s = sl2::load();
    CyclicSubmodule mod = sl2::build_rep(s, 3, 64);
    RepArchive a = make_archive("sl2", {{"sigma", "3"}}, mod);
    Json j = archive_to_json(a);
    ok &= require(archive_to_json(archive_from_json(j)).dump() == j.dump(), why,
                  "archive round-trip is not bit-exact");

    // deterministic reports
    ParameterContext ctx = ParameterContext::make({"v"});
    Json r1 = report_to_json(structure_suite(build_a_series(ctx, 2)));
    Json r2 = report_to_json(structure_suite(build_a_series(ctx, 2)));
    ok &= require(r1.dump() == r2.dump(), why, "reports are not byte-identical");
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 sl2 finite-dimensional modules (dims, relations, lowest weight, < 5 s)",
         crit_sl2_modules},
        {"2 closed-form twisted action on zb^n, n <= 8, formal sigma (< 5 s)",
         crit_closed_forms},
        {"3 phi factorization: sl2 R', frt N=2,3 formal D, negative control",
         crit_phi_factorization},
        {"4 quadratic twist families entry-exact at N=2,3", crit_quadratic_families},
        {"5 R-matrix suite: braid N=2,3,4; K=0; Q identities (< 30 s)", crit_rmatrix_suite},
        {"6 generic engine: coassociativity, Leibniz, module law, trivial character",
         crit_generic_engine},
        {"7 twisted adjoint: relation kill, phi checks, weight zero, sl2 dictionary",
         crit_twisted_adjoint},
        {"8 cross-instance coherence of frt N=2 and sl2 modules", crit_cross_instance},
        {"9 infrastructure: confluence, unipotent inverse, JSON, determinism",
         crit_infrastructure},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string why;
        bool pass = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            pass = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (pass) {
            std::printf("[PASS] criterion %s (%.2f s)\n", c.name.c_str(), dt);
        } else {
            std::printf("[FAIL] criterion %s (%.2f s): %s\n", c.name.c_str(), dt,
                        why.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
