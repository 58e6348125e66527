#include "qorbit/submodule.hpp"

#include <deque>

namespace qorbit {

Matrix RepMatrixSet::evaluate_word(const Word& w) const {
    if (matrices.empty()) throw usage_error("empty representation");
    const int n = matrices.front().n();
    Matrix acc = Matrix::identity(n, matrices.front().context());
    for (int g : w) acc = acc * matrices[static_cast<std::size_t>(g)];
    return acc;
}

Matrix RepMatrixSet::evaluate(const FreeElement& x) const {
    if (matrices.empty()) throw usage_error("empty representation");
    const int n = matrices.front().n();
    Matrix acc(n, matrices.front().context());
    for (const auto& [w, c] : x.terms()) acc = acc + evaluate_word(w).scaled(c);
    return acc;
}

CyclicSubmodule build_cyclic_submodule(const TwistedAction& action, int dim_cutoff) {
    const CellPtr& cell = action.cell();
    const GenSetPtr& alg = action.algebra();
    const ParameterContext& ctx = cell->context();

    CyclicSubmodule out;
    MonomialEchelon ech(ctx);
    std::deque<CPolynomial> queue;

    CPolynomial unit = CPolynomial::one(cell);
    auto first = ech.insert(unit);
    if (first) queue.push_back(*first);

    while (!queue.empty()) {
        if (static_cast<int>(ech.size()) > dim_cutoff) {
            out.finite = false;
            out.explored = static_cast<int>(ech.size());
            return out;
        }
        CPolynomial f = queue.front();
        queue.pop_front();
        for (int g = 0; g < static_cast<int>(alg->size()); ++g) {
            CPolynomial h = action.act_word(Word{g}, f);
            if (h.is_zero()) continue;
            auto res = ech.insert(h);
            if (res) queue.push_back(*res);
        }
    }
    if (static_cast<int>(ech.size()) > dim_cutoff) {
        out.finite = false;
        out.explored = static_cast<int>(ech.size());
        return out;
    }

    out.finite = true;
    out.basis = ech.reduced_basis(cell);
    out.explored = static_cast<int>(out.basis.size());

    // coordinates against the reduced basis itself (unit leading
    // coefficients, unique leads)
    std::map<Word, int, DegLex> lead_index;
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        lead_index.emplace(out.basis[i].terms().rbegin()->first, static_cast<int>(i));
    auto coordinates = [&](const CPolynomial& v, std::map<Word, Scalar, DegLex>& coords) {
        coords.clear();
        std::map<Word, Scalar, DegLex> residual(v.terms().begin(), v.terms().end());
        while (!residual.empty()) {
            const Word lead = residual.rbegin()->first;
            auto it = lead_index.find(lead);
            if (it == lead_index.end()) return false;
            Scalar c = residual.rbegin()->second;
            coords.emplace(lead, c);
            for (const auto& [w, rc] :
                 out.basis[static_cast<std::size_t>(it->second)].terms()) {
                Scalar delta = c * rc;
                auto [rit, ins] = residual.emplace(w, -delta);
                if (!ins) {
                    rit->second = rit->second - delta;
                    if (rit->second.is_zero()) residual.erase(rit);
                }
            }
        }
        return true;
    };

    const int dim = static_cast<int>(out.basis.size());
    out.rep.algebra = alg;
    for (int g = 0; g < static_cast<int>(alg->size()); ++g) {
        Matrix m(dim, ctx);
        for (int j = 0; j < dim; ++j) {
            CPolynomial h = action.act_word(Word{g}, out.basis[static_cast<std::size_t>(j)]);
            std::map<Word, Scalar, DegLex> coords;
            if (!coordinates(h, coords))
                throw engine_error("closure failed: action image left the computed span");
            for (const auto& [lead, c] : coords) m.at(lead_index.at(lead), j) = c;
        }
        out.rep.matrices.push_back(std::move(m));
    }
    return out;
}

Report check_matrix_relations(const RepMatrixSet& rep,
                              const std::vector<FreeElement>& relations) {
    Report report;
    report.suite = "matrix-relations";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        Matrix m = rep.evaluate(relations[i]);
        bool ok = m.is_zero();
        report.add("matrix-relations.r" + std::to_string(i),
                   "relation evaluates to the zero matrix", ok,
                   ok ? "" : Matrix::first_difference(m, Matrix(m.n(), m.context())));
    }
    return report;
}

} // namespace qorbit
