#include "qorbit/linalg.hpp"

namespace qorbit {

MonomialEchelon::RingRow MonomialEchelon::to_ring_row(const CPolynomial& v) const {
    // clear denominators by multiplying through
    LaurentScalar common = LaurentScalar::one(ctx_);
    for (const auto& [w, c] : v.terms()) {
        (void)w;
        if (!c.den().is_one()) common = common * c.den();
    }
    RingRow out;
    for (const auto& [w, c] : v.terms()) {
        LaurentScalar entry = c.num() * common;
        if (!c.den().is_one()) {
            // common/den is exact by construction
            Scalar q = Scalar(common, c.den());
            if (!q.is_ring()) throw engine_error("denominator clearing failed");
            entry = c.num() * q.num();
        }
        if (!entry.is_zero()) out.emplace(w, std::move(entry));
    }
    return out;
}

void MonomialEchelon::content_normalize(RingRow& r) const {
    if (r.empty()) return;
    // polynomial gcd of all entries (entries shifted to ordinary polynomials)
    TermMap g;
    for (const auto& [w, c] : r) {
        (void)w;
        TermMap t;
        ExpVec m = c.min_exponents();
        for (const auto& [e, k] : c.terms()) {
            ExpVec e2 = e;
            for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= m[i];
            t.emplace(std::move(e2), k);
        }
        g = g.empty() ? t : poly_gcd(std::move(g), std::move(t));
        if (g.size() == 1 && g.begin()->second == 1 &&
            g.begin()->first == ExpVec(ctx_.size(), 0))
            break;
    }
    LaurentScalar gs = LaurentScalar::zero(ctx_);
    for (const auto& [e, c] : g) gs.add_term(e, c);
    bool trivial = gs.is_one();
    RingRow out;
    for (auto& [w, c] : r) {
        LaurentScalar c2 = c;
        if (!trivial) {
            // divide exactly: c / gs, both Laurent; use the fraction and demand den 1
            Scalar q(c, gs);
            if (!q.is_ring()) throw engine_error("content division failed");
            c2 = q.num();
        } else {
            // also strip the shared monomial content for determinism
            c2 = c;
        }
        out.emplace(w, std::move(c2));
    }
    // strip the common monomial part and fix the sign of the leading entry
    ExpVec shift = out.begin()->second.min_exponents();
    for (const auto& [w, c] : out) {
        ExpVec m = c.min_exponents();
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = std::min(shift[i], m[i]);
    }
    bool nz = false;
    for (int x : shift) nz |= (x != 0);
    Rational leadc = out.rbegin()->second.leading_coefficient();
    bool flip = leadc < 0;
    if (nz || flip) {
        RingRow out2;
        for (const auto& [w, c] : out) {
            LaurentScalar c2 = LaurentScalar::zero(ctx_);
            for (const auto& [e, k] : c.terms()) {
                ExpVec e2 = e;
                for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= shift[i];
                c2.add_term(e2, flip ? -k : k);
            }
            out2.emplace(w, std::move(c2));
        }
        out = std::move(out2);
    }
    r = std::move(out);
}

std::optional<CPolynomial> MonomialEchelon::insert(const CPolynomial& v) {
    RingRow row = to_ring_row(v);
    content_normalize(row);
    while (!row.empty()) {
        const Word lead = row.rbegin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) {
            content_normalize(row);
            // unit leading coefficient presentation of the residual
            CPolynomial out = CPolynomial::zero(v.cell());
            Scalar inv = Scalar(row.rbegin()->second).inverse();
            for (const auto& [w, c] : row)
                out = out + CPolynomial::monomial(v.cell(), w, Scalar(c) * inv);
            rows_.emplace(lead, std::move(row));
            return out;
        }
        const RingRow& base = it->second;
        const LaurentScalar pivot = base.rbegin()->second;
        const LaurentScalar mine = row.rbegin()->second;
        RingRow next;
        for (const auto& [w, c] : row) {
            LaurentScalar x = c * pivot;
            auto bit = base.find(w);
            if (bit != base.end()) x = x - mine * bit->second;
            if (!x.is_zero()) next.emplace(w, std::move(x));
        }
        for (const auto& [w, c] : base) {
            if (row.count(w)) continue;
            LaurentScalar x = -(mine * c);
            if (!x.is_zero()) next.emplace(w, std::move(x));
        }
        next.erase(lead);
        row = std::move(next);
        if (!row.empty()) content_normalize(row);
    }
    return std::nullopt;
}

bool MonomialEchelon::coordinates(const CPolynomial& v,
                                  std::map<Word, Scalar, DegLex>& coords) const {
    coords.clear();
    std::map<Word, Scalar, DegLex> residual(v.terms().begin(), v.terms().end());
    while (!residual.empty()) {
        const Word lead = residual.rbegin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) return false;
        Scalar c = residual.rbegin()->second / Scalar(it->second.rbegin()->second);
        coords.emplace(lead, c);
        for (const auto& [w, rc] : it->second) {
            Scalar delta = c * Scalar(rc);
            auto [rit, ins] = residual.emplace(w, -delta);
            if (!ins) {
                rit->second = rit->second - delta;
                if (rit->second.is_zero()) residual.erase(rit);
            }
        }
    }
    return true;
}

std::vector<Word> MonomialEchelon::leads() const {
    std::vector<Word> out;
    out.reserve(rows_.size());
    for (const auto& [lead, row] : rows_) {
        (void)row;
        out.push_back(lead);
    }
    return out;
}

std::vector<CPolynomial> MonomialEchelon::reduced_basis(const CellPtr& cell) const {
    // ascending lead order; rows below a lead are already fully reduced
    std::vector<CPolynomial> out;
    std::map<Word, CPolynomial, DegLex> done;
    for (const auto& [lead, row] : rows_) {
        Scalar inv = Scalar(row.rbegin()->second).inverse();
        CPolynomial v = CPolynomial::zero(cell);
        for (const auto& [w, c] : row) v = v + CPolynomial::monomial(cell, w, Scalar(c) * inv);
        for (const auto& [dlead, dv] : done) {
            if (dlead == lead) continue;
            auto it = v.terms().find(dlead);
            if (it == v.terms().end()) continue;
            v = v - dv.scaled(it->second);
        }
        done.emplace(lead, v);
    }
    for (const auto& [lead, v] : done) {
        (void)lead;
        out.push_back(v);
    }
    return out;
}

} // namespace qorbit
