#include "qorbit/laurent.hpp"

#include <algorithm>

namespace qorbit {

Substitution Substitution::identity(const ParameterContext& ctx) {
    Substitution s;
    s.source = ctx;
    s.target = ctx;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        ExpVec e(ctx.size(), 0);
        e[i] = 1;
        s.images.push_back(std::move(e));
    }
    return s;
}

Substitution Substitution::pin(const ParameterContext& source, const ParameterContext& target,
                               const std::map<std::string, int>& v_powers) {
    Substitution s;
    s.source = source;
    s.target = target;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const std::string& name = source.var(i);
        ExpVec e(target.size(), 0);
        auto it = v_powers.find(name);
        if (it != v_powers.end()) {
            e[0] = it->second;
        } else {
            int idx = target.index_of(name);
            if (idx < 0)
                throw usage_error("substitution drops variable '" + name +
                                  "' without assigning it");
            e[static_cast<std::size_t>(idx)] = 1;
        }
        s.images.push_back(std::move(e));
    }
    return s;
}

LaurentScalar LaurentScalar::one(const ParameterContext& ctx) {
    return from_rational(ctx, Rational(1));
}

LaurentScalar LaurentScalar::from_rational(const ParameterContext& ctx, const Rational& r) {
    LaurentScalar out(ctx);
    if (r != 0) out.terms_.emplace(ExpVec(ctx.size(), 0), r);
    return out;
}

LaurentScalar LaurentScalar::monomial(const ParameterContext& ctx, ExpVec e, Rational coeff) {
    if (e.size() != ctx.size()) throw usage_error("monomial exponent vector has wrong length");
    LaurentScalar out(ctx);
    if (coeff != 0) out.terms_.emplace(std::move(e), std::move(coeff));
    return out;
}

LaurentScalar LaurentScalar::v_power(const ParameterContext& ctx, int k) {
    ExpVec e(ctx.size(), 0);
    e[0] = k;
    return monomial(ctx, std::move(e), Rational(1));
}

LaurentScalar LaurentScalar::q_power(const ParameterContext& ctx, int k) {
    return v_power(ctx, 2 * ctx.q_unit() * k);
}

LaurentScalar LaurentScalar::variable(const ParameterContext& ctx, const std::string& name,
                                      int power) {
    if (ctx.is_eliminated(name)) {
        ExpVec e = ctx.eliminated_value();
        for (auto& x : e) x *= power;
        return monomial(ctx, std::move(e), Rational(1));
    }
    int idx = ctx.index_of(name);
    if (idx < 0) throw usage_error("undeclared variable '" + name + "'");
    ExpVec e(ctx.size(), 0);
    e[static_cast<std::size_t>(idx)] = power;
    return monomial(ctx, std::move(e), Rational(1));
}

bool LaurentScalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentScalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar out(ctx_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    ctx_.require_same(o.ctx_, "LaurentScalar::operator+");
    LaurentScalar out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
    ctx_.require_same(o.ctx_, "LaurentScalar::operator-");
    LaurentScalar out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    ctx_.require_same(o.ctx_, "LaurentScalar::operator*");
    LaurentScalar out(ctx_);
    ExpVec e(ctx_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentScalar LaurentScalar::scaled(const Rational& c) const {
    LaurentScalar out(ctx_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

LaurentScalar LaurentScalar::pow(int k) const {
    if (k == 0) return one(ctx_);
    if (k < 0) {
        if (!is_monomial())
            throw usage_error("negative power of a non-monomial Laurent scalar");
        const auto& [e, c] = *terms_.begin();
        Rational cinv(denominator(c), numerator(c));
        Rational ck(1);
        for (int i = 0; i < -k; ++i) ck *= cinv;
        ExpVec ee(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i] * k;
        return monomial(ctx_, std::move(ee), ck);
    }
    LaurentScalar out = one(ctx_);
    LaurentScalar base = *this;
    int n = k;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

LaurentScalar LaurentScalar::substituted(const Substitution& sub) const {
    ctx_.require_same(sub.source, "LaurentScalar::substituted");
    LaurentScalar out(sub.target);
    ExpVec e(sub.target.size());
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == 0) continue;
            const ExpVec& img = sub.images[i];
            for (std::size_t j = 0; j < e.size(); ++j) e[j] += src[i] * img[j];
        }
        out.add_term(e, c);
    }
    return out;
}

Rational LaurentScalar::evaluated(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals(ctx_.size());
    for (std::size_t i = 0; i < ctx_.size(); ++i) {
        auto it = point.find(ctx_.var(i));
        if (it == point.end())
            throw usage_error("evaluation point missing variable '" + ctx_.var(i) + "'");
        if (it->second == 0)
            throw usage_error("cannot evaluate at zero (variables are invertible)");
        vals[i] = it->second;
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int k = e[i];
            Rational base = k >= 0 ? vals[i] : Rational(denominator(vals[i]), numerator(vals[i]));
            for (int j = 0; j < std::abs(k); ++j) t *= base;
        }
        acc += t;
    }
    return acc;
}

std::optional<ExpVec> LaurentScalar::leading_exponents() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

const Rational& LaurentScalar::leading_coefficient() const {
    if (terms_.empty()) throw engine_error("leading coefficient of zero");
    return terms_.rbegin()->second;
}

ExpVec LaurentScalar::min_exponents() const {
    ExpVec m(ctx_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

void LaurentScalar::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

} // namespace qorbit
