#include "qorbit/scalar.hpp"

namespace qorbit {

namespace {

LaurentScalar from_terms(const ParameterContext& ctx, const TermMap& m) {
    LaurentScalar out = LaurentScalar::zero(ctx);
    for (const auto& [e, c] : m) out.add_term(e, c);
    return out;
}

TermMap shifted_terms(const LaurentScalar& s, const ExpVec& shift) {
    TermMap out;
    for (const auto& [e, c] : s.terms()) {
        ExpVec e2 = e;
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= shift[i];
        out.emplace(std::move(e2), c);
    }
    return out;
}

} // namespace

Scalar::Scalar(LaurentScalar num, LaurentScalar den)
    : num_(std::move(num)), den_(std::move(den)) {
    num_.context().require_same(den_.context(), "Scalar constructor");
    if (den_.is_zero()) throw usage_error("zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    const ParameterContext& ctx = num_.context();
    if (num_.is_zero()) {
        den_ = LaurentScalar::one(ctx);
        return;
    }
    if (den_.is_one()) return;

    // pull the denominator's monomial part into the numerator
    ExpVec dshift = den_.min_exponents();
    bool nontrivial = false;
    for (int x : dshift) nontrivial |= (x != 0);
    TermMap den_poly = nontrivial ? shifted_terms(den_, dshift) : TermMap(den_.terms());
    TermMap num_poly = shifted_terms(num_, num_.min_exponents());

    TermMap g = poly_gcd(num_poly, den_poly);
    bool g_trivial = g.size() == 1 && g.begin()->second == 1 &&
                     g.begin()->first == ExpVec(ctx.size(), 0);
    if (!g_trivial) {
        num_poly = poly_exact_div(num_poly, g);
        den_poly = poly_exact_div(den_poly, g);
    }

    // reassemble: numerator keeps its Laurent monomial part, adjusted by the
    // denominator shift
    ExpVec nmin = num_.min_exponents();
    TermMap num_out;
    for (const auto& [e, c] : num_poly) {
        ExpVec e2 = e;
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += nmin[i] - dshift[i];
        num_out.emplace(std::move(e2), c);
    }
    // den_poly may have gained a monomial content from the gcd quotient
    ExpVec dmin(ctx.size(), 0);
    {
        bool first = true;
        for (const auto& [e, c] : den_poly) {
            (void)c;
            if (first) {
                dmin = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < dmin.size(); ++i)
                    dmin[i] = std::min(dmin[i], e[i]);
            }
        }
    }
    bool dnz = false;
    for (int x : dmin) dnz |= (x != 0);
    if (dnz) {
        TermMap d2;
        for (const auto& [e, c] : den_poly) {
            ExpVec e2 = e;
            for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= dmin[i];
            d2.emplace(std::move(e2), c);
        }
        den_poly = std::move(d2);
        TermMap n2;
        for (const auto& [e, c] : num_out) {
            ExpVec e2 = e;
            for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= dmin[i];
            n2.emplace(std::move(e2), c);
        }
        num_out = std::move(n2);
    }

    // scale so the denominator's lex-leading coefficient is 1
    Rational lead = den_poly.rbegin()->second;
    if (lead != 1) {
        for (auto& [e, c] : den_poly) c /= lead;
        for (auto& [e, c] : num_out) c /= lead;
    }
    num_ = from_terms(ctx, num_out);
    den_ = from_terms(ctx, den_poly);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    context().require_same(o.context(), "Scalar::operator+");
    if (den_.is_one() && o.den_.is_one()) return Scalar(num_ + o.num_);
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    context().require_same(o.context(), "Scalar::operator*");
    if (den_.is_one() && o.den_.is_one()) return Scalar(num_ * o.num_);
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (num_.is_zero()) throw usage_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return one(context());
    if (k < 0) return inverse().pow(-k);
    Scalar out = one(context());
    Scalar base = *this;
    int n = k;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

bool Scalar::operator<(const Scalar& o) const {
    if (num_.terms() != o.num_.terms()) return num_.terms() < o.num_.terms();
    return den_.terms() < o.den_.terms();
}

Scalar Scalar::substituted(const Substitution& sub) const {
    LaurentScalar n = num_.substituted(sub);
    LaurentScalar d = den_.substituted(sub);
    if (d.is_zero())
        throw usage_error("substitution annihilates a denominator");
    return Scalar(std::move(n), std::move(d));
}

Rational Scalar::evaluated(const std::map<std::string, Rational>& point) const {
    Rational d = den_.evaluated(point);
    if (d == 0) throw usage_error("evaluation point hits a pole");
    return num_.evaluated(point) / d;
}

LaurentScalar qnum(const ParameterContext& ctx, int n) {
    LaurentScalar out = LaurentScalar::zero(ctx);
    const int a = std::abs(n);
    for (int k = 0; k < a; ++k) {
        LaurentScalar t = LaurentScalar::q_power(ctx, a - 1 - 2 * k);
        out = out + (n > 0 ? t : -t);
    }
    return out;
}

Scalar qnum_shifted(const ParameterContext& ctx, int n, const std::string& param) {
    LaurentScalar p2 = LaurentScalar::variable(ctx, param, 2);
    LaurentScalar pm2 = LaurentScalar::variable(ctx, param, -2);
    LaurentScalar numer =
        LaurentScalar::q_power(ctx, n) * pm2 - LaurentScalar::q_power(ctx, -n) * p2;
    LaurentScalar denom = LaurentScalar::q_power(ctx, 1) - LaurentScalar::q_power(ctx, -1);
    return Scalar(std::move(numer), std::move(denom));
}

} // namespace qorbit
