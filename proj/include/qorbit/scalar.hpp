#pragma once

#include "qorbit/laurent.hpp"
#include "qorbit/polygcd.hpp"

namespace qorbit {

/// Element of the fraction field of the Laurent ring, kept in canonical
/// form: gcd-reduced, denominator an ordinary polynomial with per-variable
/// minimum exponent 0 and lex-leading coefficient exactly 1.  With that,
/// equality is a syntactic check.  Ring elements have denominator 1 and all
/// arithmetic keeps a den==1 fast path so purely polynomial computation
/// never pays for gcds.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(ParameterContext ctx)
        : num_(LaurentScalar::zero(ctx)), den_(LaurentScalar::one(ctx)) {}
    explicit Scalar(LaurentScalar ring_value)
        : num_(std::move(ring_value)), den_(LaurentScalar::one(num_.context())) {}
    Scalar(LaurentScalar num, LaurentScalar den);  // canonicalizes

    static Scalar zero(const ParameterContext& ctx) { return Scalar(ctx); }
    static Scalar one(const ParameterContext& ctx) {
        return Scalar(LaurentScalar::one(ctx));
    }
    static Scalar from_rational(const ParameterContext& ctx, const Rational& r) {
        return Scalar(LaurentScalar::from_rational(ctx, r));
    }
    static Scalar q_power(const ParameterContext& ctx, int k) {
        return Scalar(LaurentScalar::q_power(ctx, k));
    }
    static Scalar v_power(const ParameterContext& ctx, int k) {
        return Scalar(LaurentScalar::v_power(ctx, k));
    }
    static Scalar variable(const ParameterContext& ctx, const std::string& name, int power = 1) {
        return Scalar(LaurentScalar::variable(ctx, name, power));
    }

    const ParameterContext& context() const { return num_.context(); }
    const LaurentScalar& num() const { return num_; }
    const LaurentScalar& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_ring() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(int k) const;

    bool operator==(const Scalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // std::map key support (term maps over Scalar never occur; this orders
    // matrices' entry lists and report witnesses deterministically)
    bool operator<(const Scalar& o) const;

    Scalar substituted(const Substitution& sub) const;
    Rational evaluated(const std::map<std::string, Rational>& point) const;

private:
    LaurentScalar num_;
    LaurentScalar den_;
    void canonicalize();
};

/// [n] = (q^n - q^-n)/(q - q^-1), a Laurent polynomial for integer n:
/// sign(n) * sum_{k=0}^{|n|-1} q^{|n|-1-2k}.
LaurentScalar qnum(const ParameterContext& ctx, int n);

/// [n - sigma] with q^sigma carried by the square of an invertible formal
/// parameter p (p = q^{sigma/2}): (q^n p^-2 - q^-n p^2)/(q - q^-1).
/// Lives in the fraction field; the division is deferred per the canonical
/// fraction encoding.
Scalar qnum_shifted(const ParameterContext& ctx, int n, const std::string& param);

} // namespace qorbit
