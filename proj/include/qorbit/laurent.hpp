#pragma once

#include <map>
#include <optional>
#include <string>

#include "qorbit/context.hpp"

namespace qorbit {

/// Maps each source variable to a monomial of the target context.
/// Used to pin formal parameters to concrete monomials (s := v^sigma,
/// d_j := v^k, l_i := v^(2m), ...).
struct Substitution {
    ParameterContext source;
    ParameterContext target;
    std::vector<ExpVec> images;  // one per source variable

    static Substitution identity(const ParameterContext& ctx);
    // Keeps the base variable, maps `name` to v^power, drops nothing else.
    // All remaining source variables must already exist in `target`.
    static Substitution pin(const ParameterContext& source, const ParameterContext& target,
                            const std::map<std::string, int>& v_powers);
};

/// Exact Laurent polynomial with rational coefficients over the variables of
/// a ParameterContext.  Canonical: no zero terms are stored.  Values are
/// immutable in spirit; all operations return fresh objects.
class LaurentScalar {
public:
    using TermMap = std::map<ExpVec, Rational>;

    LaurentScalar() = default;  // zero over the default context
    explicit LaurentScalar(ParameterContext ctx) : ctx_(std::move(ctx)) {}

    static LaurentScalar zero(const ParameterContext& ctx) { return LaurentScalar(ctx); }
    static LaurentScalar one(const ParameterContext& ctx);
    static LaurentScalar from_rational(const ParameterContext& ctx, const Rational& r);
    static LaurentScalar monomial(const ParameterContext& ctx, ExpVec e, Rational coeff);
    // v^k
    static LaurentScalar v_power(const ParameterContext& ctx, int k);
    // q^k = v^(2*q_unit*k)
    static LaurentScalar q_power(const ParameterContext& ctx, int k);
    // name^power; resolves an eliminated variable to its monomial value
    static LaurentScalar variable(const ParameterContext& ctx, const std::string& name,
                                  int power = 1);

    const ParameterContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const;  // zero or a single constant term
    // Single term?  (monomials are the units of the Laurent ring)
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentScalar operator-() const;
    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar scaled(const Rational& c) const;
    LaurentScalar pow(int k) const;  // k >= 0, or any k for monomials

    bool operator==(const LaurentScalar& o) const {
        return ctx_.same(o.ctx_) && terms_ == o.terms_;
    }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

    LaurentScalar substituted(const Substitution& sub) const;
    Rational evaluated(const std::map<std::string, Rational>& point) const;

    // Lex-largest exponent vector (leading term); empty optional when zero.
    std::optional<ExpVec> leading_exponents() const;
    const Rational& leading_coefficient() const;  // zero scalar -> throws

    // exponent-wise minimum over all terms (the monomial content); zero -> all 0
    ExpVec min_exponents() const;

    void add_term(const ExpVec& e, const Rational& c);  // builder helper

private:
    ParameterContext ctx_;
    TermMap terms_;
};

} // namespace qorbit
