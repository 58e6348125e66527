#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qorbit/rational.hpp"

namespace qorbit {

// Exponent vector, one slot per context variable; slot 0 is the base
// deformation variable.
using ExpVec = std::vector<int>;

/// Declares the variables of the coefficient ring.  The base variable v
/// comes first and q := v^(2*q_unit), so q^(1/(2*q_unit)) powers stay
/// integral in v.  A product-one constraint over a variable subset is
/// resolved at creation time by eliminating the last constrained variable:
/// its value becomes the inverse of the product of the others.
class ParameterContext {
public:
    ParameterContext();  // just {v}, q = v^2

    static ParameterContext make(std::vector<std::string> vars, int q_unit = 1);

    // vars lists every variable including the one to be eliminated;
    // constrained names must appear in vars and multiply to one.
    static ParameterContext with_product_one(std::vector<std::string> vars,
                                             std::vector<std::string> constrained,
                                             int q_unit = 1);

    std::size_t size() const { return d_->vars.size(); }
    const std::string& var(std::size_t i) const { return d_->vars[i]; }
    const std::vector<std::string>& vars() const { return d_->vars; }
    int q_unit() const { return d_->q_unit; }

    // Index among the arithmetic variables, or -1 (covers eliminated names).
    int index_of(const std::string& name) const;
    bool is_eliminated(const std::string& name) const { return name == d_->eliminated; }
    const std::string& eliminated_name() const { return d_->eliminated; }
    const ExpVec& eliminated_value() const { return d_->elim_exponents; }

    bool same(const ParameterContext& other) const;
    void require_same(const ParameterContext& other, const char* where) const;

private:
    struct Data {
        std::vector<std::string> vars;
        int q_unit = 1;
        std::string eliminated;
        ExpVec elim_exponents;  // value of the eliminated variable as a monomial
    };
    std::shared_ptr<const Data> d_;
    explicit ParameterContext(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

} // namespace qorbit
