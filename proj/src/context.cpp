#include "qorbit/context.hpp"

#include <algorithm>
#include <set>

namespace qorbit {

ParameterContext::ParameterContext() {
    auto d = std::make_shared<Data>();
    d->vars = {"v"};
    d_ = std::move(d);
}

ParameterContext ParameterContext::make(std::vector<std::string> vars, int q_unit) {
    if (vars.empty())
        throw usage_error("context needs at least the base variable");
    if (q_unit < 1)
        throw usage_error("q_unit must be positive");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw usage_error("context variable names must be unique");
    auto d = std::make_shared<Data>();
    d->vars = std::move(vars);
    d->q_unit = q_unit;
    return ParameterContext(std::move(d));
}

ParameterContext ParameterContext::with_product_one(std::vector<std::string> vars,
                                                    std::vector<std::string> constrained,
                                                    int q_unit) {
    if (constrained.size() < 2)
        throw usage_error("product-one constraint needs at least two variables");
    for (const auto& c : constrained)
        if (std::find(vars.begin(), vars.end(), c) == vars.end())
            throw usage_error("constrained variable '" + c + "' not declared");
    const std::string victim = constrained.back();
    if (victim == vars.front())
        throw usage_error("cannot eliminate the base variable");

    std::vector<std::string> kept;
    for (const auto& v : vars)
        if (v != victim) kept.push_back(v);

    auto ctx = make(std::move(kept), q_unit);
    auto d = std::make_shared<Data>(*ctx.d_);
    d->eliminated = victim;
    d->elim_exponents.assign(d->vars.size(), 0);
    for (std::size_t i = 0; i + 1 < constrained.size(); ++i) {
        int idx = ctx.index_of(constrained[i]);
        d->elim_exponents[static_cast<std::size_t>(idx)] -= 1;  // victim = 1/(c1...ck)
    }
    return ParameterContext(std::move(d));
}

int ParameterContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < d_->vars.size(); ++i)
        if (d_->vars[i] == name) return static_cast<int>(i);
    return -1;
}

bool ParameterContext::same(const ParameterContext& other) const {
    if (d_ == other.d_) return true;
    return d_->vars == other.d_->vars && d_->q_unit == other.d_->q_unit &&
           d_->eliminated == other.d_->eliminated &&
           d_->elim_exponents == other.d_->elim_exponents;
}

void ParameterContext::require_same(const ParameterContext& other, const char* where) const {
    if (!same(other))
        throw usage_error(std::string("parameter context mismatch in ") + where);
}

} // namespace qorbit
