#include "qorbit/cell_algebra.hpp"

#include <deque>

#include "qorbit/text.hpp"

namespace qorbit {

namespace {
constexpr long kStepBudget = 2'000'000;
}

std::shared_ptr<const CellAlgebra> CellAlgebra::create(ParameterContext ctx,
                                                       std::vector<std::string> names,
                                                       std::vector<Rule> rules) {
    auto cell = std::shared_ptr<CellAlgebra>(new CellAlgebra());
    cell->ctx_ = std::move(ctx);
    cell->names_ = std::move(names);

    DegLex lt;
    for (auto& r : rules) {
        if (r.lhs.size() < 2)
            throw usage_error("rewrite rule left-hand side must have length >= 2");
        for (int g : r.lhs)
            if (g < 0 || g >= static_cast<int>(cell->names_.size()))
                throw usage_error("rewrite rule references an unknown generator");
        for (const auto& [w, c] : r.rhs) {
            (void)c;
            if (!lt(w, r.lhs))
                throw usage_error("rewrite rule is not strictly decreasing in degree-then-lex");
            for (int g : w)
                if (g < 0 || g >= static_cast<int>(cell->names_.size()))
                    throw usage_error("rewrite rule references an unknown generator");
        }
        for (const auto& other : cell->rules_)
            if (other.lhs == r.lhs)
                throw usage_error("duplicate rewrite rule left-hand side");
        cell->rules_.push_back(std::move(r));
    }
    return cell;
}

int CellAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const CellAlgebra> CellAlgebra::substituted(const Substitution& sub) const {
    std::vector<Rule> rules;
    for (const auto& r : rules_) {
        Rule r2;
        r2.lhs = r.lhs;
        for (const auto& [w, c] : r.rhs) {
            Scalar c2 = c.substituted(sub);
            if (!c2.is_zero()) r2.rhs.emplace(w, std::move(c2));
        }
        rules.push_back(std::move(r2));
    }
    return create(sub.target, names_, std::move(rules));
}

int CellAlgebra::match_at(const Word& w, std::size_t pos) const {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Word& lhs = rules_[r].lhs;
        if (pos + lhs.size() > w.size()) continue;
        bool hit = true;
        for (std::size_t k = 0; k < lhs.size(); ++k)
            if (w[pos + k] != lhs[k]) {
                hit = false;
                break;
            }
        if (hit) return static_cast<int>(r);
    }
    return -1;
}

bool CellAlgebra::is_normal(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (match_at(w, i) >= 0) return false;
    return true;
}

std::map<Word, Scalar, DegLex> CellAlgebra::normalize(std::map<Word, Scalar, DegLex> terms,
                                                      Strategy strategy) const {
    std::map<Word, Scalar, DegLex> out;
    std::deque<std::pair<Word, Scalar>> work(terms.begin(), terms.end());
    long budget = kStepBudget;
    auto add = [](std::map<Word, Scalar, DegLex>& m, const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, ins] = m.emplace(w, c);
        if (!ins) {
            it->second = it->second + c;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    while (!work.empty()) {
        auto [w, c] = work.front();
        work.pop_front();
        if (c.is_zero()) continue;
        int rule = -1;
        std::size_t pos = 0;
        if (strategy == Strategy::Leftmost) {
            for (std::size_t i = 0; i < w.size() && rule < 0; ++i)
                if ((rule = match_at(w, i)) >= 0) pos = i;
        } else {
            for (std::size_t i = w.size(); i-- > 0 && rule < 0;)
                if ((rule = match_at(w, i)) >= 0) pos = i;
        }
        if (rule < 0) {
            add(out, w, c);
            continue;
        }
        if (--budget <= 0)
            throw engine_error("rewriting step budget exceeded; rule set looks non-terminating");
        const Rule& r = rules_[static_cast<std::size_t>(rule)];
        for (const auto& [rw, rc] : r.rhs) {
            Word w2(w.begin(), w.begin() + static_cast<long>(pos));
            w2.insert(w2.end(), rw.begin(), rw.end());
            w2.insert(w2.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
            work.emplace_back(std::move(w2), c * rc);
        }
    }
    return out;
}

CPolynomial CPolynomial::one(const CellPtr& c) {
    return constant(c, Scalar::one(c->context()));
}

CPolynomial CPolynomial::constant(const CellPtr& c, Scalar s) {
    CPolynomial out(c);
    if (!s.is_zero()) out.terms_.emplace(Word{}, std::move(s));
    return out;
}

CPolynomial CPolynomial::generator(const CellPtr& c, int index) {
    if (index < 0 || index >= static_cast<int>(c->size()))
        throw usage_error("cell generator index out of range");
    CPolynomial out(c);
    out.terms_.emplace(Word{index}, Scalar::one(c->context()));
    return out;
}

CPolynomial CPolynomial::monomial(const CellPtr& c, Word w, Scalar coeff) {
    std::map<Word, Scalar, DegLex> raw;
    if (!coeff.is_zero()) raw.emplace(std::move(w), std::move(coeff));
    return from_raw(c, std::move(raw));
}

CPolynomial CPolynomial::from_raw(const CellPtr& c, std::map<Word, Scalar, DegLex> raw) {
    CPolynomial out(c);
    out.terms_ = c->normalize(std::move(raw));
    return out;
}

bool CPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second.is_one();
}

CPolynomial CPolynomial::operator-() const {
    CPolynomial out(cell_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

CPolynomial CPolynomial::operator+(const CPolynomial& o) const {
    if (cell_ != o.cell_) throw usage_error("cell-algebra mismatch in CPolynomial::operator+");
    CPolynomial out = *this;
    for (const auto& [w, c] : o.terms_) {
        auto [it, ins] = out.terms_.emplace(w, c);
        if (!ins) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

CPolynomial CPolynomial::operator-(const CPolynomial& o) const { return *this + (-o); }

CPolynomial CPolynomial::operator*(const CPolynomial& o) const {
    if (cell_ != o.cell_) throw usage_error("cell-algebra mismatch in CPolynomial::operator*");
    std::map<Word, Scalar, DegLex> raw;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = concat(wa, wb);
            Scalar c = ca * cb;
            auto [it, ins] = raw.emplace(std::move(w), std::move(c));
            if (!ins) {
                it->second = it->second + ca * cb;
                if (it->second.is_zero()) raw.erase(it);
            }
        }
    return from_raw(cell_, std::move(raw));
}

CPolynomial CPolynomial::scaled(const Scalar& c) const {
    CPolynomial out(cell_);
    if (c.is_zero()) return out;
    for (const auto& [w, k] : terms_) {
        Scalar s = k * c;
        if (!s.is_zero()) out.terms_.emplace(w, std::move(s));
    }
    return out;
}

CPolynomial CPolynomial::substituted(const CellPtr& target_cell, const Substitution& sub) const {
    std::map<Word, Scalar, DegLex> raw;
    for (const auto& [w, c] : terms_) {
        Scalar c2 = c.substituted(sub);
        if (!c2.is_zero()) raw.emplace(w, std::move(c2));
    }
    return from_raw(target_cell, std::move(raw));
}

std::string CPolynomial::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Scalar c = it->second;
        char sign = '+';
        if (c.is_ring() && !c.num().is_zero() && c.num().terms().size() == 1 &&
            c.num().terms().begin()->second < 0) {
            sign = '-';
            c = -c;
        }
        std::string mono = render_monomial(cell_->names(), it->first);
        std::string body;
        if (it->first.empty())
            body = render_coefficient(c);
        else if (c.is_one())
            body = mono;
        else
            body = render_coefficient(c) + "*" + mono;
        if (first) {
            if (sign == '-') out += '-';
            out += body;
            first = false;
        } else {
            out += sign == '-' ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

Report confluence_probe(const CellPtr& cell, int max_degree) {
    Report rep;
    rep.suite = "confluence";
    std::vector<Word> words{Word{}};
    std::size_t begin = 0;
    for (int len = 1; len <= max_degree; ++len) {
        std::size_t end = words.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int g = 0; g < static_cast<int>(cell->size()); ++g) {
                Word w = words[i];
                w.push_back(g);
                words.push_back(std::move(w));
            }
        begin = end;
    }
    int disagreements = 0;
    std::string witness;
    for (const auto& w : words) {
        std::map<Word, Scalar, DegLex> raw{{w, Scalar::one(cell->context())}};
        auto left = cell->normalize(raw, CellAlgebra::Strategy::Leftmost);
        auto right = cell->normalize(raw, CellAlgebra::Strategy::Rightmost);
        if (left != right) {
            ++disagreements;
            if (witness.empty()) witness = render_monomial(cell->names(), w);
        }
    }
    rep.add("confluence.deg" + std::to_string(max_degree),
            "leftmost and rightmost normal forms agree on all words up to degree " +
                std::to_string(max_degree),
            disagreements == 0, witness);
    return rep;
}

} // namespace qorbit
