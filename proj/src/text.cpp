#include "qorbit/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qorbit {

namespace {

std::string render_rational(const Rational& r) { return r.str(); }

// factors of one term, '*'-joined, without the coefficient
std::string render_factors(const ParameterContext& ctx, const ExpVec& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        if (i == 0) {
            int unit = 2 * ctx.q_unit();
            if (e[0] % unit == 0) {
                int k = e[0] / unit;
                os << (k == 1 ? "q" : "q^" + std::to_string(k));
            } else {
                os << (e[0] == 1 ? "v" : "v^" + std::to_string(e[0]));
            }
        } else {
            os << ctx.var(i);
            if (e[i] != 1) os << '^' << e[i];
        }
    }
    return os.str();
}

// one term as (sign, magnitude-text)
std::pair<char, std::string> render_term(const ParameterContext& ctx, const ExpVec& e,
                                         const Rational& c) {
    char sign = c < 0 ? '-' : '+';
    Rational a = c < 0 ? Rational(-c) : c;
    std::string factors = render_factors(ctx, e);
    if (factors.empty()) return {sign, render_rational(a)};
    if (a == 1) return {sign, factors};
    return {sign, render_rational(a) + "*" + factors};
}

std::string render_laurent_impl(const LaurentScalar& s, bool spaced) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        auto [sign, mag] = render_term(s.context(), it->first, it->second);
        if (first) {
            if (sign == '-') os << '-';
            os << mag;
            first = false;
        } else {
            os << (spaced ? (sign == '-' ? " - " : " + ") : std::string(1, sign)) << mag;
        }
    }
    return os.str();
}

bool is_plain_monomial(const LaurentScalar& s) {
    return s.terms().size() == 1;
}

} // namespace

std::string render_laurent(const LaurentScalar& s) { return render_laurent_impl(s, true); }

std::string render_scalar(const Scalar& s) {
    if (s.is_ring()) return render_laurent_impl(s.num(), true);
    return "(" + render_laurent_impl(s.num(), false) + ")/(" +
           render_laurent_impl(s.den(), false) + ")";
}

std::string render_coefficient(const Scalar& s) {
    if (s.is_ring()) {
        if (is_plain_monomial(s.num()) || s.num().is_zero())
            return render_laurent_impl(s.num(), false);
        return "(" + render_laurent_impl(s.num(), false) + ")";
    }
    return "(" + render_laurent_impl(s.num(), false) + ")/(" +
           render_laurent_impl(s.den(), false) + ")";
}

std::string render_word(const GeneratorSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << gens.name(static_cast<std::size_t>(w[i]));
    }
    return os.str();
}

std::string render_element(const FreeElement& a) {
    if (a.is_zero()) return "0";
    const GeneratorSet& g = *a.generators();
    std::ostringstream os;
    bool first = true;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
        char sign = '+';
        // extract the sign from plain rational-monomial coefficients
        if (c.is_ring() && !c.num().is_zero() && c.num().terms().size() == 1 &&
            c.num().terms().begin()->second < 0) {
            sign = '-';
            c = -c;
        }
        std::string coef = render_coefficient(c);
        std::string body;
        if (w.empty())
            body = coef;
        else if (c.is_one())
            body = render_word(g, w);
        else
            body = coef + "*" + render_word(g, w);
        if (first) {
            if (sign == '-') os << '-';
            os << body;
            first = false;
        } else {
            os << (sign == '-' ? " - " : " + ") << body;
        }
    }
    return os.str();
}

std::string render_monomial(const std::vector<std::string>& names, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << '*';
        first = false;
        os << names[static_cast<std::size_t>(w[i])];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool eat(char c) {
        if (!done() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw usage_error("expected '" + std::string(1, c) + "' in scalar text");
    }
};

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}';
}

int parse_int(Cursor& c) {
    bool neg = c.eat('-');
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw usage_error("expected integer exponent in scalar text");
    long v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        ++c.i;
        if (v > 1 << 24) throw usage_error("exponent out of range");
    }
    return static_cast<int>(neg ? -v : v);
}

Scalar parse_expr(const ParameterContext& ctx, Cursor& c);

Scalar parse_factor(const ParameterContext& ctx, Cursor& c) {
    if (c.done()) throw usage_error("unexpected end of scalar text");
    if (c.eat('(')) {
        Scalar inner = parse_expr(ctx, c);
        c.expect(')');
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        BigInt v = 0;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            v = v * 10 + (c.peek() - '0');
            ++c.i;
        }
        return Scalar::from_rational(ctx, Rational(v));
    }
    // variable name, possibly with a power
    std::size_t start = c.i;
    while (!c.done() && name_char(c.peek()) && c.peek() != '^') ++c.i;
    std::string name = c.s.substr(start, c.i - start);
    if (name.empty()) throw usage_error("cannot parse scalar text near position " +
                                        std::to_string(c.i));
    int power = 1;
    if (c.eat('^')) power = parse_int(c);
    if (name == "q") return Scalar::q_power(ctx, 1).pow(power);
    return Scalar::variable(ctx, name, power);
}

Scalar parse_term(const ParameterContext& ctx, Cursor& c) {
    Scalar acc = parse_factor(ctx, c);
    while (!c.done() && (c.peek() == '*' || c.peek() == '/')) {
        char op = c.peek();
        ++c.i;
        Scalar f = parse_factor(ctx, c);
        acc = op == '*' ? acc * f : acc / f;
    }
    return acc;
}

Scalar parse_expr(const ParameterContext& ctx, Cursor& c) {
    bool neg = c.eat('-');
    Scalar acc = parse_term(ctx, c);
    if (neg) acc = -acc;
    while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        char op = c.peek();
        ++c.i;
        Scalar t = parse_term(ctx, c);
        acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
}

} // namespace

Scalar parse_scalar(const ParameterContext& ctx, const std::string& text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty() || compact == "0") return Scalar::zero(ctx);
    Cursor c{compact};
    Scalar out = parse_expr(ctx, c);
    if (!c.done())
        throw usage_error("trailing characters in scalar text: '" + compact.substr(c.i) + "'");
    return out;
}

FreeElement parse_element(const GenSetPtr& gens, const std::string& text) {
    const ParameterContext& ctx = gens->context();
    std::vector<std::string> tokens;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);

    FreeElement out(gens);
    if (tokens.empty()) return out;

    // the renderer glues a leading minus to the first term
    if (tokens[0].size() > 1 && tokens[0][0] == '-' &&
        gens->index_of(tokens[0]) < 0) {
        std::string rest = tokens[0].substr(1);
        tokens[0] = "-";
        tokens.insert(tokens.begin() + 1, rest);
    }

    Scalar coeff = Scalar::one(ctx);
    Word word;
    bool have_any = false;
    bool negate = false;

    auto flush = [&]() {
        if (!have_any) {
            if (negate) throw usage_error("dangling sign in element text");
            return;
        }
        out.add_term(word, negate ? -coeff : coeff);
        coeff = Scalar::one(ctx);
        word.clear();
        have_any = false;
    };

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const std::string& s = tokens[t];
        if (s == "+" || s == "-") {
            flush();
            negate = (s == "-");
            continue;
        }
        if (s == "0" && !have_any) {
            have_any = true;
            coeff = Scalar::zero(ctx);
            continue;
        }
        int gi = gens->index_of(s);
        if (gi >= 0) {
            word.push_back(gi);
            have_any = true;
            continue;
        }
        auto star = s.rfind('*');
        if (star != std::string::npos) {
            std::string suffix = s.substr(star + 1);
            int gj = gens->index_of(suffix);
            if (gj >= 0) {
                coeff = coeff * parse_scalar(ctx, s.substr(0, star));
                word.push_back(gj);
                have_any = true;
                continue;
            }
        }
        // pure scalar factor
        coeff = coeff * parse_scalar(ctx, s);
        have_any = true;
    }
    flush();
    return out;
}

} // namespace qorbit
