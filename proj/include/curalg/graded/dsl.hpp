#pragma once

// Text form of algebra presentations.
//
//   spec   := stmt (';' stmt)* [';']
//   stmt   := 'free' gen (',' gen)*        free generators
//           | gen                          further free generators
//           | 'd' NAME '=' expr            differential of a generator
//           | 'window' INT (',' INT)*      weight bounds for free algebras
//           | 'quot' NAME '^' INT          C[x]/(x^m)
//           | 'cross' ['W' '=' INT]        C[x,y]/(xy)
//           | 'sqzero' 'D+' '=' INT 'D-' '=' INT
//           | 'laurent' 'D' '=' INT
//   gen    := NAME (':' attr)*
//   attr   := 'even' | 'odd' | 'deg' '=' INT | 'w' '=' INT (',' INT)*
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := coeff ['*' monomial] | monomial
//   coeff  := INT ['/' INT]
//   monomial := NAME ['^' INT] ('*' NAME ['^' INT])*
//
// Inside 'w=', an integer after a comma continues the weight list; a name
// starts the next generator.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "curalg/error.hpp"
#include "curalg/graded/algebras.hpp"

namespace curalg {

class ParseError : public Error {
public:
    ParseError(int line, int column, std::set<std::string> expected, const std::string& found,
               const std::string& message = {})
        : Error(format(line, column, expected, found, message)), line_(line), column_(column),
          expected_(std::move(expected)), found_(found)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    static std::string format(int line, int column, const std::set<std::string>& expected, const std::string& found,
                              const std::string& message)
    {
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": ";
        if (!message.empty()) {
            os << message;
        } else {
            os << "expected ";
            bool first = true;
            for (const auto& e : expected) {
                os << (first ? "" : " | ") << e;
                first = false;
            }
            os << ", found " << found;
        }
        return os.str();
    }
    int line_, column_;
    std::set<std::string> expected_;
    std::string found_;
};

struct SpecTerm {
    Rational coeff = 1;
    std::vector<std::pair<std::string, int>> factors;
    friend bool operator==(const SpecTerm&, const SpecTerm&) = default;
};

struct DeltaRule {
    std::string generator;
    std::vector<SpecTerm> terms;
    int line = 0, column = 0;
    friend bool operator==(const DeltaRule& a, const DeltaRule& b)
    {
        return a.generator == b.generator && a.terms == b.terms;
    }
};

/// Parsed algebra description, before construction.
struct AlgebraSpec {
    enum class Kind { Free, Quot, Cross, SqZero, Laurent };
    Kind kind = Kind::Free;
    std::vector<GeneratorSpec> generators;
    std::vector<DeltaRule> deltas;
    std::optional<std::vector<int>> window;
    std::string var = "x";
    int param = 0;  // m for quot, W for cross, D for laurent, D+ for sqzero
    int param2 = 0; // D- for sqzero
    bool cross_has_w = false;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

namespace detail {

struct Token {
    enum class Type { Name, Int, Sym, End } type;
    std::string text;
    int line, column;
};

inline std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        const int l = line, cl = col;
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Type::Name, s.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Type::Int, s.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::string(";,:=^*+-/").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Type::Sym, std::string(1, static_cast<char>(c)), l, cl});
            advance(1);
        } else {
            throw ParseError(l, cl, {"name", "integer", "symbol"}, std::string("'") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Token::Type::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    AlgebraSpec parse()
    {
        AlgebraSpec spec;
        bool have_kind = false;
        auto set_kind = [&](AlgebraSpec::Kind k, const Token& at) {
            if (have_kind && spec.kind != k)
                throw ParseError(at.line, at.column, {}, at.text, "conflicting algebra kinds");
            if (k != AlgebraSpec::Kind::Free && have_kind)
                throw ParseError(at.line, at.column, {}, at.text, "algebra kind given twice");
            spec.kind = k;
            have_kind = true;
        };
        if (peek().type == Token::Type::End) throw error({"statement"});
        while (true) {
            const Token& t = peek();
            if (is_name("free")) {
                set_kind(AlgebraSpec::Kind::Free, t);
                next();
                gen_list(spec);
            } else if (is_name("d") && peek(1).type == Token::Type::Name) {
                next();
                DeltaRule r;
                r.line = peek().line;
                r.column = peek().column;
                r.generator = expect_name();
                expect_sym("=");
                r.terms = expr();
                spec.deltas.push_back(std::move(r));
            } else if (is_name("window")) {
                next();
                std::vector<int> w{expect_int()};
                while (is_sym(",")) {
                    next();
                    w.push_back(expect_int());
                }
                spec.window = w;
            } else if (is_name("quot")) {
                set_kind(AlgebraSpec::Kind::Quot, t);
                next();
                spec.var = expect_name();
                expect_sym("^");
                spec.param = expect_int();
                if (spec.param < 1) throw ParseError(t.line, t.column, {}, "", "exponent must be >= 1");
            } else if (is_name("cross")) {
                set_kind(AlgebraSpec::Kind::Cross, t);
                next();
                if (is_name("W")) {
                    next();
                    expect_sym("=");
                    spec.param = expect_int();
                    spec.cross_has_w = true;
                }
            } else if (is_name("sqzero")) {
                set_kind(AlgebraSpec::Kind::SqZero, t);
                next();
                expect_keyword("D");
                expect_sym("+");
                expect_sym("=");
                spec.param = expect_int();
                expect_keyword("D");
                expect_sym("-");
                expect_sym("=");
                spec.param2 = expect_int();
                if (spec.param2 < 1) throw ParseError(t.line, t.column, {}, "", "pole order bound must be >= 1");
            } else if (is_name("laurent")) {
                set_kind(AlgebraSpec::Kind::Laurent, t);
                next();
                expect_keyword("D");
                expect_sym("=");
                spec.param = expect_int();
            } else if (t.type == Token::Type::Name) {
                if (have_kind && spec.kind != AlgebraSpec::Kind::Free)
                    throw ParseError(t.line, t.column, {}, t.text, "generators only belong to free algebras");
                set_kind(AlgebraSpec::Kind::Free, t);
                gen_list(spec);
            } else {
                throw error({"free", "d", "window", "quot", "cross", "sqzero", "laurent", "name"});
            }
            if (peek().type == Token::Type::End) break;
            expect_sym(";");
            if (peek().type == Token::Type::End) break;
        }
        validate(spec);
        return spec;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool is_name(const char* s) const { return peek().type == Token::Type::Name && peek().text == s; }
    bool is_sym(const char* s) const { return peek().type == Token::Type::Sym && peek().text == s; }

    static std::string describe(const Token& t)
    {
        return t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
    }
    ParseError error(std::set<std::string> expected) const
    {
        return ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
    }
    std::string expect_name()
    {
        if (peek().type != Token::Type::Name) throw error({"name"});
        return next().text;
    }
    void expect_keyword(const char* k)
    {
        if (!is_name(k)) throw error({k});
        next();
    }
    int expect_int()
    {
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        if (peek().type != Token::Type::Int) throw error({"integer"});
        int v = std::stoi(next().text);
        return neg ? -v : v;
    }
    void expect_sym(const char* s)
    {
        if (!is_sym(s)) throw error({std::string("'") + s + "'"});
        next();
    }

    void gen_list(AlgebraSpec& spec)
    {
        spec.generators.push_back(generator());
        while (is_sym(",")) {
            next();
            spec.generators.push_back(generator());
        }
    }

    GeneratorSpec generator()
    {
        GeneratorSpec g;
        g.name = expect_name();
        while (is_sym(":")) {
            next();
            if (is_name("even")) {
                next();
                g.degree = 0;
            } else if (is_name("odd")) {
                next();
                g.degree = 1;
            } else if (is_name("deg")) {
                next();
                expect_sym("=");
                g.degree = expect_int();
                if (g.degree < 0) throw ParseError(peek().line, peek().column, {}, "", "negative generator degree");
            } else if (is_name("w")) {
                next();
                expect_sym("=");
                g.weight = {expect_int()};
                while (is_sym(",") && (peek(1).type == Token::Type::Int || (peek(1).text == "-" && peek(2).type == Token::Type::Int))) {
                    next();
                    g.weight.push_back(expect_int());
                }
            } else {
                throw error({"even", "odd", "deg", "w"});
            }
        }
        return g;
    }

    std::vector<SpecTerm> expr()
    {
        std::vector<SpecTerm> terms;
        bool neg = false;
        if (is_sym("-")) {
            next();
            neg = true;
        }
        while (true) {
            SpecTerm t = term();
            if (neg) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (is_sym("+")) neg = false;
            else if (is_sym("-")) neg = true;
            else break;
            next();
        }
        return terms;
    }

    SpecTerm term()
    {
        SpecTerm t;
        if (peek().type == Token::Type::Int) {
            Integer num(next().text);
            Integer den = 1;
            if (is_sym("/")) {
                next();
                if (peek().type != Token::Type::Int) throw error({"integer"});
                den = Integer(next().text);
                if (den == 0) throw ParseError(peek().line, peek().column, {}, "", "zero denominator");
            }
            t.coeff = make_rational(num, den);
            if (!is_sym("*")) return t;
            next();
        } else if (peek().type != Token::Type::Name) {
            throw error({"integer", "name"});
        }
        while (true) {
            std::string n = expect_name();
            int e = 1;
            if (is_sym("^")) {
                next();
                e = expect_int();
                if (e < 0) throw ParseError(peek().line, peek().column, {}, "", "negative exponent");
            }
            t.factors.emplace_back(n, e);
            if (!is_sym("*")) break;
            next();
        }
        return t;
    }

    void validate(const AlgebraSpec& spec) const
    {
        std::set<std::string> names;
        for (const auto& g : spec.generators)
            if (!names.insert(g.name).second)
                throw ParseError(1, 1, {}, g.name, "duplicate generator " + g.name);
        std::set<std::string> seen;
        for (const auto& r : spec.deltas) {
            if (spec.kind != AlgebraSpec::Kind::Free)
                throw ParseError(r.line, r.column, {}, r.generator, "differentials need a free algebra");
            if (!names.count(r.generator))
                throw ParseError(r.line, r.column, {"generator"}, r.generator, "unknown generator " + r.generator);
            if (!seen.insert(r.generator).second)
                throw ParseError(r.line, r.column, {}, r.generator, "second differential rule for " + r.generator);
            for (const auto& t : r.terms)
                for (const auto& [n, e] : t.factors)
                    if (!names.count(n)) throw ParseError(r.line, r.column, {"generator"}, n, "unknown generator " + n);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline std::string print_weight(const std::vector<int>& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s;
}

} // namespace detail

inline AlgebraSpec parse_spec_text(const std::string& text) { return detail::Parser(text).parse(); }

/// Canonical text; parse_spec_text(print_spec(s)) == s for parsed specs.
inline std::string print_spec(const AlgebraSpec& s)
{
    std::ostringstream os;
    switch (s.kind) {
    case AlgebraSpec::Kind::Quot: os << "quot " << s.var << "^" << s.param; break;
    case AlgebraSpec::Kind::Cross:
        os << "cross";
        if (s.cross_has_w) os << " W=" << s.param;
        break;
    case AlgebraSpec::Kind::SqZero: os << "sqzero D+=" << s.param << " D-=" << s.param2; break;
    case AlgebraSpec::Kind::Laurent: os << "laurent D=" << s.param; break;
    case AlgebraSpec::Kind::Free:
        os << "free";
        for (std::size_t i = 0; i < s.generators.size(); ++i) {
            const auto& g = s.generators[i];
            os << (i ? ", " : " ") << g.name;
            if (g.degree == 0) os << ":even";
            else if (g.degree == 1) os << ":odd";
            else os << ":deg=" << g.degree;
            if (!g.weight.empty()) os << ":w=" << detail::print_weight(g.weight);
        }
        for (const auto& r : s.deltas) {
            os << "; d " << r.generator << " = ";
            for (std::size_t k = 0; k < r.terms.size(); ++k) {
                const auto& t = r.terms[k];
                Rational c = t.coeff;
                if (k == 0) {
                    if (c < 0) os << "-";
                } else {
                    os << (c < 0 ? " - " : " + ");
                }
                c = abs(c);
                bool need_star = false;
                if (c != 1 || t.factors.empty()) {
                    os << c.get_str();
                    need_star = true;
                }
                for (const auto& [n, e] : t.factors) {
                    if (need_star) os << "*";
                    os << n;
                    if (e != 1) os << "^" << e;
                    need_star = true;
                }
            }
        }
        break;
    }
    if (s.window) os << "; window " << detail::print_weight(*s.window);
    return os.str();
}

/// Builds the algebra; free algebras without a window use `default_bound` per coordinate.
inline GradedAlgebra build_algebra(const AlgebraSpec& s, int default_bound = 6)
{
    GradedAlgebra a;
    switch (s.kind) {
    case AlgebraSpec::Kind::Quot: a = quotient_truncated_poly(s.param, s.var); break;
    case AlgebraSpec::Kind::Cross: a = crossing_lines(s.cross_has_w ? s.param : default_bound); break;
    case AlgebraSpec::Kind::SqZero: a = square_zero_extension(s.param, s.param2); break;
    case AlgebraSpec::Kind::Laurent: a = laurent_window(s.param); break;
    case AlgebraSpec::Kind::Free: {
        std::size_t arity = 1;
        for (const auto& g : s.generators) arity = std::max(arity, g.weight.size());
        WeightWindow w;
        w.hi = s.window ? *s.window : std::vector<int>(arity, default_bound);
        std::vector<std::string> names;
        for (const auto& g : s.generators) names.push_back(g.name);
        FreeMonomials fm(s.generators);
        std::vector<Poly> delta(s.generators.size());
        for (const auto& r : s.deltas) {
            std::size_t gi = std::find(names.begin(), names.end(), r.generator) - names.begin();
            Poly p;
            for (const auto& t : r.terms) {
                Poly m{{fm.one(), t.coeff}};
                for (const auto& [n, e] : t.factors) {
                    std::size_t fi = std::find(names.begin(), names.end(), n) - names.begin();
                    for (int k = 0; k < e; ++k) m = fm.multiply(m, Poly{{fm.generator(fi), Rational(1)}});
                }
                poly_add(p, m);
            }
            delta[gi] = p;
        }
        try {
            a = free_skew_algebra(s.generators, w, delta);
        } catch (const DimensionError&) {
            throw;
        } catch (const Error& e) {
            int line = s.deltas.empty() ? 1 : s.deltas.front().line;
            int col = s.deltas.empty() ? 1 : s.deltas.front().column;
            for (const auto& r : s.deltas)
                if (std::string(e.what()).find(" " + r.generator + " ") != std::string::npos) {
                    line = r.line;
                    col = r.column;
                }
            throw ParseError(line, col, {}, "", e.what());
        }
        break;
    }
    }
    a.spec_text = print_spec(s);
    return a;
}

inline GradedAlgebra parse_algebra_spec(const std::string& text, int default_bound = 6)
{
    return build_algebra(parse_spec_text(text), default_bound);
}

} // namespace curalg
