#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "locres/polynomial.hpp"

namespace locres {

enum class Style { Plain, Latex };

namespace detail {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }
    bool number_next() { return std::isdigit((unsigned char)peek()); }
    bool ident_next() {
        char c = peek();
        return std::isalpha((unsigned char)c) || c == '_';
    }
    std::string read_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

template <class K>
class PolyParser {
  public:
    PolyParser(std::string_view text, RingPtr ring) : lex_{text}, ring_(std::move(ring)) {}

    Polynomial<K> run() {
        Polynomial<K> p = expr();
        if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos);
        return p;
    }

  private:
    using P = Polynomial<K>;

    P expr() {
        P acc = term();
        while (true) {
            if (lex_.accept('+'))
                acc += term();
            else if (lex_.accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    P term() {
        P acc = factor();
        while (lex_.accept('*')) acc *= factor();
        return acc;
    }

    long read_nat(const char* what) {
        if (!lex_.number_next()) throw ParseError(std::string("expected ") + what, lex_.pos);
        std::string digits = lex_.read_number();
        if (digits.size() > 6) throw ParseError("exponent too large", lex_.pos);
        return std::stol(digits);
    }

    P factor() {
        if (lex_.accept('-')) return -factor();
        if (lex_.accept('(')) {
            P p = expr();
            lex_.expect(')', "')'");
            return p;
        }
        if (lex_.number_next()) {
            std::string num = lex_.read_number();
            std::string lit = num;
            if (lex_.accept('/')) {
                if (!lex_.number_next()) throw ParseError("expected denominator", lex_.pos);
                std::string den = lex_.read_number();
                lit += "/" + den;
            }
            Rational r;
            try {
                r = Rational::parse(lit);
            } catch (const ParseError&) {
                throw ParseError("bad rational literal '" + lit + "'", lex_.pos);
            }
            return P::constant(ring_, FieldTraits<K>::from_rational(r));
        }
        if (lex_.ident_next()) {
            std::size_t at = lex_.pos;
            std::string name = lex_.read_ident();
            long e = 1;
            if (lex_.accept('^')) e = read_nat("exponent");
            if (auto vi = ring_->var_index(name)) {
                ExpVec m = ExpVec::zero(ring_->nvars());
                m[*vi] = (int32_t)e;
                return P::monomial(ring_, std::move(m), K(1));
            }
            if constexpr (FieldTraits<K>::parametric) {
                if (ring_->params) {
                    if (auto pi = ring_->params->var_index(name)) {
                        K v = FieldTraits<K>::parameter(ring_->params, *pi);
                        return P::constant(ring_, field_pow(v, (unsigned long)e));
                    }
                }
            } else if (ring_->params && ring_->params->var_index(name)) {
                throw ParseError("parameter '" + name + "' in a non-parametric context", at);
            }
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError("expected a factor", lex_.pos);
    }

    Lexer lex_;
    RingPtr ring_;
};

// true if s needs parentheses when used as a coefficient in front of '*'
inline bool coeff_needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || (c == '-' && i > 0))) return true;
    }
    return false;
}

}  // namespace detail

template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr& ring) {
    return detail::PolyParser<K>(text, ring).run();
}

template <class K>
std::string format_poly(const Polynomial<K>& p, Style style = Style::Plain) {
    if (p.is_zero()) return "0";
    const auto& vars = p.ring() ? p.ring()->vars : std::vector<std::string>{};
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string mono;
        for (int i = 0; i < t.m.size(); ++i) {
            if (t.m[i] == 0) continue;
            if (!mono.empty()) mono += style == Style::Plain ? "*" : " ";
            mono += vars[i];
            if (t.m[i] != 1)
                mono += style == Style::Plain ? "^" + std::to_string(t.m[i])
                                              : "^{" + std::to_string(t.m[i]) + "}";
        }
        std::string cs = FieldTraits<K>::to_string(t.c);
        std::string piece;
        if (mono.empty()) {
            piece = cs;
        } else if (cs == "1") {
            piece = mono;
        } else if (cs == "-1") {
            piece = "-" + mono;
        } else {
            if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
            piece = cs + (style == Style::Plain ? "*" : "") + mono;
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace locres
