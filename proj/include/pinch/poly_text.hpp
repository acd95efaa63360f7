#pragma once

#include <cctype>
#include <string>

#include "pinch/poly.hpp"

namespace pinch {

// Textual polynomial grammar, shared by the CLI output and the tests:
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := coeff ['*' mono] | mono
//   mono   := var ['^' nat] ('*' var ['^' nat])*
//   coeff  := nat ['/' nat]
//
// Variables are the ring's variable names. GF(p) coefficients print as their
// canonical representative in [0, p).

namespace detail {
inline bool coeff_is_negative(const Rat& c) { return sgn(c) < 0; }
inline bool coeff_is_negative(const Fp&) { return false; }
inline Rat coeff_abs(const Rat& c) { return abs(c); }
inline Fp coeff_abs(const Fp& c) { return c; }
inline bool coeff_is_one(const Rat& c) { return c == 1; }
inline bool coeff_is_one(const Fp& c) { return c.value() == 1; }
} // namespace detail

template <class K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const int n = p.ring().nvars();
    for (const auto& t : p.terms()) {
        K a = detail::coeff_abs(t.coeff);
        bool neg = detail::coeff_is_negative(t.coeff);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool has_vars = total_degree(t.mono, n) > 0;
        if (!detail::coeff_is_one(a) || !has_vars) {
            out += to_string(a);
            if (has_vars) out += "*";
        }
        bool first_var = true;
        for (int i = 0; i < n; ++i) {
            uint16_t e = t.mono[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!first_var) out += "*";
            first_var = false;
            out += p.ring().var_name(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace detail {

struct PolyLexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_ident() {
        skip_ws();
        return pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw SchemaError("expected identifier in polynomial at offset " +
                                            std::to_string(pos));
        return std::string(s.substr(start, pos - start));
    }
    long natural() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw SchemaError("expected number in polynomial at offset " + std::to_string(pos));
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
};

} // namespace detail

/// Parse the grammar above into a polynomial of `ring`.
template <class K>
Poly<K> parse_poly(const PolyRing<K>& ring, std::string_view text) {
    detail::PolyLexer lx{text};
    Poly<K> result(ring);
    bool first = true;
    while (!lx.done()) {
        bool neg = false;
        if (lx.eat('-'))
            neg = true;
        else if (lx.eat('+')) {
            if (first) throw SchemaError("polynomial may not start with '+'");
        } else if (!first) {
            throw SchemaError("expected '+' or '-' between terms");
        }
        first = false;

        Rat coeff = make_rat(1);
        Expo mono{};
        bool saw_factor = false;
        if (lx.peek_digit()) {
            long num = lx.natural();
            long den = 1;
            if (lx.eat('/')) den = lx.natural();
            coeff = make_rat(num, den);
            saw_factor = true;
            if (!lx.eat('*')) {
                result += Poly<K>::constant(ring, ring.scalar(neg ? -coeff : coeff));
                continue;
            }
        }
        while (true) {
            std::string name = lx.ident();
            int idx = ring.var_index(name);
            if (idx < 0) throw SchemaError("unknown variable '" + name + "'");
            long e = 1;
            if (lx.eat('^')) e = lx.natural();
            mono[static_cast<size_t>(idx)] =
                static_cast<uint16_t>(mono[static_cast<size_t>(idx)] + e);
            saw_factor = true;
            if (!lx.eat('*')) break;
            if (lx.peek_digit()) { // allow x*2 style? no: require var after '*'
                throw SchemaError("coefficient must precede variables in a term");
            }
        }
        if (!saw_factor) throw SchemaError("empty term in polynomial");
        K c = ring.scalar(neg ? -coeff : coeff);
        result += Poly<K>::from_terms(ring, {{mono, c}});
    }
    return result;
}

} // namespace pinch
