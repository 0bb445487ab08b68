#include "ramo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ramo/errors.hpp"

namespace ramo {

void Polynomial::add_term(const Monomial& m, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

uint32_t Polynomial::total_degree() const {
    uint32_t deg = 0;
    for (const auto& [m, c] : terms_) {
        uint32_t d = 0;
        for (uint32_t e : m) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

Polynomial Polynomial::constant(size_t nvars, long long c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest monomial first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long long c = it->second;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        long long ac = c < 0 ? -c : c;
        bool any_var = false;
        for (uint32_t e : it->first)
            if (e > 0) any_var = true;
        if (ac != 1 || !any_var) out << ac;
        bool star = ac != 1;
        for (size_t v = 0; v < it->first.size(); ++v) {
            uint32_t e = it->first[v];
            if (e == 0) continue;
            if (star) out << "*";
            star = true;
            out << var_names[v];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, (long)pos); }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start || std::isdigit(static_cast<unsigned char>(s[start])))
            fail("expected identifier");
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Lexer lx{text};
    Polynomial poly(vars.size());

    auto var_index = [&](const std::string& name, size_t at) -> size_t {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw ParseError("unknown variable '" + name + "'", (long)at);
        return (size_t)(it - vars.begin());
    };

    auto parse_term = [&](long long sign) {
        long long coeff = sign;
        Monomial mono(vars.size(), 0);
        bool any_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= lx.integer();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t at = lx.pos;
                std::string name = lx.ident();
                size_t vi = var_index(name, at);
                uint32_t exp = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    long long e = lx.integer();
                    if (e < 0) lx.fail("negative exponent");
                    exp = (uint32_t)e;
                }
                mono[vi] += exp;
            } else {
                lx.fail("expected integer or variable");
            }
            any_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!any_factor) lx.fail("empty term");
        poly.add_term(mono, coeff);
    };

    if (lx.eof()) throw ParseError("empty polynomial", 0);
    long long sign = 1;
    if (lx.peek() == '-') {
        sign = -1;
        ++lx.pos;
    } else if (lx.peek() == '+') {
        ++lx.pos;
    }
    parse_term(sign);
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else lx.fail("expected '+' or '-'");
        ++lx.pos;
        parse_term(sign);
    }
    return poly;
}

} // namespace ramo
