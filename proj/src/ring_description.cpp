#include "ramo/ring_description.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "ramo/errors.hpp"

namespace ramo {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingDescription& RingDescription::operator=(const RingDescription& o) {
    if (this == &o) return *this;
    kind = o.kind;
    n = o.n;
    p = o.p;
    vars = o.vars;
    caps = o.caps;
    extra_relations = o.extra_relations;
    factors = o.factors;
    base = o.base ? std::make_unique<RingDescription>(*o.base) : nullptr;
    return *this;
}

RingDescription RingDescription::cyclic(uint64_t n) {
    RingDescription d;
    d.kind = Kind::Cyclic;
    d.n = n;
    if (n < 1) throw ParseError("cyclic ring requires n >= 1");
    return d;
}

RingDescription RingDescription::product(std::vector<RingDescription> factors) {
    if (factors.empty()) throw ParseError("product requires at least one factor");
    RingDescription d;
    d.kind = Kind::Product;
    d.factors = std::move(factors);
    return d;
}

RingDescription RingDescription::trivial_extension(RingDescription base) {
    RingDescription d;
    d.kind = Kind::TrivialExtension;
    d.base = std::make_unique<RingDescription>(std::move(base));
    return d;
}

std::string RingDescription::display() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::Cyclic:
        out << "Z/" << n;
        break;
    case Kind::PolyQuotient: {
        out << "F" << p << "[";
        for (size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
        out << "]/(";
        bool first = true;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (!first) out << ", ";
            first = false;
            out << vars[i] << "^" << caps[i].degree;
            if (!caps[i].rhs.is_zero()) out << " - (" << caps[i].rhs.to_string(vars) << ")";
        }
        for (const auto& g : extra_relations) {
            out << ", " << g.to_string(vars);
        }
        out << ")";
        break;
    }
    case Kind::Product: {
        bool first = true;
        for (const auto& f : factors) {
            if (!first) out << " x ";
            first = false;
            out << f.display();
        }
        break;
    }
    case Kind::TrivialExtension:
        out << base->display() << "(+)" << base->display();
        break;
    }
    return out.str();
}

namespace {

using nlohmann::json;

// "x^2 = x + 1" -> cap for variable `var`
RingDescription::CapRule parse_cap(const std::string& var, const std::string& text,
                                   const std::vector<std::string>& vars) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("cap rule for '" + var + "' has no '='");
    Polynomial lhs = parse_polynomial(text.substr(0, eq), vars);
    if (lhs.terms().size() != 1)
        throw ParseError("cap left-hand side must be a single monomial: " + text);
    const auto& [mono, coeff] = *lhs.terms().begin();
    if (coeff != 1) throw ParseError("cap left-hand side must be monic: " + text);
    RingDescription::CapRule rule;
    uint32_t nonzero = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (mono[i] == 0) continue;
        ++nonzero;
        if (vars[i] != var)
            throw ParseError("cap for '" + var + "' rewrites a different variable: " + text);
        rule.degree = mono[i];
    }
    if (nonzero != 1 || rule.degree < 1)
        throw ParseError("cap left-hand side must be " + var + "^d with d >= 1: " + text);
    rule.rhs = parse_polynomial(text.substr(eq + 1), vars);
    if (!rule.rhs.is_zero() && rule.rhs.total_degree() >= rule.degree)
        throw ParseError("cap right-hand side must have total degree < " +
                         std::to_string(rule.degree) + ": " + text);
    return rule;
}

RingDescription from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("ring description must be an object with a 'type' field");
    std::string type = j["type"].get<std::string>();

    if (type == "cyclic") {
        if (!j.contains("n") || !j["n"].is_number_unsigned())
            throw ParseError("cyclic ring requires a positive integer 'n'");
        return RingDescription::cyclic(j["n"].get<uint64_t>());
    }

    if (type == "poly_quotient") {
        RingDescription d;
        d.kind = RingDescription::Kind::PolyQuotient;
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw ParseError("poly_quotient requires an integer 'p'");
        d.p = j["p"].get<uint64_t>();
        if (!is_prime_u64(d.p))
            throw ParseError("poly_quotient modulus " + std::to_string(d.p) + " is not prime");
        if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
            throw ParseError("poly_quotient requires a nonempty 'vars' list");
        std::set<std::string> seen;
        for (const auto& v : j["vars"]) {
            if (!v.is_string()) throw ParseError("variable names must be strings");
            std::string name = v.get<std::string>();
            if (!seen.insert(name).second)
                throw ParseError("duplicate variable '" + name + "'");
            d.vars.push_back(name);
        }
        if (!j.contains("caps") || !j["caps"].is_object())
            throw ParseError("poly_quotient requires a 'caps' object");
        for (const auto& v : d.vars) {
            if (!j["caps"].contains(v))
                throw ParseError("missing cap rule for variable '" + v + "'");
            d.caps.push_back(parse_cap(v, j["caps"][v].get<std::string>(), d.vars));
        }
        for (auto it = j["caps"].begin(); it != j["caps"].end(); ++it) {
            if (seen.find(it.key()) == seen.end())
                throw ParseError("cap rule for undeclared variable '" + it.key() + "'");
        }
        if (j.contains("extra_relations")) {
            if (!j["extra_relations"].is_array())
                throw ParseError("'extra_relations' must be a list of polynomial strings");
            for (const auto& r : j["extra_relations"])
                d.extra_relations.push_back(parse_polynomial(r.get<std::string>(), d.vars));
        }
        return d;
    }

    if (type == "product") {
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
            throw ParseError("product requires a nonempty 'factors' list");
        std::vector<RingDescription> factors;
        for (const auto& f : j["factors"]) factors.push_back(from_json(f));
        return RingDescription::product(std::move(factors));
    }

    if (type == "trivial_extension") {
        if (!j.contains("base"))
            throw ParseError("trivial_extension requires a 'base' ring");
        return RingDescription::trivial_extension(from_json(j["base"]));
    }

    throw ParseError("unknown ring type '" + type + "'");
}

} // namespace

RingDescription parse_ring_description(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), (long)e.byte);
    }
    return from_json(j);
}

} // namespace ramo
