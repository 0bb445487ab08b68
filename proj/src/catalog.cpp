#include "ramo/catalog.hpp"

#include <stdexcept>

#include "ramo/presentation.hpp"

namespace ramo {

namespace {

using Rules = std::vector<std::pair<std::string, std::string>>;
using Covers = std::vector<std::pair<std::string, std::string>>; // (lower, upper)

// table from the presentation, order from explicit Hasse cover data
OrderedMonoid entry(const std::string& name, const std::string& alphabet, Rules rules,
                    size_t expected, const Covers& covers) {
    RewritingPresentation pres;
    pres.alphabet = alphabet;
    pres.rules = std::move(rules);
    OrderedMonoid m = from_presentation(pres, name);
    if (m.size() != expected)
        throw std::logic_error("catalog " + name + ": presentation yields " +
                               std::to_string(m.size()) + " elements, expected " +
                               std::to_string(expected));
    size_t n = m.size();
    m.order.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) m.order[i * n + i] = 1;
    for (const auto& [lower, upper] : covers)
        m.order[m.eval_word(lower) * n + m.eval_word(upper)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j && m.leq(i, j))
                    for (size_t k = 0; k < n; ++k)
                        if (m.leq(j, k) && !m.leq(i, k)) {
                            m.order[i * n + k] = 1;
                            changed = true;
                        }
    }
    m.validate();
    return m;
}

std::vector<OrderedMonoid> build_catalog() {
    std::vector<OrderedMonoid> cat;

    cat.push_back(entry("KURA-14", "kc", {{"cc", "1"}, {"kk", "k"}, {"kckckck", "kck"}}, 14,
                        {{"1", "k"},       {"kckck", "k"},        {"ckc", "1"},
                         {"ckck", "kckck"}, {"kckc", "kckck"},    {"ckckckc", "ckck"},
                         {"ckckckc", "kckc"}, {"ckc", "ckckckc"}, {"c", "kc"},
                         {"kckckc", "kc"}, {"ck", "c"},           {"ckckc", "kckckc"},
                         {"kck", "kckckc"}, {"ckckck", "ckckc"},  {"ckckck", "kck"},
                         {"ck", "ckckck"}}));

    cat.push_back(entry("LOCDUAL-i", "ra", {{"rr", "r"}, {"aa", "1"}, {"rara", "rar"}}, 8,
                        {{"rar", "r"}, {"1", "r"}, {"rar", "ra"}, {"a", "ra"}, {"ara", "1"},
                         {"arar", "rar"}, {"ara", "arar"}, {"ar", "arar"}, {"ar", "a"}}));

    cat.push_back(entry("LOCDUAL-ii", "ra", {{"rr", "r"}, {"aa", "1"}, {"rarara", "rar"}}, 10,
                        {{"rara", "r"}, {"1", "r"}, {"rar", "ra"}, {"a", "ra"}, {"ara", "1"},
                         {"ar", "a"}, {"arar", "rara"}, {"ara", "arar"}, {"arara", "rar"},
                         {"ar", "arara"}}));

    cat.push_back(entry("EX1-7", "ra",
                        {{"rr", "r"}, {"aa", "1"}, {"rara", "rar"}, {"arar", "rar"}}, 7,
                        {{"rar", "r"}, {"1", "r"}, {"rar", "ra"}, {"a", "ra"}, {"ara", "1"},
                         {"ara", "rar"}, {"ar", "rar"}, {"ar", "a"}}));

    cat.push_back(entry("SEMIPRIME-max", "ra",
                        {{"rr", "r"}, {"aaa", "a"}, {"ra", "a"}, {"ar", "a"}}, 4,
                        {{"r", "aa"}, {"1", "r"}}));

    cat.push_back(entry("FULLSEMIPRIME", "ra", {{"r", "1"}, {"aaa", "a"}}, 3,
                        {{"1", "aa"}}));

    cat.push_back(entry("ZD-b", "ra",
                        {{"rr", "r"}, {"rara", "rar"}, {"aar", "r"}, {"raa", "r"},
                         {"aaa", "a"}},
                        9,
                        {{"aa", "r"}, {"rar", "r"}, {"rar", "ra"}, {"a", "ra"},
                         {"arar", "rar"}, {"ara", "arar"}, {"ar", "arar"}, {"ara", "aa"},
                         {"1", "aa"}, {"ar", "a"}}));

    cat.push_back(entry("ZD-c", "ra",
                        {{"rr", "r"}, {"aaa", "a"}, {"ara", "ar"}, {"raar", "aar"}}, 9,
                        {{"raa", "aar"}, {"ra", "aar"}, {"aa", "raa"}, {"r", "raa"},
                         {"1", "aa"}, {"1", "r"}, {"rar", "r"}, {"a", "ra"}, {"rar", "ra"},
                         {"ar", "rar"}, {"ar", "1"}, {"ar", "a"}}));

    cat.push_back(entry("ZDR-16", "ra",
                        {{"rr", "r"}, {"aaa", "a"}, {"araa", "ar"}, {"raar", "aar"},
                         {"rarar", "rara"}},
                        16,
                        {{"raa", "aar"}, {"aarara", "aar"}, {"r", "raa"}, {"aa", "raa"},
                         {"1", "r"}, {"rara", "r"}, {"1", "aa"}, {"ara", "aa"},
                         {"rara", "aarara"}, {"arar", "rara"}, {"ara", "arar"},
                         {"aarar", "aara"}, {"ra", "aara"}, {"rar", "aarar"},
                         {"rar", "ra"}, {"a", "ra"}, {"arara", "rar"}, {"ar", "arara"},
                         {"ar", "a"}}));

    return cat;
}

OrderedMonoid build_field_type() {
    RewritingPresentation pres;
    pres.alphabet = "ra";
    pres.rules = {{"r", "1"}, {"aa", "1"}};
    OrderedMonoid m = from_presentation(pres, "field");
    if (m.size() != 2) throw std::logic_error("field type: expected 2 elements");
    m.validate();
    return m;
}

} // namespace

const std::vector<OrderedMonoid>& catalog() {
    static const std::vector<OrderedMonoid> cat = build_catalog();
    return cat;
}

const OrderedMonoid* catalog_lookup(const std::string& name) {
    for (const auto& m : catalog())
        if (m.name == name) return &m;
    if (name == "field") {
        static const OrderedMonoid field = build_field_type();
        return &field;
    }
    return nullptr;
}

std::string catalog_classify(const OrderedMonoid& m) {
    if (const OrderedMonoid* f = catalog_lookup("field"); is_isomorphic(m, *f)) return "field";
    for (const auto& c : catalog())
        if (is_isomorphic(m, c)) return c.name;
    return "";
}

} // namespace ramo
