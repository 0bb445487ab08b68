#include "ramo/report.hpp"

#include "ramo/catalog.hpp"

namespace ramo {

nlohmann::json lattice_report(const IdealLattice& lattice) {
    const FiniteRing& ring = lattice.ring();
    nlohmann::json j;
    j["ring"] = {{"name", ring.display_name()}, {"size", ring.size()}};

    nlohmann::json ideals = nlohmann::json::array();
    for (size_t i = 0; i < lattice.size(); ++i) {
        const Ideal& ideal = lattice.ideal(i);
        nlohmann::json gens = nlohmann::json::array();
        for (Elem g : ideal.additive_generators()) gens.push_back(ring.elem_to_string(g));
        ideals.push_back({{"index", i}, {"size", ideal.size()}, {"generators", gens}});
    }
    j["ideals"] = ideals;

    std::vector<std::vector<int>> contain(lattice.size(), std::vector<int>(lattice.size()));
    for (size_t i = 0; i < lattice.size(); ++i)
        for (size_t k = 0; k < lattice.size(); ++k) contain[i][k] = lattice.contains(i, k);
    j["containment"] = contain;
    j["spectrum"] = lattice.spectrum();
    j["nilradical"] = lattice.nilradical_index();

    std::vector<size_t> r, a, d;
    for (size_t i = 0; i < lattice.size(); ++i) {
        r.push_back(lattice.radical(i));
        a.push_back(lattice.annihilator(i));
        d.push_back(lattice.dualradical(i));
    }
    j["maps"] = {{"r", r}, {"a", a}, {"d", d}};
    return j;
}

namespace {

// relations named in the figures and theorems, restricted to the symbols
// the monoid was generated with
const std::vector<std::pair<std::string, std::string>>& named_relations() {
    static const std::vector<std::pair<std::string, std::string>> rels = {
        {"r", "1"},        {"aa", "1"},        {"aaa", "a"},     {"ra", "ar"},
        {"ra", "a"},       {"ar", "a"},        {"aa", "r"},      {"rar", "rara"},
        {"rar", "arar"},   {"rar", "rarara"},  {"rar", "rararar"}, {"ar", "ara"},
        {"aar", "r"},      {"raa", "r"},       {"raar", "aar"},  {"araa", "ar"},
        {"ddd", "d"},      {"rd", "d"},        {"dr", "d"},      {"dd", "r"},
    };
    return rels;
}

bool uses_only(const std::string& word, const std::string& gens) {
    for (char c : word)
        if (c != '1' && gens.find(c) == std::string::npos) return false;
    return true;
}

} // namespace

nlohmann::json monoid_report(const MapMonoid& monoid) {
    nlohmann::json j;
    j["generators"] = monoid.generator_symbols();

    auto flags = monoid.classify_properties();
    nlohmann::json elements = nlohmann::json::array();
    for (size_t i = 0; i < monoid.size(); ++i) {
        elements.push_back({{"word", monoid.label(i)},
                            {"image", monoid.image(i)},
                            {"flags",
                             {{"order_preserving", flags[i].order_preserving},
                              {"order_reversing", flags[i].order_reversing},
                              {"idempotent", flags[i].idempotent},
                              {"constant", flags[i].constant},
                              {"parity_even", flags[i].parity_even},
                              {"parity_odd", flags[i].parity_odd}}}});
    }
    j["elements"] = elements;

    std::vector<std::vector<size_t>> table(monoid.size(), std::vector<size_t>(monoid.size()));
    for (size_t x = 0; x < monoid.size(); ++x)
        for (size_t y = 0; y < monoid.size(); ++y) table[x][y] = monoid.compose(x, y);
    j["table"] = table;

    std::vector<std::vector<size_t>> order_pairs;
    for (size_t x = 0; x < monoid.size(); ++x)
        for (size_t y = 0; y < monoid.size(); ++y)
            if (x != y && monoid.leq(x, y)) order_pairs.push_back({x, y});
    j["order_pairs"] = order_pairs;

    auto k = monoid.k_numbers();
    j["k_numbers"] = {{"per_ideal", k.per_ideal}, {"ring_k", k.ring_k}, {"K", k.K}};
    return j;
}

nlohmann::json analysis_report(const IdealLattice& lattice, const MapMonoid& monoid) {
    nlohmann::json j;
    j["lattice"] = lattice_report(lattice);
    j["monoid"] = monoid_report(monoid);

    nlohmann::json rels;
    for (const auto& [l, r] : named_relations())
        if (uses_only(l, monoid.generator_symbols()) &&
            uses_only(r, monoid.generator_symbols()))
            rels[l + "=" + r] = monoid.relation_check(l, r);
    j["relations"] = rels;

    j["catalog"] = catalog_classify(monoid.export_abstract());
    return j;
}

} // namespace ramo
