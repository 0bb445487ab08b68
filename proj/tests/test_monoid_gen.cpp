#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramo/catalog.hpp"
#include "ramo/errors.hpp"
#include "ramo/lattice.hpp"
#include "ramo/map_monoid.hpp"
#include "ramo/ring_description.hpp"

using namespace ramo;

namespace {

IdealLattice lattice_from(const std::string& doc) {
    return IdealLattice::enumerate(build_ring(parse_ring_description(doc)));
}

const std::string kFx2 = R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}})";
const std::string kFx3 = R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})";
const std::string kFx3xGf2 =
    R"({"type":"product","factors":[)" + kFx3 + R"(,{"type":"cyclic","n":2}]})";

} // namespace

TEST_CASE("field monoid: two elements with r = 1 and a^2 = 1") {
    auto lat = lattice_from(R"({"type":"cyclic","n":2})");
    auto m = MapMonoid::generate(lat, "ra");
    CHECK(m.size() == 2);
    CHECK(m.relation_check("r", "1"));
    CHECK(m.relation_check("aa", "1"));
    CHECK(!m.relation_check("a", "1"));
    // {0} and R swap under a
    CHECK(m.orbit(lat.zero_index()) == std::vector<size_t>{lat.zero_index(), lat.unit_index()});
    // 1 and a are incomparable
    CHECK(m.hasse().empty());
    CHECK(is_isomorphic(m.export_abstract(), *catalog_lookup("field")));
}

TEST_CASE("example 1: F2[x]/(x^2)") {
    auto lat = lattice_from(kFx2);
    auto m = MapMonoid::generate(lat, "ra");
    CHECK(m.size() == 7);

    auto k = m.k_numbers();
    CHECK(k.K == 7);
    CHECK(k.ring_k == 3);
    REQUIRE(lat.size() == 3); // {0} < (x) < R in canonical order
    CHECK(k.per_ideal == std::vector<size_t>{3, 1, 3});

    CHECK(m.relation_check("rara", "rar"));
    CHECK(m.relation_check("arar", "rar"));
    CHECK(m.relation_check("rararar", "rar"));
    CHECK(m.relation_check("aa", "1"));

    // rar is the constant map with value r({0})
    auto flags = m.classify_properties();
    size_t rar = 0;
    while (m.label(rar) != "rar") ++rar;
    CHECK(flags[rar].constant);
    CHECK(m.image(rar)[0] == lat.radical(lat.zero_index()));
    // rar = rara has both parities, hence both order flags
    CHECK(flags[rar].parity_even);
    CHECK(flags[rar].parity_odd);
    CHECK(flags[rar].order_preserving);
    CHECK(flags[rar].order_reversing);

    CHECK(is_isomorphic(m.export_abstract(), *catalog_lookup("EX1-7")));
}

TEST_CASE("Z/4 realizes the example-1 collapse as well") {
    auto lat = lattice_from(R"({"type":"cyclic","n":4})");
    auto m = MapMonoid::generate(lat, "ra");
    CHECK(m.size() == 7);
    CHECK(is_isomorphic(m.export_abstract(), *catalog_lookup("EX1-7")));
}

TEST_CASE("example 2: F2[x]/(x^3)") {
    auto lat = lattice_from(kFx3);
    auto m = MapMonoid::generate(lat, "ra");
    CHECK(m.size() == 8);

    auto k = m.k_numbers();
    REQUIRE(lat.size() == 4);
    // trivial ideals have k-number 4, the two nontrivial ones 2
    CHECK(k.per_ideal == std::vector<size_t>{4, 2, 2, 4});
    CHECK(k.ring_k == 4);

    CHECK(m.relation_check("rara", "rar"));
    CHECK(!m.relation_check("arar", "rar"));
    CHECK(is_isomorphic(m.export_abstract(), *catalog_lookup("LOCDUAL-i")));
}

TEST_CASE("composite dual ring: F2[x]/(x^3) x GF(2)") {
    auto lat = lattice_from(kFx3xGf2);
    auto m = MapMonoid::generate(lat, "ra");
    CHECK(m.size() == 10);
    CHECK(m.relation_check("rar", "rarara"));
    CHECK(!m.relation_check("rar", "rara"));
    CHECK(is_isomorphic(m.export_abstract(), *catalog_lookup("LOCDUAL-ii")));
}

TEST_CASE("semiprime monoids live inside {1, a, a^2, r}") {
    for (const char* doc : {R"({"type":"cyclic","n":6})", R"({"type":"cyclic","n":30})",
                            R"({"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":3}]})"}) {
        auto lat = lattice_from(doc);
        REQUIRE(lat.is_semiprime_ring());
        auto m = MapMonoid::generate(lat, "ra");
        CHECK(m.size() <= 4);
        CHECK(m.relation_check("ra", "ar"));
        CHECK(m.relation_check("ra", "a"));
        std::set<std::string> labels;
        for (size_t i = 0; i < m.size(); ++i) labels.insert(m.label(i));
        for (const auto& l : labels) CHECK((l == "1" || l == "r" || l == "a" || l == "aa"));
    }
}

TEST_CASE("dualradical generator: d = a on semiprime rings, d^3 = d, rd = d = dr") {
    auto lat = lattice_from(R"({"type":"cyclic","n":6})");
    auto m = MapMonoid::generate(lat, "rad");
    CHECK(m.relation_check("a", "d"));
    CHECK(m.relation_check("ddd", "d"));
    CHECK(m.relation_check("rd", "d"));
    CHECK(m.relation_check("dr", "d"));

    // non-semiprime: d and a differ on Z/12
    auto lat12 = lattice_from(R"({"type":"cyclic","n":12})");
    auto m12 = MapMonoid::generate(lat12, "rad");
    CHECK(!m12.relation_check("a", "d"));
    CHECK(m12.relation_check("ddd", "d"));
    CHECK(m12.relation_check("rd", "d"));
    CHECK(m12.relation_check("dr", "d"));
    // rd monoid alone
    auto md = MapMonoid::generate(lat12, "rd");
    CHECK(md.relation_check("dd", "r") == md.relation_check("r", "dd"));
    CHECK_THROWS_AS((void)md.relation_check("a", "d"), std::invalid_argument);
}

TEST_CASE("canonical labels are shortest with a < d < r tie-break") {
    auto lat = lattice_from(kFx2);
    auto m = MapMonoid::generate(lat, "ra");
    for (size_t i = 0; i < m.size(); ++i) {
        const std::string& w = m.label(i);
        CHECK(m.apply_word(w) == m.image(i));
        for (size_t j = 0; j < i; ++j) {
            const std::string& v = m.label(j);
            // element order is (length, lex); identity label "1" sorts first
            bool lt = v == "1" || (w != "1" && (v.size() < w.size() ||
                                                (v.size() == w.size() && v < w)));
            CHECK(lt);
        }
    }
}

TEST_CASE("classification flags") {
    auto lat = lattice_from(kFx3);
    auto m = MapMonoid::generate(lat, "ra");
    auto flags = m.classify_properties();
    CHECK(flags[m.identity_index()].order_preserving);
    CHECK(flags[m.identity_index()].idempotent);
    CHECK(!flags[m.identity_index()].constant);
    for (size_t i = 0; i < m.size(); ++i) {
        // parity implies order behavior; both parities imply constant
        if (flags[i].parity_even) CHECK(flags[i].order_preserving);
        if (flags[i].parity_odd) CHECK(flags[i].order_reversing);
        if (flags[i].parity_even && flags[i].parity_odd) CHECK(flags[i].constant);
        if (flags[i].order_preserving && flags[i].order_reversing) CHECK(flags[i].constant);
        CHECK((flags[i].parity_even || flags[i].parity_odd));
    }
}

TEST_CASE("monoid budget") {
    auto lat = lattice_from(kFx2);
    CHECK_THROWS_AS(MapMonoid::generate(lat, "ra", 3), BudgetError);
}

TEST_CASE("cross-module oracle instance: product monoid vs odot") {
    auto m1 = MapMonoid::generate(lattice_from(kFx2), "ra").export_abstract();
    auto m2 = MapMonoid::generate(lattice_from(R"({"type":"cyclic","n":2})"), "ra")
                  .export_abstract();
    auto prod = MapMonoid::generate(
        lattice_from(R"({"type":"product","factors":[)" + kFx2 +
                     R"(,{"type":"cyclic","n":2}]})"),
        "ra");
    CHECK(is_isomorphic(prod.export_abstract(), odot({m1, m2})));
}

TEST_CASE("dot output marks idempotents") {
    auto m = MapMonoid::generate(lattice_from(kFx2), "ra");
    std::string dot = m.to_dot();
    CHECK(dot.find("\"rar\" [style=bold]") != std::string::npos);
    CHECK(dot.find("\"a\" [style=bold]") == std::string::npos);
}
