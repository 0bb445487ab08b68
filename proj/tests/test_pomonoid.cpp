#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramo/catalog.hpp"
#include "ramo/ordered_monoid.hpp"
#include "ramo/presentation.hpp"

using namespace ramo;

namespace {

OrderedMonoid presented(const std::string& alphabet,
                        std::vector<std::pair<std::string, std::string>> rules,
                        std::vector<std::pair<std::string, std::string>> axioms = {}) {
    RewritingPresentation pres;
    pres.alphabet = alphabet;
    pres.rules = std::move(rules);
    pres.order_axioms = std::move(axioms);
    return from_presentation(pres);
}

const OrderedMonoid& cat(const std::string& name) {
    const OrderedMonoid* m = catalog_lookup(name);
    REQUIRE(m != nullptr);
    return *m;
}

} // namespace

TEST_CASE("kuratowski presentation yields 14 elements") {
    auto m = presented("kc", {{"cc", "1"}, {"kk", "k"}, {"kckckck", "kck"}});
    CHECK(m.size() == 14);
    CHECK(m.eval_word("kckckck") == m.eval_word("kck"));
    // no shorter collapse: the 14 expected normal forms are pairwise distinct
    std::set<size_t> seen;
    for (const char* w : {"1", "k", "c", "kc", "ck", "kck", "ckc", "kckc", "ckck", "kckck",
                          "ckckc", "kckckc", "ckckck", "ckckckc"})
        seen.insert(m.eval_word(w));
    CHECK(seen.size() == 14);
}

TEST_CASE("congruence closure finds equalities plain rewriting misses") {
    // {a^2=1, r^2=r, rarara=rar} forces rarar=rara (right-multiply by a)
    auto m = presented("ra", {{"aa", "1"}, {"rr", "r"}, {"rarara", "rar"}});
    CHECK(m.size() == 10);
    CHECK(m.eval_word("rarar") == m.eval_word("rara"));
    CHECK(m.eval_word("rar") != m.eval_word("rara"));
}

TEST_CASE("field presentation") {
    auto m = presented("ra", {{"r", "1"}, {"aa", "1"}});
    CHECK(m.size() == 2);
    CHECK(m.eval_word("r") == m.identity);
    CHECK(m.eval_word("aa") == m.identity);
    CHECK(m.eval_word("a") != m.identity);
}

TEST_CASE("impossibility: rarara=rar with arar=r collapses to the discrete type") {
    // the relations alone leave the 4-element commutative monoid {1,r,a,ra};
    // the derived identities of the analysis already hold there
    auto bare = presented("ra", {{"aa", "1"}, {"rr", "r"}, {"rarara", "rar"}, {"arar", "r"}});
    CHECK(bare.eval_word("ra") == bare.eval_word("rar"));
    CHECK(bare.eval_word("ara") == bare.eval_word("arar"));
    CHECK(bare.eval_word("ara") == bare.eval_word("r"));
    // with extensivity (1 <= r) the order forces a = ra, which cascades to
    // r = 1: the 2-element discrete type
    auto m = presented("ra", {{"aa", "1"}, {"rr", "r"}, {"rarara", "rar"}, {"arar", "r"}},
                       {{"1", "r"}});
    CHECK(m.size() == 2);
    CHECK(is_isomorphic(m, cat("field")));
    CHECK(m.eval_word("r") == m.identity);
}

TEST_CASE("order axioms propagate through generator annotations") {
    // semiprime relations with 1 <= r and r <= a^2 must reproduce the
    // figure's chain 1 < r < a^2 with a isolated
    auto m = presented("ra", {{"rr", "r"}, {"aaa", "a"}, {"ra", "a"}, {"ar", "a"}},
                       {{"1", "r"}, {"r", "aa"}});
    CHECK(m.size() == 4);
    CHECK(is_isomorphic(m, cat("SEMIPRIME-max")));
}

TEST_CASE("presentation error cases") {
    // opposed order axioms are order-forced equalities: r = 1 turns
    // rara = rar into a = 1, so everything collapses
    auto collapsed = presented("ra", {{"rr", "r"}, {"aa", "1"}, {"rara", "rar"}},
                               {{"1", "r"}, {"r", "1"}});
    CHECK(collapsed.size() == 1);
    // r free: the monoid is infinite, the budget must trip
    CHECK_THROWS_AS(presented("ra", {{"aa", "1"}}), std::runtime_error);
    // malformed presentations
    CHECK_THROWS_AS(presented("rr", {}), std::invalid_argument);
    CHECK_THROWS_AS(presented("ra", {{"r", "rr"}}), std::invalid_argument);
    CHECK_THROWS_AS(presented("ra", {{"rx", "r"}}), std::invalid_argument);
}

TEST_CASE("catalog entries and counts") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == 9);
    const std::pair<const char*, size_t> expected[] = {
        {"KURA-14", 14},     {"LOCDUAL-i", 8}, {"LOCDUAL-ii", 10},
        {"EX1-7", 7},        {"SEMIPRIME-max", 4}, {"FULLSEMIPRIME", 3},
        {"ZD-b", 9},         {"ZD-c", 9},      {"ZDR-16", 16},
    };
    for (size_t i = 0; i < 9; ++i) {
        CHECK(entries[i].name == expected[i].first);
        CHECK(entries[i].size() == expected[i].second);
        CHECK_NOTHROW(entries[i].validate());
    }
    CHECK(catalog_lookup("NOPE") == nullptr);
    CHECK(catalog_lookup("field") != nullptr);
    CHECK(cat("field").size() == 2);
}

TEST_CASE("ZD-b and ZD-c relations") {
    const auto& b = cat("ZD-b");
    CHECK(b.eval_word("rar") == b.eval_word("rara"));
    CHECK(b.eval_word("r") == b.eval_word("aar"));
    CHECK(b.eval_word("r") == b.eval_word("raa"));

    const auto& c = cat("ZD-c");
    CHECK(c.eval_word("ar") == c.eval_word("ara"));
    CHECK(c.eval_word("aar") == c.eval_word("raar"));
    CHECK(c.eval_word("arar") == c.eval_word("ar"));
}

TEST_CASE("ZDR-16: (ra^2)^2 = a^2r and ra^2 is not idempotent") {
    const auto& z = cat("ZDR-16");
    size_t raa = z.eval_word("raa");
    CHECK(z.mul(raa, raa) == z.eval_word("aar"));
    CHECK(!z.is_idempotent(raa));
    CHECK(z.is_idempotent(z.eval_word("aar")));
}

TEST_CASE("odot sizes from the zero-dimensional proposition") {
    const auto &f = cat("field"), &b = cat("ZD-b"), &c = cat("ZD-c");
    CHECK(odot({f, b}).size() == 11);
    CHECK(odot({f, c}).size() == 12);
    CHECK(odot({b, c}).size() == 13);
    auto big = odot({f, b, c});
    CHECK(big.size() == 16);
    CHECK(is_isomorphic(big, cat("ZDR-16")));
    // stated relations of the pairwise products
    auto fb = odot({f, b});
    CHECK(fb.eval_word("rarar") == fb.eval_word("rara"));
    CHECK(fb.eval_word("aar") == fb.eval_word("r"));
    CHECK(fb.eval_word("raa") == fb.eval_word("r"));
    auto fc = odot({f, c});
    CHECK(fc.eval_word("ara") == fc.eval_word("arar"));
    CHECK(fc.eval_word("aar") == fc.eval_word("raar"));
    CHECK(fc.eval_word("araa") == fc.eval_word("ar"));
    auto bc = odot({b, c});
    CHECK(bc.eval_word("rar") == bc.eval_word("rara"));
    CHECK(bc.eval_word("aar") == bc.eval_word("raar"));
    CHECK(bc.eval_word("araa") == bc.eval_word("ar"));
}

TEST_CASE("odot bounds and idempotence of repetition") {
    for (const auto& m : catalog()) {
        auto cube = odot({m, m, m});
        CHECK(is_isomorphic(cube, m));
    }
    const auto &f = cat("field"), &b = cat("ZD-b"), &c = cat("ZD-c");
    for (const auto* x : {&f, &b, &c})
        for (const auto* y : {&f, &b, &c}) {
            auto p = odot({*x, *y});
            CHECK(p.size() >= std::max(x->size(), y->size()));
            CHECK(p.size() <= x->size() * y->size());
        }
}

TEST_CASE("generator-pinned isomorphism") {
    CHECK(is_isomorphic(cat("KURA-14"), cat("KURA-14")));
    CHECK(!is_isomorphic(cat("LOCDUAL-i"), cat("EX1-7")));
    CHECK(!is_isomorphic(cat("ZD-b"), cat("ZD-c"))); // same size, different tables
}

TEST_CASE("json round trip and dot output") {
    const auto& z = cat("ZDR-16");
    auto j = z.to_json();
    auto back = OrderedMonoid::from_json(j);
    CHECK(back.size() == z.size());
    CHECK(is_isomorphic(back, z));
    CHECK(back.to_json() == j);

    std::string dot = z.to_dot();
    CHECK(dot.find("\"aar\" [style=bold]") != std::string::npos);
    CHECK(dot.find("\"raa\" [style=bold]") == std::string::npos); // not idempotent
    CHECK(dot.find("\"raa\";") != std::string::npos);
}

TEST_CASE("hasse covers match the figure data") {
    CHECK(cat("LOCDUAL-i").hasse_covers().size() == 9);
    CHECK(cat("LOCDUAL-ii").hasse_covers().size() == 10);
    CHECK(cat("KURA-14").hasse_covers().size() == 16);
    CHECK(cat("ZDR-16").hasse_covers().size() == 19);
    CHECK(cat("field").hasse_covers().empty());
}
