#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ramo/lattice.hpp"
#include "ramo/ring_description.hpp"

using namespace ramo;

namespace {

std::shared_ptr<const FiniteRing> ring_from(const std::string& doc) {
    return build_ring(parse_ring_description(doc));
}

// Independent oracle: closure of a set of elements under addition and
// multiplication by arbitrary ring elements, by plain iteration.
std::set<Elem> closure_oracle(const FiniteRing& ring, std::set<Elem> s) {
    s.insert(0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<Elem> next = s;
        for (Elem a : s) {
            for (Elem b : s) next.insert(ring.add(a, b));
            for (Elem r = 0; r < ring.size(); ++r) next.insert(ring.mul(r, a));
        }
        if (next != s) {
            s = std::move(next);
            changed = true;
        }
    }
    return s;
}

std::set<Elem> elements_of(const Ideal& ideal) {
    std::set<Elem> out;
    for (Elem e = 0; e < ideal.ring()->size(); ++e)
        if (ideal.contains(e)) out.insert(e);
    return out;
}

} // namespace

TEST_CASE("ideal_generated matches the closure oracle") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    CHECK(elements_of(ideal_generated(z12.get(), {4})) == std::set<Elem>{0, 4, 8});
    CHECK(elements_of(ideal_generated(z12.get(), {4})) == closure_oracle(*z12, {4}));
    CHECK(elements_of(ideal_generated(z12.get(), {})) == std::set<Elem>{0});
    CHECK(ideal_generated(z12.get(), {1}).is_unit());

    auto f8 = ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})");
    for (Elem g = 0; g < f8->size(); ++g)
        CHECK(elements_of(ideal_generated(f8.get(), {g})) == closure_oracle(*f8, {g}));
}

TEST_CASE("Z/12 has one ideal per divisor") {
    auto lat = IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":12})"));
    CHECK(lat.size() == 6); // divisors of 12
    std::set<uint64_t> sizes;
    for (size_t i = 0; i < lat.size(); ++i) sizes.insert(lat.ideal(i).size());
    CHECK(sizes == std::set<uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("small lattices") {
    CHECK(IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":2})")).size() == 2);
    auto fx2 = IdealLattice::enumerate(ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}})"));
    CHECK(fx2.size() == 3); // {0}, (x), R
    CHECK(fx2.ideal(1).size() == 2);
}

TEST_CASE("sums, intersections, products in Z/12") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto lat = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return lat.index_of(ideal_generated(z12.get(), {g})); };

    CHECK(lat.sum(idx(4), idx(6)) == idx(2));
    CHECK(lat.multiply(idx(2), idx(3)) == idx(6));
    CHECK(lat.intersect(idx(2), idx(3)) == idx(6));
    for (size_t i = 0; i < lat.size(); ++i) {
        CHECK(lat.sum(i, lat.zero_index()) == i);
        CHECK(lat.intersect(i, lat.unit_index()) == i);
    }
}

TEST_CASE("prime spectrum") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto lat = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return lat.index_of(ideal_generated(z12.get(), {g})); };
    CHECK(lat.spectrum() == std::vector<size_t>{idx(3), idx(2)}); // sorted by index, (3) is smaller

    auto gf5 = IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":5})"));
    CHECK(gf5.spectrum() == std::vector<size_t>{gf5.zero_index()});

    auto fx3 = IdealLattice::enumerate(ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})"));
    REQUIRE(fx3.spectrum().size() == 1);
    CHECK(fx3.ideal(fx3.spectrum()[0]).size() == 4); // (x)
}

TEST_CASE("radical") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto lat = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return lat.index_of(ideal_generated(z12.get(), {g})); };
    CHECK(lat.radical(lat.unit_index()) == lat.unit_index());
    CHECK(lat.radical(idx(4)) == idx(2));
    CHECK(lat.nilradical_index() == idx(6));

    auto fx3 = IdealLattice::enumerate(ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})"));
    CHECK(fx3.radical(fx3.zero_index()) == fx3.spectrum()[0]);
}

TEST_CASE("semiprime ideals") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto lat = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return lat.index_of(ideal_generated(z12.get(), {g})); };
    CHECK(lat.is_semiprime_ideal(idx(6)));  // (6) = (2) cap (3)
    CHECK(!lat.is_semiprime_ideal(idx(4))); // 2^2 in (4), 2 not
    CHECK(lat.is_semiprime_ideal(lat.unit_index()));
    CHECK(!lat.is_semiprime_ring());

    CHECK(IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":6})")).is_semiprime_ring());
}

TEST_CASE("annihilator") {
    auto fx2 = ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}})");
    auto lat = IdealLattice::enumerate(fx2);
    CHECK(lat.annihilator(lat.zero_index()) == lat.unit_index());
    // a((x)) = (x): the fixed point from the introduction of the maps
    size_t x_ideal = 1;
    CHECK(lat.annihilator(x_ideal) == x_ideal);

    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto zl = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return zl.index_of(ideal_generated(z12.get(), {g})); };
    CHECK(zl.annihilator(idx(2)) == idx(6));
}

TEST_CASE("hull and dualradical") {
    auto z12 = ring_from(R"({"type":"cyclic","n":12})");
    auto lat = IdealLattice::enumerate(z12);
    auto idx = [&](Elem g) { return lat.index_of(ideal_generated(z12.get(), {g})); };
    CHECK(lat.hull(idx(4)) == std::vector<size_t>{idx(2)});
    CHECK(lat.hull_complement(idx(4)) == std::vector<size_t>{idx(3)});
    CHECK(lat.hull(lat.zero_index()).size() == 2);
    CHECK(lat.hull_complement(lat.zero_index()).empty());
    CHECK(lat.hull(lat.unit_index()).empty());

    CHECK(lat.dualradical(idx(4)) == idx(3));
    CHECK(lat.dualradical(lat.zero_index()) == lat.unit_index());

    // d = a on a semiprime ring
    auto z6 = ring_from(R"({"type":"cyclic","n":6})");
    auto l6 = IdealLattice::enumerate(z6);
    for (size_t i = 0; i < l6.size(); ++i) CHECK(l6.dualradical(i) == l6.annihilator(i));
}

TEST_CASE("dual rings") {
    CHECK(IdealLattice::enumerate(ring_from(
              R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}})"))
              .is_dual_ring());
    CHECK(IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":5})")).is_dual_ring());
    CHECK(!IdealLattice::enumerate(ring_from(
               R"({"type":"poly_quotient","p":2,"vars":["x","y"],
                   "caps":{"x":"x^2 = 0","y":"y^2 = 0"},"extra_relations":["x*y"]})"))
               .is_dual_ring());
}

TEST_CASE("birkenmeier condition") {
    CHECK(IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":2})"))
              .birkenmeier_condition());
    CHECK(IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":6})"))
              .birkenmeier_condition());
    // Z/12 by independent exhaustive check over all 6x6 pairs
    IdealLattice z12 = IdealLattice::enumerate(ring_from(R"({"type":"cyclic","n":12})"));
    bool expected = true;
    for (size_t i = 0; i < z12.size() && expected; ++i)
        for (size_t j = 0; j < z12.size(); ++j)
            if (z12.annihilator(z12.intersect(i, j)) !=
                z12.sum(z12.annihilator(i), z12.annihilator(j))) {
                expected = false;
                break;
            }
    CHECK(z12.birkenmeier_condition() == expected);
}

TEST_CASE("vector-mode lattice: F2[x]/(x^13) is a 14-chain") {
    auto ring = ring_from(
        R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^13 = 0"}})");
    REQUIRE(ring->size() == 8192); // above the dense limit
    auto lat = IdealLattice::enumerate(ring);
    CHECK(lat.size() == 14); // (x^k) for k = 0..13
    // linearly ordered
    for (size_t i = 0; i + 1 < lat.size(); ++i) CHECK(lat.contains(i, i + 1));
    CHECK(lat.spectrum().size() == 1);
    CHECK(lat.is_dual_ring());
    // a((x^k)) = (x^(13-k))
    for (size_t i = 0; i < lat.size(); ++i) CHECK(lat.annihilator(i) == lat.size() - 1 - i);
}

TEST_CASE("product ring lattice is the product of lattices") {
    auto prod = ring_from(
        R"({"type":"product","factors":[{"type":"cyclic","n":4},{"type":"cyclic","n":9}]})");
    auto lat = IdealLattice::enumerate(prod);
    CHECK(lat.size() == 9); // 3 ideals of Z/4 times 3 of Z/9
    CHECK(lat.spectrum().size() == 2);
}

TEST_CASE("map properties hold exhaustively on a mixed bag of rings") {
    for (const char* doc :
         {R"({"type":"cyclic","n":12})", R"({"type":"cyclic","n":8})",
          R"({"type":"poly_quotient","p":3,"vars":["x"],"caps":{"x":"x^3 = 0"}})",
          R"({"type":"product","factors":[{"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^3 = 0"}},{"type":"cyclic","n":2}]})",
          R"({"type":"trivial_extension","base":{"type":"cyclic","n":4}})"}) {
        auto lat = IdealLattice::enumerate(ring_from(doc));
        CAPTURE(doc);
        for (size_t i = 0; i < lat.size(); ++i) {
            CHECK(lat.contains(i, lat.radical(i)));                  // r extensive
            CHECK(lat.radical(lat.radical(i)) == lat.radical(i));    // r idempotent
            CHECK(lat.contains(i, lat.annihilator(lat.annihilator(i)))); // aa extensive
            CHECK(lat.annihilator(lat.annihilator(lat.annihilator(i))) ==
                  lat.annihilator(i)); // aaa = a
            for (size_t j = 0; j < lat.size(); ++j) {
                if (!lat.contains(i, j)) continue;
                CHECK(lat.contains(lat.radical(i), lat.radical(j)));         // r monotone
                CHECK(lat.contains(lat.annihilator(j), lat.annihilator(i))); // a antitone
            }
            // a(I) is the largest ideal J with I J = 0
            size_t ann = lat.annihilator(i);
            for (size_t j = 0; j < lat.size(); ++j) {
                bool kills = lat.multiply(i, j) == lat.zero_index();
                CHECK(kills == lat.contains(j, ann));
            }
            // r(I) is the smallest semiprime ideal containing I
            size_t rad = lat.radical(i);
            CHECK(lat.is_semiprime_ideal(rad));
            for (size_t j = 0; j < lat.size(); ++j)
                if (lat.is_semiprime_ideal(j) && lat.contains(i, j))
                    CHECK(lat.contains(rad, j));
        }
    }
}
