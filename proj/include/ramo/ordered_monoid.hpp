#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ramo {

// Abstract finite monoid with a compatible partial order and a designated,
// ordered list of generators (monotone "r-like" generator first). Labels are
// canonical words in the generator symbols; the identity is labeled "1".
struct OrderedMonoid {
    std::string name;
    std::vector<std::string> labels;
    size_t identity = 0;
    std::vector<size_t> generators; // indices into labels, r-like first
    std::string symbols;            // one char per generator, e.g. "ra", "kc"
    std::vector<size_t> table;      // table[i*n+j] = index of i*j
    std::vector<uint8_t> order;     // order[i*n+j] = 1 iff i <= j

    size_t size() const { return labels.size(); }
    size_t mul(size_t i, size_t j) const { return table[i * size() + j]; }
    bool leq(size_t i, size_t j) const { return order[i * size() + j] != 0; }

    // index of the element the word evaluates to; word "1" or "" is the
    // identity. Throws std::invalid_argument on a symbol outside `symbols`.
    size_t eval_word(const std::string& word) const;

    bool is_idempotent(size_t i) const { return mul(i, i) == i; }

    // throws std::logic_error when the monoid axioms, the partial-order
    // axioms, or the generation requirement fail
    void validate() const;

    // covers (i, j) with i < j and nothing strictly between, sorted
    std::vector<std::pair<size_t, size_t>> hasse_covers() const;

    nlohmann::json to_json() const;
    static OrderedMonoid from_json(const nlohmann::json& j);
    std::string to_dot() const;
};

// submonoid of the direct product generated by the diagonal generator
// tuples; order and equality componentwise. All inputs must have the same
// number of generators. Labels use the first input's generator symbols.
OrderedMonoid odot(const std::vector<OrderedMonoid>& ms);

// generator-pinned isomorphism: identity -> identity, k-th generator ->
// k-th generator, multiplication and order preserved both ways
bool is_isomorphic(const OrderedMonoid& a, const OrderedMonoid& b);

} // namespace ramo
