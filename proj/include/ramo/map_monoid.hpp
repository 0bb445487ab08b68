#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramo/lattice.hpp"
#include "ramo/ordered_monoid.hpp"

namespace ramo {

struct KReport {
    std::vector<size_t> per_ideal; // orbit size per ideal index
    size_t ring_k = 0;             // max orbit size
    size_t K = 0;                  // monoid cardinality
};

struct MapFlags {
    bool order_preserving = false;
    bool order_reversing = false;
    bool idempotent = false;
    bool constant = false;
    bool parity_even = false; // some word for this map has an even a/d count
    bool parity_odd = false;
};

// The monoid of ideal-lattice self-maps generated by a chosen subset of
// {r, a, d}, ordered pointwise by containment. Elements are identified by
// their image vectors; labels are the shortest words (lexicographic
// tie-break, a < d < r), with "1" for the identity. Immutable once built.
class MapMonoid {
public:
    static constexpr uint64_t kDefaultBudget = 10000;

    // generators: a subset of "adr", e.g. "ra" or "rd"; order irrelevant
    static MapMonoid generate(const IdealLattice& lattice, const std::string& generators,
                              uint64_t budget = kDefaultBudget);

    const IdealLattice& lattice() const { return *lat_; }
    const std::string& generator_symbols() const { return gens_; }
    size_t size() const { return images_.size(); }
    size_t identity_index() const { return 0; }
    const std::vector<size_t>& image(size_t i) const { return images_[i]; }
    const std::string& label(size_t i) const { return labels_[i]; }
    size_t generator(char c) const; // throws std::invalid_argument if absent

    size_t compose(size_t i, size_t j) const { return table_[i * size() + j]; }
    bool leq(size_t i, size_t j) const { return order_[i * size() + j] != 0; }

    // image vector of a word over the generator symbols ("1" = identity)
    std::vector<size_t> apply_word(const std::string& word) const;
    bool relation_check(const std::string& left, const std::string& right) const;

    // sorted ideal indices reachable from the ideal
    std::vector<size_t> orbit(size_t ideal_index) const;
    KReport k_numbers() const;
    std::vector<MapFlags> classify_properties() const;
    std::vector<std::pair<size_t, size_t>> hasse() const; // covers (lower, upper)

    OrderedMonoid export_abstract() const;
    std::string to_dot() const;

private:
    const IdealLattice* lat_ = nullptr;
    std::string gens_; // present symbols, ascending
    std::vector<std::vector<size_t>> images_;
    std::vector<std::string> labels_;
    std::vector<size_t> gen_index_;                  // parallel to gens_
    std::vector<size_t> table_;                      // composition, row-major
    std::vector<uint8_t> order_;                     // pointwise order
    std::vector<std::pair<bool, bool>> parity_;      // (even seen, odd seen)
};

} // namespace ramo
