#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ramo/ideal.hpp"

namespace ramo {

// Every ideal of a finite commutative ring, deterministically indexed by
// sorting canonical forms (size first). Index 0 is {0}; the last index is R.
// Immutable after enumeration; the map caches are filled lazily and are the
// only mutable state.
class IdealLattice {
public:
    static constexpr uint64_t kDefaultMaxIdeals = 1000000;

    static IdealLattice enumerate(std::shared_ptr<const FiniteRing> ring,
                                  uint64_t max_ideals = kDefaultMaxIdeals);

    const FiniteRing& ring() const { return *ring_; }
    std::shared_ptr<const FiniteRing> ring_ptr() const { return ring_; }
    size_t size() const { return ideals_.size(); }
    const Ideal& ideal(size_t i) const { return ideals_[i]; }
    size_t index_of(const Ideal& ideal) const;

    size_t zero_index() const { return 0; }
    size_t unit_index() const { return ideals_.size() - 1; }
    size_t nilradical_index() const { return nilradical_; }

    const std::vector<size_t>& spectrum() const { return spectrum_; }
    bool is_local() const { return spectrum_.size() == 1; }

    // ideal(i) contained in ideal(j)
    bool contains(size_t i, size_t j) const;

    size_t sum(size_t i, size_t j) const;
    size_t intersect(size_t i, size_t j) const;
    size_t multiply(size_t i, size_t j) const;

    size_t radical(size_t i) const;
    size_t annihilator(size_t i) const;
    size_t dualradical(size_t i) const;

    std::vector<size_t> hull(size_t i) const;            // primes containing i
    std::vector<size_t> hull_complement(size_t i) const; // primes not containing i

    bool is_semiprime_ideal(size_t i) const { return radical(i) == i; }
    bool is_semiprime_ring() const { return radical(0) == 0; }

    // a(a(I)) = I for every ideal
    bool is_dual_ring() const;
    // r(I intersect J) = r(I) + r(J) for every pair
    bool birkenmeier_condition() const;

private:
    std::shared_ptr<const FiniteRing> ring_;
    std::vector<Ideal> ideals_;
    std::unordered_map<size_t, std::vector<size_t>> by_hash_;
    std::vector<size_t> spectrum_;
    size_t nilradical_ = 0;

    // eager containment matrix (rows: subset-of bitsets) for small lattices
    std::vector<Bitset> contain_;

    static constexpr size_t kNoCache = (size_t)-1;
    mutable std::vector<size_t> radical_cache_, ann_cache_, dual_cache_;
};

} // namespace ramo
