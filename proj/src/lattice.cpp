#include "ramo/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ramo/errors.hpp"

namespace ramo {

namespace {

// oracle form of primality: I proper and ab in I implies a in I or b in I;
// used as a cross-check on small rings
bool prime_elementwise(const FiniteRing& ring, const Ideal& ideal) {
    if (ideal.size() == ring.size()) return false;
    for (Elem a = 0; a < ring.size(); ++a) {
        if (ideal.contains(a)) continue;
        for (Elem b = 0; b < ring.size(); ++b) {
            if (ideal.contains(b)) continue;
            if (ideal.contains(ring.mul(a, b))) return false;
        }
    }
    return true;
}

} // namespace

IdealLattice IdealLattice::enumerate(std::shared_ptr<const FiniteRing> ring,
                                     uint64_t max_ideals) {
    IdealLattice lat;
    lat.ring_ = ring;
    const FiniteRing* r = ring.get();
    if (r->size() <= 2048) r->force_mult_table();

    std::vector<Ideal> found;
    std::unordered_map<size_t, std::vector<size_t>> seen;
    auto try_add = [&](Ideal ideal) -> bool {
        size_t h = ideal.hash();
        auto& bucket = seen[h];
        for (size_t idx : bucket)
            if (found[idx] == ideal) return false;
        if (found.size() >= max_ideals)
            throw BudgetError("ideal budget exceeded: >= " + std::to_string(max_ideals) +
                                  " ideals found",
                              max_ideals);
        bucket.push_back(found.size());
        found.push_back(std::move(ideal));
        return true;
    };

    try_add(Ideal::zero(r));
    // principal ideals
    for (Elem g = 1; g < r->size(); ++g) try_add(ideal_generated(r, {g}));
    // close under pairwise sums
    for (size_t n = 1; n < found.size(); ++n)
        for (size_t m = 0; m < n; ++m) {
            Ideal s = sum_ideals(found[n], found[m]);
            if (s.size() != found[n].size() || !(s == found[n])) try_add(std::move(s));
        }

    std::sort(found.begin(), found.end(),
              [](const Ideal& a, const Ideal& b) { return a.canonical_less(b); });
    lat.ideals_ = std::move(found);
    for (size_t i = 0; i < lat.ideals_.size(); ++i)
        lat.by_hash_[lat.ideals_[i].hash()].push_back(i);

    size_t n = lat.ideals_.size();
    assert(lat.ideals_[0].is_zero());
    assert(lat.ideals_[n - 1].is_unit());

    if (n <= 4096) {
        lat.contain_.assign(n, Bitset(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (lat.ideals_[i].subset_of(lat.ideals_[j])) lat.contain_[i].set(j);
    }

    // spectrum: in a finite commutative ring primes are exactly the maximal
    // ideals. Scan proper ideals by decreasing size; an ideal is maximal iff
    // it is not inside an already-confirmed maximal ideal.
    std::vector<size_t> order(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return lat.ideals_[a].size() > lat.ideals_[b].size();
    });
    for (size_t i : order) {
        bool covered = false;
        for (size_t m : lat.spectrum_)
            if (lat.ideals_[i].subset_of(lat.ideals_[m])) {
                covered = true;
                break;
            }
        if (!covered) lat.spectrum_.push_back(i);
    }
    std::sort(lat.spectrum_.begin(), lat.spectrum_.end());

    if (r->size() <= 1024) {
        for (size_t i = 0; i < n; ++i) {
            bool is_prime =
                std::find(lat.spectrum_.begin(), lat.spectrum_.end(), i) != lat.spectrum_.end();
            if (prime_elementwise(*r, lat.ideals_[i]) != is_prime)
                throw std::logic_error("prime spectrum disagrees with elementwise oracle");
        }
    }

    lat.radical_cache_.assign(n, kNoCache);
    lat.ann_cache_.assign(n, kNoCache);
    lat.dual_cache_.assign(n, kNoCache);
    lat.nilradical_ = lat.radical(0);
    return lat;
}

size_t IdealLattice::index_of(const Ideal& ideal) const {
    auto it = by_hash_.find(ideal.hash());
    if (it != by_hash_.end())
        for (size_t idx : it->second)
            if (ideals_[idx] == ideal) return idx;
    throw std::logic_error("ideal not present in lattice");
}

bool IdealLattice::contains(size_t i, size_t j) const {
    if (!contain_.empty()) return contain_[i].test(j);
    return ideals_[i].subset_of(ideals_[j]);
}

size_t IdealLattice::sum(size_t i, size_t j) const {
    return index_of(sum_ideals(ideals_[i], ideals_[j]));
}

size_t IdealLattice::intersect(size_t i, size_t j) const {
    return index_of(intersect_ideals(ideals_[i], ideals_[j]));
}

size_t IdealLattice::multiply(size_t i, size_t j) const {
    return index_of(multiply_ideals(ideals_[i], ideals_[j]));
}

size_t IdealLattice::radical(size_t i) const {
    if (radical_cache_[i] != kNoCache) return radical_cache_[i];
    size_t result;
    if (i == unit_index()) {
        result = unit_index(); // r(R) = R by convention
    } else {
        bool first = true;
        Ideal acc;
        for (size_t p : spectrum_) {
            if (!contains(i, p)) continue;
            acc = first ? ideals_[p] : intersect_ideals(acc, ideals_[p]);
            first = false;
        }
        // every proper ideal lies under some maximal (= prime) ideal
        assert(!first);
        result = index_of(acc);
    }
    radical_cache_[i] = result;
    return result;
}

size_t IdealLattice::annihilator(size_t i) const {
    if (ann_cache_[i] != kNoCache) return ann_cache_[i];
    size_t result = index_of(annihilator_ideal(ideals_[i]));
    ann_cache_[i] = result;
    return result;
}

size_t IdealLattice::dualradical(size_t i) const {
    if (dual_cache_[i] != kNoCache) return dual_cache_[i];
    bool first = true;
    Ideal acc;
    for (size_t p : spectrum_) {
        if (contains(i, p)) continue;
        acc = first ? ideals_[p] : intersect_ideals(acc, ideals_[p]);
        first = false;
    }
    size_t result = first ? unit_index() : index_of(acc); // empty intersection is R
    dual_cache_[i] = result;
    return result;
}

std::vector<size_t> IdealLattice::hull(size_t i) const {
    std::vector<size_t> out;
    for (size_t p : spectrum_)
        if (contains(i, p)) out.push_back(p);
    return out;
}

std::vector<size_t> IdealLattice::hull_complement(size_t i) const {
    std::vector<size_t> out;
    for (size_t p : spectrum_)
        if (!contains(i, p)) out.push_back(p);
    return out;
}

bool IdealLattice::is_dual_ring() const {
    for (size_t i = 0; i < size(); ++i)
        if (annihilator(annihilator(i)) != i) return false;
    return true;
}

bool IdealLattice::birkenmeier_condition() const {
    // annihilator of an intersection is the sum of the annihilators
    for (size_t i = 0; i < size(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (annihilator(intersect(i, j)) != sum(annihilator(i), annihilator(j)))
                return false;
    return true;
}

} // namespace ramo
