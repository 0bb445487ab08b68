#pragma once

#include <cstdint>
#include <vector>

#include "ramo/finite_ring.hpp"
#include "ramo/gfp.hpp"

namespace ramo {

// Plain bit set sized at construction. Element sets of dense-mode ideals.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    size_t count() const;

    bool subset_of(const Bitset& o) const;
    Bitset operator&(const Bitset& o) const;

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Bitset& o) const { return w_ < o.w_; }
    size_t hash() const;

    const std::vector<uint64_t>& words() const { return w_; }

    template <typename F> void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                unsigned b = (unsigned)__builtin_ctzll(w);
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// An ideal of a finite commutative ring in canonical form. Rings of at most
// kDenseLimit elements use a sorted element set (a bitset over element
// indices); larger rings must be GF(p) vector spaces and use a reduced
// row-echelon coefficient basis.
class Ideal {
public:
    static constexpr uint64_t kDenseLimit = 4096;

    Ideal() = default;

    const FiniteRing* ring() const { return ring_; }
    bool vector_mode() const { return vector_mode_; }
    uint64_t size() const { return size_; }
    const Bitset& elements() const { return elems_; }
    const EchelonBasis& basis() const { return basis_; }

    bool contains(Elem e) const;
    bool subset_of(const Ideal& o) const;
    bool operator==(const Ideal& o) const;
    size_t hash() const;
    // deterministic total order on canonical forms: size first, then bits/rows
    bool canonical_less(const Ideal& o) const;

    // small additive generating set, computed greedily and cached
    const std::vector<Elem>& additive_generators() const;

    bool is_zero() const { return size_ == 1; }
    bool is_unit() const { return size_ == ring_->size(); }

    static Ideal zero(const FiniteRing* ring);
    static Ideal unit(const FiniteRing* ring);
    static Ideal from_elements(const FiniteRing* ring, Bitset elems);
    static Ideal from_basis(const FiniteRing* ring, EchelonBasis basis);

private:
    const FiniteRing* ring_ = nullptr;
    bool vector_mode_ = false;
    Bitset elems_;
    EchelonBasis basis_;
    uint64_t size_ = 0;
    mutable std::vector<Elem> gens_;
};

// smallest ideal containing the given elements
Ideal ideal_generated(const FiniteRing* ring, const std::vector<Elem>& elements);

Ideal sum_ideals(const Ideal& a, const Ideal& b);
Ideal intersect_ideals(const Ideal& a, const Ideal& b);
Ideal multiply_ideals(const Ideal& a, const Ideal& b);

// {r in R : I r = {0}}
Ideal annihilator_ideal(const Ideal& ideal);

} // namespace ramo
