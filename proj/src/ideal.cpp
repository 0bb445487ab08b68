#include "ramo/ideal.hpp"

#include <cassert>
#include <stdexcept>

#include "ramo/errors.hpp"

namespace ramo {

size_t Bitset::count() const {
    size_t c = 0;
    for (uint64_t w : w_) c += (size_t)__builtin_popcountll(w);
    return c;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

Bitset Bitset::operator&(const Bitset& o) const {
    Bitset out(n_);
    for (size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i] & o.w_[i];
    return out;
}

size_t Bitset::hash() const {
    size_t h = n_;
    for (uint64_t w : w_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
}

bool Ideal::contains(Elem e) const {
    if (!vector_mode_) return elems_.test((size_t)e);
    return basis_.contains(ring_->coords(e));
}

bool Ideal::subset_of(const Ideal& o) const {
    assert(ring_ == o.ring_);
    if (!vector_mode_) return elems_.subset_of(o.elems_);
    return o.basis_.contains_all(basis_);
}

bool Ideal::operator==(const Ideal& o) const {
    if (vector_mode_ != o.vector_mode_ || size_ != o.size_) return false;
    return vector_mode_ ? basis_ == o.basis_ : elems_ == o.elems_;
}

size_t Ideal::hash() const { return vector_mode_ ? basis_.hash() : elems_.hash(); }

bool Ideal::canonical_less(const Ideal& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    if (!vector_mode_) return elems_ < o.elems_;
    return basis_.rows() < o.basis_.rows();
}

static bool use_vector_mode(const FiniteRing* ring) {
    if (ring->size() <= Ideal::kDenseLimit) return false;
    if (!ring->prime_space())
        throw BudgetError("ring exceeds the dense ideal limit and is not a GF(p) space",
                          ring->size());
    return true;
}

Ideal Ideal::from_elements(const FiniteRing* ring, Bitset elems) {
    Ideal ideal;
    ideal.ring_ = ring;
    ideal.vector_mode_ = false;
    ideal.size_ = elems.count();
    ideal.elems_ = std::move(elems);
    return ideal;
}

Ideal Ideal::from_basis(const FiniteRing* ring, EchelonBasis basis) {
    Ideal ideal;
    ideal.ring_ = ring;
    ideal.vector_mode_ = true;
    ideal.size_ = 1;
    for (size_t i = 0; i < basis.rank(); ++i) ideal.size_ *= ring->prime();
    ideal.basis_ = std::move(basis);
    return ideal;
}

Ideal Ideal::unit(const FiniteRing* ring) {
    if (use_vector_mode(ring)) {
        EchelonBasis basis(ring->prime(), ring->dim());
        for (size_t i = 0; i < ring->dim(); ++i) {
            std::vector<uint32_t> v(ring->dim(), 0);
            v[i] = 1;
            basis.insert(std::move(v));
        }
        return from_basis(ring, std::move(basis));
    }
    Bitset all((size_t)ring->size());
    for (size_t e = 0; e < ring->size(); ++e) all.set(e);
    return from_elements(ring, std::move(all));
}

namespace {

// extend the subgroup S (as a bitset of element indices) by a generator
void subgroup_add(const FiniteRing* ring, Bitset& s, Elem g) {
    if (s.test((size_t)g)) return;
    Bitset result = s;
    Elem off = g;
    while (off != 0) {
        s.for_each([&](size_t e) { result.set((size_t)ring->add((Elem)e, off)); });
        off = ring->add(off, g);
    }
    s = result;
}

Bitset additive_span(const FiniteRing* ring, const std::vector<Elem>& gens) {
    Bitset s((size_t)ring->size());
    s.set(0);
    for (Elem g : gens) subgroup_add(ring, s, g);
    return s;
}

} // namespace

Ideal Ideal::zero(const FiniteRing* ring) {
    if (use_vector_mode(ring))
        return from_basis(ring, EchelonBasis(ring->prime(), ring->dim()));
    Bitset z((size_t)ring->size());
    z.set(0);
    return from_elements(ring, std::move(z));
}

const std::vector<Elem>& Ideal::additive_generators() const {
    if (!gens_.empty() || size_ == 1) return gens_;
    if (vector_mode_) {
        for (const auto& row : basis_.rows()) gens_.push_back(ring_->from_coords(row));
        return gens_;
    }
    Bitset span((size_t)ring_->size());
    span.set(0);
    std::vector<Elem> gens;
    elems_.for_each([&](size_t e) {
        if (span.test(e)) return;
        gens.push_back((Elem)e);
        subgroup_add(ring_, span, (Elem)e);
    });
    gens_ = std::move(gens);
    return gens_;
}

Ideal ideal_generated(const FiniteRing* ring, const std::vector<Elem>& elements) {
    if (use_vector_mode(ring)) {
        EchelonBasis basis(ring->prime(), ring->dim());
        std::vector<uint32_t> row;
        for (Elem g : elements) {
            auto gc = ring->coords(g);
            for (size_t i = 0; i < ring->dim(); ++i) {
                auto ei = ring->coords(ring->basis_elem(i));
                ring->mul_coords(ei, gc, row);
                basis.insert(row);
            }
            basis.insert(gc); // g itself (= 1 * g, but cheap to add directly)
        }
        return Ideal::from_basis(ring, std::move(basis));
    }
    std::vector<Elem> products;
    for (Elem g : elements) {
        for (Elem r = 0; r < ring->size(); ++r) products.push_back(ring->mul(r, g));
        products.push_back(g);
    }
    return Ideal::from_elements(ring, additive_span(ring, products));
}

Ideal sum_ideals(const Ideal& a, const Ideal& b) {
    assert(a.ring() == b.ring());
    if (a.vector_mode()) {
        EchelonBasis basis = a.basis();
        for (const auto& row : b.basis().rows()) basis.insert(row);
        return Ideal::from_basis(a.ring(), std::move(basis));
    }
    if (b.size() > a.size()) return sum_ideals(b, a);
    Bitset s = a.elements();
    for (Elem g : b.additive_generators()) subgroup_add(a.ring(), s, g);
    return Ideal::from_elements(a.ring(), std::move(s));
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b) {
    assert(a.ring() == b.ring());
    if (a.vector_mode()) return Ideal::from_basis(a.ring(), gfp_intersect(a.basis(), b.basis()));
    return Ideal::from_elements(a.ring(), a.elements() & b.elements());
}

Ideal multiply_ideals(const Ideal& a, const Ideal& b) {
    assert(a.ring() == b.ring());
    const FiniteRing* ring = a.ring();
    if (a.vector_mode()) {
        EchelonBasis basis(ring->prime(), ring->dim());
        std::vector<uint32_t> row;
        for (const auto& u : a.basis().rows())
            for (const auto& v : b.basis().rows()) {
                ring->mul_coords(u, v, row);
                basis.insert(row);
            }
        return Ideal::from_basis(ring, std::move(basis));
    }
    std::vector<Elem> products;
    for (Elem u : a.additive_generators())
        for (Elem v : b.additive_generators()) products.push_back(ring->mul(u, v));
    return ideal_generated(ring, products);
}

Ideal annihilator_ideal(const Ideal& ideal) {
    const FiniteRing* ring = ideal.ring();
    if (ideal.vector_mode()) {
        size_t k = ring->dim();
        std::vector<std::vector<uint32_t>> constraints;
        std::vector<uint32_t> row;
        std::vector<std::vector<uint32_t>> eg(k); // e_i * g for current g
        for (const auto& g : ideal.basis().rows()) {
            for (size_t i = 0; i < k; ++i) {
                auto ei = ring->coords(ring->basis_elem(i));
                ring->mul_coords(ei, g, eg[i]);
            }
            // constraint per output coordinate c: sum_i v_i (e_i g)_c = 0
            for (size_t c = 0; c < k; ++c) {
                row.assign(k, 0);
                bool nonzero = false;
                for (size_t i = 0; i < k; ++i) {
                    row[i] = eg[i][c];
                    nonzero |= row[i] != 0;
                }
                if (nonzero) constraints.push_back(row);
            }
        }
        return Ideal::from_basis(ring, gfp_nullspace(constraints, k, ring->prime()));
    }
    const auto& gens = ideal.additive_generators();
    Bitset ann((size_t)ring->size());
    for (Elem r = 0; r < ring->size(); ++r) {
        bool kills = true;
        for (Elem g : gens)
            if (ring->mul(g, r) != 0) {
                kills = false;
                break;
            }
        if (kills) ann.set((size_t)r);
    }
    return Ideal::from_elements(ring, std::move(ann));
}

} // namespace ramo
