#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramo/ring_description.hpp"

namespace ramo {

// Element of a FiniteRing, as a mixed-radix index over the additive
// coordinate moduli. 0 is always the zero element.
using Elem = uint64_t;

struct ValidationReport {
    struct Axiom {
        std::string name;
        bool pass = true;
        std::string witness; // empty when pass
    };
    std::vector<Axiom> axioms;
    bool exhaustive = false;
    uint64_t triples_checked = 0;

    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
};

// A realized finite commutative ring. Additively it is a product of cyclic
// groups Z/m_1 x ... x Z/m_k; multiplication is given by structure constants
// on the additive basis. Immutable after construction.
class FiniteRing {
public:
    uint64_t size() const { return size_; }
    size_t dim() const { return moduli_.size(); }
    const std::vector<uint32_t>& coord_moduli() const { return moduli_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem scale(Elem a, uint64_t c) const;

    std::vector<uint32_t> coords(Elem a) const;
    Elem from_coords(const std::vector<uint32_t>& c) const;

    // e_i * e_j as a coordinate vector
    const std::vector<uint32_t>& basis_product(size_t i, size_t j) const {
        return basis_product_[i * dim() + j];
    }
    Elem basis_elem(size_t i) const { return radix_[i]; }

    // coordinate-vector arithmetic, used by the GF(p) ideal machinery
    void mul_coords(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                    std::vector<uint32_t>& out) const;

    // True when every coordinate modulus equals one prime p, i.e. the ring is
    // a GF(p) vector space and ideals are subspaces.
    bool prime_space() const { return prime_space_; }
    uint32_t prime() const { return prime_; }

    const std::string& display_name() const { return name_; }
    std::string elem_to_string(Elem a) const;

    ValidationReport validate_axioms() const;

    // test hook: materialize the full multiplication table (size^2 entries)
    // so it can be inspected or deliberately corrupted by fixtures
    void force_mult_table() const;
    std::vector<uint32_t>* mutable_mult_table() const;

    static constexpr uint64_t kDefaultBudget = 1ull << 20;

private:
    friend std::shared_ptr<const FiniteRing> build_ring(const RingDescription&, uint64_t);

    std::vector<uint32_t> moduli_;
    std::vector<uint64_t> radix_; // place value of each coordinate
    uint64_t size_ = 1;
    Elem one_ = 0;
    std::vector<std::vector<uint32_t>> basis_product_; // dim*dim entries
    bool prime_space_ = false;
    uint32_t prime_ = 0;
    std::string name_;

    // printing structure
    RingDescription::Kind kind_ = RingDescription::Kind::Cyclic;
    std::vector<std::shared_ptr<const FiniteRing>> children_; // product / trivial ext
    std::vector<std::string> coord_labels_;                   // poly quotient monomials

    mutable std::vector<uint32_t> mult_table_; // lazily built, size<=2048 only
};

// Realizes a description. Throws BudgetError when the element count would
// exceed `budget` (reporting the required size), ParseError on an invalid
// relation set.
std::shared_ptr<const FiniteRing> build_ring(const RingDescription& desc,
                                             uint64_t budget = FiniteRing::kDefaultBudget);

} // namespace ramo
