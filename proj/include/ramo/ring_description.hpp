#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramo/polynomial.hpp"

namespace ramo {

// Constructor AST for a finite commutative ring. Finite tree; validated on
// construction from a description document.
struct RingDescription {
    enum class Kind { Cyclic, PolyQuotient, Product, TrivialExtension };

    struct CapRule {
        uint32_t degree = 0; // x_i^degree rewrites to `rhs`
        Polynomial rhs;      // every term has total degree < `degree`
    };

    Kind kind = Kind::Cyclic;

    // cyclic
    uint64_t n = 0;

    // poly_quotient
    uint64_t p = 0;
    std::vector<std::string> vars;
    std::vector<CapRule> caps; // one per variable, same order as `vars`
    std::vector<Polynomial> extra_relations;

    // product
    std::vector<RingDescription> factors;

    // trivial_extension
    std::unique_ptr<RingDescription> base;

    RingDescription() = default;
    RingDescription(const RingDescription& o) { *this = o; }
    RingDescription& operator=(const RingDescription& o);
    RingDescription(RingDescription&&) = default;
    RingDescription& operator=(RingDescription&&) = default;

    static RingDescription cyclic(uint64_t n);
    static RingDescription product(std::vector<RingDescription> factors);
    static RingDescription trivial_extension(RingDescription base);

    std::string display() const;
};

// Parses a JSON-shaped ring description document. Throws ParseError on
// syntax errors, unknown variables, non-prime p, or a missing/duplicate cap.
RingDescription parse_ring_description(const std::string& text);

bool is_prime_u64(uint64_t n);

} // namespace ramo
