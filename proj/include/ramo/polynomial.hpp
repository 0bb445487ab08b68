#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ramo {

// Exponent vector, one entry per declared variable.
using Monomial = std::vector<uint32_t>;

// Sparse integer polynomial in a fixed ordered variable set. Terms are kept
// normalized: exponent vectors are unique and zero coefficients are dropped.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(size_t nvars) : nvars_(nvars) {}

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    void add_term(const Monomial& m, long long coeff);
    uint32_t total_degree() const; // 0 for the zero polynomial

    static Polynomial constant(size_t nvars, long long c);

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    size_t nvars_ = 0;
    std::map<Monomial, long long> terms_;
};

// Parses `text` with the grammar
//   poly := term {("+"|"-") term}
//   term := factor {"*" factor}
//   factor := int | var ["^" int]
// against the declared variable list. Throws ParseError with the offending
// position on bad syntax or an unknown variable.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

} // namespace ramo
