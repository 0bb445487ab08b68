#include "ramo/gfp.hpp"

#include <algorithm>
#include <cassert>

namespace ramo {

uint32_t gfp_inv(uint32_t a, uint32_t p) {
    // p is prime and small; Fermat
    uint64_t result = 1, base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (uint32_t)result;
}

void EchelonBasis::reduce(std::vector<uint32_t>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t c = v[pivots_[r]];
        if (c == 0) continue;
        const auto& row = rows_[r];
        uint64_t mult = p_ - c; // subtract c * row
        for (size_t j = pivots_[r]; j < ncols_; ++j)
            v[j] = (uint32_t)((v[j] + mult * row[j]) % p_);
    }
}

bool EchelonBasis::contains(std::vector<uint32_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool EchelonBasis::insert(std::vector<uint32_t> v) {
    reduce(v);
    size_t piv = ncols_;
    for (size_t j = 0; j < ncols_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == ncols_) return false;
    uint32_t inv = gfp_inv(v[piv], p_);
    for (size_t j = piv; j < ncols_; ++j) v[j] = (uint32_t)((uint64_t)v[j] * inv % p_);
    // eliminate the new pivot column from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t c = rows_[r][piv];
        if (c == 0) continue;
        uint64_t mult = p_ - c;
        for (size_t j = piv; j < ncols_; ++j)
            rows_[r][j] = (uint32_t)((rows_[r][j] + mult * v[j]) % p_);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool EchelonBasis::contains_all(const EchelonBasis& o) const {
    for (const auto& row : o.rows_)
        if (!contains(row)) return false;
    return true;
}

size_t EchelonBasis::hash() const {
    size_t h = rows_.size() * 1000003u + ncols_;
    for (const auto& row : rows_)
        for (uint32_t x : row) h = h * 1315423911u + x + 1;
    return h;
}

EchelonBasis gfp_nullspace(const std::vector<std::vector<uint32_t>>& matrix, size_t ncols,
                           uint32_t p) {
    // RREF of the constraint matrix, then one basis vector per free column
    EchelonBasis constraints(p, ncols);
    for (const auto& row : matrix) constraints.insert(row);

    std::vector<bool> is_pivot(ncols, false);
    for (size_t piv : constraints.pivots()) is_pivot[piv] = true;

    EchelonBasis result(p, ncols);
    for (size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<uint32_t> v(ncols, 0);
        v[j] = 1;
        for (size_t r = 0; r < constraints.rank(); ++r) {
            uint32_t c = constraints.rows()[r][j];
            if (c) v[constraints.pivots()[r]] = (p - c) % p;
        }
        result.insert(std::move(v));
    }
    return result;
}

EchelonBasis gfp_intersect(const EchelonBasis& a, const EchelonBasis& b) {
    assert(a.p() == b.p() && a.ncols() == b.ncols());
    size_t n = a.ncols();
    uint32_t p = a.p();
    // Zassenhaus: echelonize rows (u|u) for u in a and (w|0) for w in b;
    // rows with zero left half carry a basis of the intersection on the right
    EchelonBasis big(p, 2 * n);
    for (const auto& u : a.rows()) {
        std::vector<uint32_t> row(2 * n, 0);
        std::copy(u.begin(), u.end(), row.begin());
        std::copy(u.begin(), u.end(), row.begin() + (long)n);
        big.insert(std::move(row));
    }
    for (const auto& w : b.rows()) {
        std::vector<uint32_t> row(2 * n, 0);
        std::copy(w.begin(), w.end(), row.begin());
        big.insert(std::move(row));
    }
    EchelonBasis result(p, n);
    for (size_t r = 0; r < big.rank(); ++r) {
        if (big.pivots()[r] < n) continue;
        std::vector<uint32_t> v(big.rows()[r].begin() + (long)n, big.rows()[r].end());
        result.insert(std::move(v));
    }
    return result;
}

} // namespace ramo
