#pragma once

#include <cstdint>
#include <vector>

namespace ramo {

// Reduced row-echelon basis of a subspace of GF(p)^n. Rows are kept with
// pivot 1, pivot columns strictly increasing, and zeros above and below each
// pivot, so equal subspaces have identical row lists.
class EchelonBasis {
public:
    EchelonBasis() = default;
    EchelonBasis(uint32_t p, size_t ncols) : p_(p), ncols_(ncols) {}

    uint32_t p() const { return p_; }
    size_t ncols() const { return ncols_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // reduce v by the basis in place; v becomes the canonical residual
    void reduce(std::vector<uint32_t>& v) const;
    bool contains(std::vector<uint32_t> v) const;

    // returns true when v was independent and the basis grew
    bool insert(std::vector<uint32_t> v);

    bool operator==(const EchelonBasis& o) const { return rows_ == o.rows_; }

    // true when every row of `o` reduces to zero here
    bool contains_all(const EchelonBasis& o) const;

    size_t hash() const;

private:
    uint32_t p_ = 2;
    size_t ncols_ = 0;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<size_t> pivots_;
};

uint32_t gfp_inv(uint32_t a, uint32_t p);

// Basis of {v : A v = 0} over GF(p), for a dense row-major matrix with
// `ncols` columns. Rows of the result form an EchelonBasis.
EchelonBasis gfp_nullspace(const std::vector<std::vector<uint32_t>>& matrix, size_t ncols,
                           uint32_t p);

// Basis of the intersection of two subspaces (Zassenhaus).
EchelonBasis gfp_intersect(const EchelonBasis& a, const EchelonBasis& b);

} // namespace ramo
