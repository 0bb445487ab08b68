#include "ramo/finite_ring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <sstream>

#include "ramo/errors.hpp"
#include "ramo/gfp.hpp"

namespace ramo {

Elem FiniteRing::add(Elem a, Elem b) const {
    Elem out = 0;
    for (size_t i = 0; i < dim(); ++i) {
        uint64_t m = moduli_[i];
        uint64_t ai = (a / radix_[i]) % m, bi = (b / radix_[i]) % m;
        out += ((ai + bi) % m) * radix_[i];
    }
    return out;
}

Elem FiniteRing::neg(Elem a) const {
    Elem out = 0;
    for (size_t i = 0; i < dim(); ++i) {
        uint64_t m = moduli_[i];
        uint64_t ai = (a / radix_[i]) % m;
        out += ((m - ai) % m) * radix_[i];
    }
    return out;
}

Elem FiniteRing::scale(Elem a, uint64_t c) const {
    Elem out = 0;
    for (size_t i = 0; i < dim(); ++i) {
        uint64_t m = moduli_[i];
        uint64_t ai = (a / radix_[i]) % m;
        out += (ai * (c % m) % m) * radix_[i];
    }
    return out;
}

std::vector<uint32_t> FiniteRing::coords(Elem a) const {
    std::vector<uint32_t> c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = (uint32_t)((a / radix_[i]) % moduli_[i]);
    return c;
}

Elem FiniteRing::from_coords(const std::vector<uint32_t>& c) const {
    Elem out = 0;
    for (size_t i = 0; i < dim(); ++i) out += (uint64_t)(c[i] % moduli_[i]) * radix_[i];
    return out;
}

void FiniteRing::mul_coords(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                            std::vector<uint32_t>& out) const {
    size_t k = dim();
    std::vector<uint64_t> acc(k, 0);
    for (size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < k; ++j) {
            if (b[j] == 0) continue;
            uint64_t c = (uint64_t)a[i] * b[j];
            const auto& bp = basis_product_[i * k + j];
            for (size_t t = 0; t < k; ++t)
                if (bp[t]) acc[t] += c % moduli_[t] * bp[t];
        }
    }
    out.resize(k);
    for (size_t t = 0; t < k; ++t) out[t] = (uint32_t)(acc[t] % moduli_[t]);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
    if (!mult_table_.empty()) return mult_table_[a * size_ + b];
    std::vector<uint32_t> ca = coords(a), cb = coords(b), out;
    mul_coords(ca, cb, out);
    return from_coords(out);
}

void FiniteRing::force_mult_table() const {
    if (!mult_table_.empty()) return;
    if (size_ > 2048) return;
    std::vector<uint32_t> table(size_ * size_);
    std::vector<uint32_t> out;
    for (Elem a = 0; a < size_; ++a) {
        auto ca = coords(a);
        for (Elem b = 0; b < size_; ++b) {
            auto cb = coords(b);
            mul_coords(ca, cb, out);
            table[a * size_ + b] = (uint32_t)from_coords(out);
        }
    }
    mult_table_ = std::move(table);
}

std::vector<uint32_t>* FiniteRing::mutable_mult_table() const {
    force_mult_table();
    return mult_table_.empty() ? nullptr : &mult_table_;
}

std::string FiniteRing::elem_to_string(Elem a) const {
    switch (kind_) {
    case RingDescription::Kind::Cyclic:
        return std::to_string(a);
    case RingDescription::Kind::PolyQuotient: {
        auto c = coords(a);
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!first) out << "+";
            first = false;
            if (coord_labels_[i] == "1") out << c[i];
            else if (c[i] == 1) out << coord_labels_[i];
            else out << c[i] << "*" << coord_labels_[i];
        }
        return first ? "0" : out.str();
    }
    case RingDescription::Kind::Product:
    case RingDescription::Kind::TrivialExtension: {
        std::ostringstream out;
        out << "(";
        size_t offset = 0;
        auto c = coords(a);
        for (size_t f = 0; f < children_.size(); ++f) {
            const auto& child = *children_[f];
            std::vector<uint32_t> sub(c.begin() + (long)offset,
                                      c.begin() + (long)(offset + child.dim()));
            offset += child.dim();
            if (f) out << ",";
            out << child.elem_to_string(child.from_coords(sub));
        }
        out << ")";
        return out.str();
    }
    }
    return "?";
}

ValidationReport FiniteRing::validate_axioms() const {
    ValidationReport rep;
    auto witness2 = [&](Elem a, Elem b) {
        return elem_to_string(a) + ", " + elem_to_string(b);
    };
    auto witness3 = [&](Elem a, Elem b, Elem c) {
        return witness2(a, b) + ", " + elem_to_string(c);
    };

    ValidationReport::Axiom identity{"multiplicative identity", true, ""};
    ValidationReport::Axiom inverses{"additive inverses", true, ""};
    for (Elem a = 0; a < size_ && a < 4096; ++a) {
        if (identity.pass && (mul(one_, a) != a || mul(a, one_) != a)) {
            identity.pass = false;
            identity.witness = elem_to_string(a);
        }
        if (inverses.pass && add(a, neg(a)) != 0) {
            inverses.pass = false;
            inverses.witness = elem_to_string(a);
        }
    }

    ValidationReport::Axiom comm{"commutativity", true, ""};
    ValidationReport::Axiom assoc{"associativity", true, ""};
    ValidationReport::Axiom dist{"distributivity", true, ""};

    bool pairs_exhaustive = size_ <= 2048;
    bool triples_exhaustive = size_ <= 256;
    rep.exhaustive = size_ <= 4096 && triples_exhaustive;

    std::mt19937_64 rng(0xabcdef12345678ull);
    auto rand_elem = [&] { return (Elem)(rng() % size_); };

    if (pairs_exhaustive) {
        for (Elem a = 0; a < size_ && comm.pass; ++a)
            for (Elem b = a + 1; b < size_; ++b)
                if (mul(a, b) != mul(b, a)) {
                    comm.pass = false;
                    comm.witness = witness2(a, b);
                    break;
                }
    } else {
        for (int t = 0; t < 100000 && comm.pass; ++t) {
            Elem a = rand_elem(), b = rand_elem();
            if (mul(a, b) != mul(b, a)) {
                comm.pass = false;
                comm.witness = witness2(a, b);
            }
        }
    }

    auto check_triple = [&](Elem a, Elem b, Elem c) {
        if (assoc.pass && mul(mul(a, b), c) != mul(a, mul(b, c))) {
            assoc.pass = false;
            assoc.witness = witness3(a, b, c);
        }
        if (dist.pass && mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            dist.pass = false;
            dist.witness = witness3(a, b, c);
        }
        ++rep.triples_checked;
    };
    if (triples_exhaustive) {
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b)
                for (Elem c = 0; c < size_; ++c) check_triple(a, b, c);
    } else {
        for (int t = 0; t < 100000; ++t) check_triple(rand_elem(), rand_elem(), rand_elem());
    }

    rep.axioms = {assoc, comm, dist, identity, inverses};
    return rep;
}

// ---------------------------------------------------------------------------
// construction

namespace {

struct PolyQuotientData {
    std::vector<Monomial> basis;       // quotient basis monomials, ascending
    std::vector<std::string> labels;
};

Polynomial mod_p(const Polynomial& poly, uint64_t p) {
    Polynomial out(poly.nvars());
    for (const auto& [m, c] : poly.terms()) {
        long long r = c % (long long)p;
        if (r < 0) r += (long long)p;
        out.add_term(m, r);
    }
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, uint64_t p) {
    Polynomial out(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb % (long long)p);
        }
    return mod_p(out, p);
}

// rewrite until every exponent is below its cap; terminates because cap
// right-hand sides have strictly smaller total degree
Polynomial cap_reduce(Polynomial poly, const RingDescription& desc) {
    uint64_t p = desc.p;
    poly = mod_p(poly, p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : poly.terms()) {
            size_t v = m.size();
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] >= desc.caps[i].degree) {
                    v = i;
                    break;
                }
            if (v == m.size()) continue;
            // replace this one term, then restart the scan
            Polynomial rest(poly.nvars());
            for (const auto& [m2, c2] : poly.terms())
                if (m2 != m) rest.add_term(m2, c2);
            Monomial stub = m;
            stub[v] -= desc.caps[v].degree;
            Polynomial stub_poly(poly.nvars());
            stub_poly.add_term(stub, c);
            Polynomial replaced = poly_mul(stub_poly, desc.caps[v].rhs, p);
            for (const auto& [m2, c2] : replaced.terms()) rest.add_term(m2, c2);
            poly = mod_p(rest, p);
            changed = true;
            break;
        }
    }
    return poly;
}

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

struct GradedDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint32_t da = std::accumulate(a.begin(), a.end(), 0u);
        uint32_t db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da > db;
        return a > b;
    }
};

} // namespace

std::shared_ptr<const FiniteRing> build_ring(const RingDescription& desc, uint64_t budget) {
    auto ring = std::make_shared<FiniteRing>();
    ring->kind_ = desc.kind;
    ring->name_ = desc.display();

    auto finish_radix = [&] {
        ring->radix_.assign(ring->moduli_.size(), 1);
        uint64_t place = 1;
        for (size_t i = 0; i < ring->moduli_.size(); ++i) {
            ring->radix_[i] = place;
            place *= ring->moduli_[i];
        }
        ring->size_ = place;
        uint32_t p0 = ring->moduli_.empty() ? 0 : ring->moduli_[0];
        ring->prime_space_ = is_prime_u64(p0) &&
            std::all_of(ring->moduli_.begin(), ring->moduli_.end(),
                        [&](uint32_t m) { return m == p0; });
        ring->prime_ = ring->prime_space_ ? p0 : 0;
    };

    switch (desc.kind) {
    case RingDescription::Kind::Cyclic: {
        if (desc.n > budget)
            throw BudgetError("ring budget exceeded: Z/" + std::to_string(desc.n) +
                                  " needs " + std::to_string(desc.n) + " elements",
                              desc.n);
        ring->moduli_ = {(uint32_t)desc.n};
        finish_radix();
        std::vector<uint32_t> one_sq = {desc.n == 1 ? 0u : 1u};
        ring->basis_product_ = {one_sq};
        ring->one_ = desc.n == 1 ? 0 : 1;
        break;
    }
    case RingDescription::Kind::PolyQuotient: {
        uint64_t p = desc.p;
        // cap basis: all exponent vectors below the caps
        uint64_t cap_count = 1;
        for (const auto& cap : desc.caps) {
            cap_count *= cap.degree;
            if (cap_count > 65536)
                throw BudgetError("cap monomial basis too large", cap_count);
        }
        std::vector<Monomial> cap_basis;
        Monomial cur(desc.vars.size(), 0);
        for (uint64_t idx = 0; idx < cap_count; ++idx) {
            cap_basis.push_back(cur);
            for (size_t i = 0; i < cur.size(); ++i) {
                if (++cur[i] < desc.caps[i].degree) break;
                cur[i] = 0;
            }
        }
        std::sort(cap_basis.begin(), cap_basis.end(), GradedDesc{});
        std::map<Monomial, size_t> col_of;
        for (size_t i = 0; i < cap_basis.size(); ++i) col_of[cap_basis[i]] = i;

        auto to_vec = [&](const Polynomial& poly) {
            std::vector<uint32_t> v(cap_basis.size(), 0);
            for (const auto& [m, c] : poly.terms()) v[col_of.at(m)] = (uint32_t)c;
            return v;
        };

        // subspace spanned by {m * g} over all cap-basis monomials m and
        // extra relations g, everything cap-reduced
        EchelonBasis rel_space((uint32_t)p, cap_basis.size());
        std::vector<Polynomial> rel_polys;
        for (const auto& g : desc.extra_relations) {
            for (const auto& m : cap_basis) {
                Polynomial mono(desc.vars.size());
                mono.add_term(m, 1);
                Polynomial prod = cap_reduce(poly_mul(mono, mod_p(g, p), p), desc);
                if (!prod.is_zero() && rel_space.insert(to_vec(prod)))
                    rel_polys.push_back(prod);
            }
        }

        // multiplication-stability check on the relation subspace: the span
        // must absorb products with every basis monomial
        for (const auto& w : rel_polys) {
            for (const auto& m : cap_basis) {
                Polynomial mono(desc.vars.size());
                mono.add_term(m, 1);
                Polynomial prod = cap_reduce(poly_mul(mono, w, p), desc);
                if (!rel_space.contains(to_vec(prod)))
                    throw ParseError("relation subspace is not closed under multiplication; "
                                     "relations do not define a quotient ring");
            }
        }

        std::vector<bool> is_pivot(cap_basis.size(), false);
        for (size_t piv : rel_space.pivots()) is_pivot[piv] = true;
        std::vector<Monomial> q_basis;
        for (size_t i = 0; i < cap_basis.size(); ++i)
            if (!is_pivot[i]) q_basis.push_back(cap_basis[i]);
        std::sort(q_basis.begin(), q_basis.end(), [](const Monomial& a, const Monomial& b) {
            return GradedDesc{}(b, a); // ascending graded order, constant first
        });

        uint64_t sz = 1;
        for (size_t i = 0; i < q_basis.size(); ++i) {
            sz *= p;
            if (sz > budget)
                throw BudgetError("ring budget exceeded: quotient has p^" +
                                      std::to_string(q_basis.size()) + " elements",
                                  sz);
        }

        std::map<Monomial, size_t> q_col;
        for (size_t i = 0; i < q_basis.size(); ++i) q_col[q_basis[i]] = i;

        auto reduce_to_coords = [&](const Polynomial& poly) {
            Polynomial red = cap_reduce(poly, desc);
            auto v = to_vec(red);
            rel_space.reduce(v);
            std::vector<uint32_t> out(q_basis.size(), 0);
            for (size_t i = 0; i < cap_basis.size(); ++i)
                if (v[i]) out[q_col.at(cap_basis[i])] = v[i];
            return out;
        };

        size_t k = q_basis.size();
        ring->moduli_.assign(k, (uint32_t)p);
        finish_radix();
        ring->basis_product_.resize(k * k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Monomial m(desc.vars.size());
                for (size_t t = 0; t < m.size(); ++t) m[t] = q_basis[i][t] + q_basis[j][t];
                Polynomial mono(desc.vars.size());
                mono.add_term(m, 1);
                ring->basis_product_[i * k + j] = reduce_to_coords(mono);
            }
        ring->one_ = ring->from_coords(reduce_to_coords(Polynomial::constant(desc.vars.size(), 1)));
        for (const auto& m : q_basis) ring->coord_labels_.push_back(monomial_label(m, desc.vars));
        break;
    }
    case RingDescription::Kind::Product: {
        uint64_t sz = 1;
        for (const auto& f : desc.factors) {
            auto child = build_ring(f, budget);
            if (sz > budget / std::max<uint64_t>(child->size(), 1))
                throw BudgetError("ring budget exceeded by product", sz * child->size());
            sz *= child->size();
            ring->children_.push_back(child);
        }
        for (const auto& child : ring->children_)
            ring->moduli_.insert(ring->moduli_.end(), child->moduli_.begin(),
                                 child->moduli_.end());
        finish_radix();
        size_t k = ring->dim();
        ring->basis_product_.assign(k * k, std::vector<uint32_t>(k, 0));
        size_t offset = 0;
        std::vector<uint32_t> one_coords(k, 0);
        for (const auto& child : ring->children_) {
            size_t ck = child->dim();
            for (size_t i = 0; i < ck; ++i)
                for (size_t j = 0; j < ck; ++j) {
                    const auto& bp = child->basis_product(i, j);
                    for (size_t t = 0; t < ck; ++t)
                        ring->basis_product_[(offset + i) * k + (offset + j)][offset + t] = bp[t];
                }
            auto child_one = child->coords(child->one());
            for (size_t t = 0; t < ck; ++t) one_coords[offset + t] = child_one[t];
            offset += ck;
        }
        ring->one_ = ring->from_coords(one_coords);
        break;
    }
    case RingDescription::Kind::TrivialExtension: {
        auto base = build_ring(*desc.base, budget);
        if (base->size() > budget / std::max<uint64_t>(base->size(), 1))
            throw BudgetError("ring budget exceeded by trivial extension",
                              base->size() * base->size());
        ring->children_ = {base, base};
        ring->moduli_ = base->moduli_;
        ring->moduli_.insert(ring->moduli_.end(), base->moduli_.begin(), base->moduli_.end());
        finish_radix();
        size_t bk = base->dim(), k = ring->dim();
        ring->basis_product_.assign(k * k, std::vector<uint32_t>(k, 0));
        for (size_t i = 0; i < bk; ++i)
            for (size_t j = 0; j < bk; ++j) {
                const auto& bp = base->basis_product(i, j);
                for (size_t t = 0; t < bk; ++t) {
                    // (r,0)(r',0) = (rr',0); (r,0)(0,m) = (0,rm); (0,m)(0,m') = 0
                    ring->basis_product_[i * k + j][t] = bp[t];
                    ring->basis_product_[i * k + (bk + j)][bk + t] = bp[t];
                    ring->basis_product_[(bk + i) * k + j][bk + t] = bp[t];
                }
            }
        auto base_one = base->coords(base->one());
        std::vector<uint32_t> one_coords(k, 0);
        for (size_t t = 0; t < bk; ++t) one_coords[t] = base_one[t];
        ring->one_ = ring->from_coords(one_coords);
        break;
    }
    }

    return ring;
}

} // namespace ramo
