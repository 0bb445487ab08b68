#include "ramo/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramo {

namespace {

std::string norm_word(const std::string& w) { return w == "1" ? std::string() : w; }

} // namespace

// The rule congruence is closed over every word of length <= max_word_len
// with a union-find: each rule applied at each position of each word links
// the word to its rewrite. Length-nonincreasing rules keep every rewrite
// inside the enumerated set, so the classes are exact wherever derivations
// fit in the budget. This also captures equalities that plain normalization
// misses, such as rarar = rara from {a^2 = 1, r^2 = r, rarara = rar} (via
// the length-7 word rararaa).
OrderedMonoid from_presentation(const RewritingPresentation& pres, std::string name) {
    if (pres.alphabet.size() != 2 || pres.alphabet[0] == pres.alphabet[1])
        throw std::invalid_argument("presentation: alphabet must be two distinct symbols");
    const char lo = std::min(pres.alphabet[0], pres.alphabet[1]);
    const char hi = std::max(pres.alphabet[0], pres.alphabet[1]);
    const size_t L = std::min<size_t>(pres.max_word_len, 22);
    if (L < 4) throw std::invalid_argument("presentation: word budget too small");

    std::vector<std::pair<std::string, std::string>> rules;
    for (const auto& [l, r] : pres.rules) {
        std::string ln = norm_word(l), rn = norm_word(r);
        if (ln.empty()) throw std::invalid_argument("presentation: empty rule lhs");
        if (rn.size() > ln.size())
            throw std::invalid_argument("presentation: rule is length-increasing");
        for (char c : ln + rn)
            if (c != lo && c != hi)
                throw std::invalid_argument("presentation: rule uses unknown symbol");
        if (ln.size() > L) throw std::invalid_argument("presentation: rule exceeds word budget");
        rules.emplace_back(std::move(ln), std::move(rn));
    }

    // word ids enumerate all words of length <= L in (length, lex) order
    std::vector<size_t> base(L + 2);
    for (size_t l = 0; l <= L + 1; ++l) base[l] = ((size_t)1 << l) - 1;
    const size_t total = base[L + 1];
    auto id_of = [&](const std::string& w) -> size_t {
        size_t val = 0;
        for (char c : w) val = val * 2 + (c == hi ? 1 : 0);
        return base[w.size()] + val;
    };
    auto word_of = [&](size_t id) -> std::string {
        size_t l = 0;
        while (base[l + 1] <= id) ++l;
        size_t val = id - base[l];
        std::string w(l, lo);
        for (size_t k = 0; k < l; ++k)
            if ((val >> (l - 1 - k)) & 1) w[k] = hi;
        return w;
    };

    std::vector<uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) -> size_t {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (size_t id = 0; id < total; ++id) {
        std::string w = word_of(id);
        for (const auto& [l, r] : rules)
            for (size_t p = w.find(l); p != std::string::npos; p = w.find(l, p + 1))
                unite(id, id_of(w.substr(0, p) + r + w.substr(p + l.size())));
    }

    // smallest member of each class; count fresh classes per word length
    constexpr uint32_t kUnset = (uint32_t)-1;
    std::vector<uint32_t> rep(total, kUnset);
    std::vector<size_t> fresh(L + 1, 0);
    for (size_t id = 0; id < total; ++id) {
        size_t root = find(id);
        if (rep[root] == kUnset) {
            rep[root] = (uint32_t)id;
            size_t l = 0;
            while (base[l + 1] <= id) ++l;
            ++fresh[l];
        }
    }

    // stabilization: two consecutive lengths that introduce no new class
    size_t m = L + 1;
    for (size_t cand = 0; cand + 2 <= L; ++cand)
        if (fresh[cand + 1] == 0 && fresh[cand + 2] == 0) {
            m = cand;
            break;
        }
    if (m > L || 2 * m > L)
        throw std::runtime_error("presentation: word budget exhausted before closure");

    std::vector<size_t> elem_ids;
    std::vector<size_t> elem_of(total, (size_t)-1);
    for (size_t id = 0; id < base[m + 1]; ++id)
        if (rep[find(id)] == id) {
            elem_of[find(id)] = elem_ids.size();
            elem_ids.push_back(id);
        }
    const size_t n = elem_ids.size();
    auto elem_of_word = [&](const std::string& w) -> size_t {
        if (w.size() > L) throw std::runtime_error("presentation: word exceeds budget");
        size_t e = elem_of[find(id_of(w))];
        if (e == (size_t)-1)
            throw std::runtime_error("presentation: word budget exhausted before closure");
        return e;
    };

    OrderedMonoid out;
    out.name = std::move(name);
    out.identity = 0;
    out.symbols = pres.alphabet;
    for (size_t i = 0; i < n; ++i) {
        std::string w = word_of(elem_ids[i]);
        out.labels.push_back(w.empty() ? "1" : w);
    }
    for (char c : pres.alphabet) out.generators.push_back(elem_of_word(std::string(1, c)));
    out.table.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            out.table[x * n + y] = elem_of_word(word_of(elem_ids[x]) + word_of(elem_ids[y]));

    // order: axioms closed under transitivity and one-generator products;
    // the monotone generator preserves on the left, the antitone one
    // reverses, right multiplication always preserves
    out.order.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) out.order[i * n + i] = 1;
    for (const auto& [l, r] : pres.order_axioms)
        out.order[elem_of_word(norm_word(l)) * n + elem_of_word(norm_word(r))] = 1;
    const size_t gmono = out.generators[0], ganti = out.generators[1];
    bool changed = true;
    auto mark = [&](size_t x, size_t y) {
        if (!out.order[x * n + y]) {
            out.order[x * n + y] = 1;
            changed = true;
        }
    };
    while (changed) {
        changed = false;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                if (!out.order[x * n + y] || x == y) continue;
                mark(out.mul(gmono, x), out.mul(gmono, y));
                mark(out.mul(ganti, y), out.mul(ganti, x));
                mark(out.mul(x, gmono), out.mul(y, gmono));
                mark(out.mul(x, ganti), out.mul(y, ganti));
                for (size_t z = 0; z < n; ++z)
                    if (out.order[y * n + z]) mark(x, z);
            }
    }
    // antisymmetry failures are order-forced equalities (the models are maps
    // ordered pointwise, where x <= y <= x means x = y): fold them back into
    // the rules and rebuild. Element count strictly drops, so this ends.
    for (size_t x = 0; x < n; ++x)
        for (size_t y = x + 1; y < n; ++y)
            if (out.order[x * n + y] && out.order[y * n + x]) {
                RewritingPresentation next = pres;
                std::string wx = word_of(elem_ids[x]), wy = word_of(elem_ids[y]);
                if (wx.size() < wy.size()) std::swap(wx, wy);
                next.rules.emplace_back(std::move(wx), std::move(wy));
                return from_presentation(next, std::move(name));
            }
    out.validate();
    return out;
}

} // namespace ramo
