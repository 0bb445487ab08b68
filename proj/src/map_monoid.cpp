#include "ramo/map_monoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ramo/errors.hpp"

namespace ramo {

namespace {

bool is_antitone(char c) { return c == 'a' || c == 'd'; }

} // namespace

MapMonoid MapMonoid::generate(const IdealLattice& lattice, const std::string& generators,
                              uint64_t budget) {
    MapMonoid mm;
    mm.lat_ = &lattice;
    std::string gens = generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) throw std::invalid_argument("monoid generators: empty set");
    for (char c : gens)
        if (c != 'a' && c != 'd' && c != 'r')
            throw std::invalid_argument(std::string("monoid generators: unknown symbol '") + c +
                                        "'");
    mm.gens_ = gens;

    const size_t nideals = lattice.size();
    std::map<char, std::vector<size_t>> gen_img;
    for (char c : gens) {
        std::vector<size_t> img(nideals);
        for (size_t i = 0; i < nideals; ++i)
            img[i] = c == 'r'   ? lattice.radical(i)
                     : c == 'a' ? lattice.annihilator(i)
                                : lattice.dualradical(i);
        gen_img[c] = std::move(img);
    }

    std::map<std::vector<size_t>, size_t> index;
    auto add = [&](std::vector<size_t> img, std::string label) -> bool {
        auto [it, fresh] = index.emplace(std::move(img), mm.images_.size());
        if (!fresh) return false;
        if (mm.images_.size() >= budget)
            throw BudgetError("monoid budget exceeded: >= " + std::to_string(budget) +
                                  " elements",
                              budget);
        mm.images_.push_back(it->first);
        mm.labels_.push_back(std::move(label));
        return true;
    };

    std::vector<size_t> ident(nideals);
    for (size_t i = 0; i < nideals; ++i) ident[i] = i;
    add(std::move(ident), "1");

    // breadth-first by word length; within a level, candidates c + w run in
    // lexicographic order, so the first label found is the canonical one
    size_t lo = 0, hi = mm.images_.size();
    while (lo < hi) {
        for (char c : gens) {
            const auto& g = gen_img[c];
            for (size_t e = lo; e < hi; ++e) {
                std::vector<size_t> img(nideals);
                for (size_t i = 0; i < nideals; ++i) img[i] = g[mm.images_[e][i]];
                add(std::move(img), c + (mm.labels_[e] == "1" ? "" : mm.labels_[e]));
            }
        }
        lo = hi;
        hi = mm.images_.size();
    }

    const size_t n = mm.images_.size();
    for (char c : gens) mm.gen_index_.push_back(index.at(gen_img[c]));

    mm.table_.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            std::vector<size_t> img(nideals);
            for (size_t i = 0; i < nideals; ++i) img[i] = mm.images_[x][mm.images_[y][i]];
            mm.table_[x * n + y] = index.at(img);
        }

    mm.order_.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            bool le = true;
            for (size_t i = 0; i < nideals && le; ++i)
                le = lattice.contains(mm.images_[x][i], mm.images_[y][i]);
            if (le) mm.order_[x * n + y] = 1;
        }

    // parity sets: propagate over left multiplication by generators until
    // stable; this reaches the parity of every word equal to each map
    mm.parity_.assign(n, {false, false});
    mm.parity_[0].first = true; // empty word
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            bool flip = is_antitone(gens[gi]);
            size_t g = mm.gen_index_[gi];
            for (size_t x = 0; x < n; ++x) {
                size_t t = mm.table_[g * n + x];
                auto [even, odd] = mm.parity_[x];
                bool te = flip ? odd : even, to = flip ? even : odd;
                if (te && !mm.parity_[t].first) mm.parity_[t].first = changed = true;
                if (to && !mm.parity_[t].second) mm.parity_[t].second = changed = true;
            }
        }
    }
    return mm;
}

size_t MapMonoid::generator(char c) const {
    size_t pos = gens_.find(c);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("generator '") + c + "' not in monoid");
    return gen_index_[pos];
}

std::vector<size_t> MapMonoid::apply_word(const std::string& word) const {
    size_t acc = identity_index();
    if (!(word == "1" || word.empty()))
        for (char c : word) acc = compose(acc, generator(c));
    return images_[acc];
}

bool MapMonoid::relation_check(const std::string& left, const std::string& right) const {
    return apply_word(left) == apply_word(right);
}

std::vector<size_t> MapMonoid::orbit(size_t ideal_index) const {
    std::vector<size_t> out;
    for (const auto& img : images_) out.push_back(img[ideal_index]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

KReport MapMonoid::k_numbers() const {
    KReport rep;
    rep.K = size();
    for (size_t i = 0; i < lat_->size(); ++i) {
        size_t k = orbit(i).size();
        rep.per_ideal.push_back(k);
        rep.ring_k = std::max(rep.ring_k, k);
    }
    return rep;
}

std::vector<MapFlags> MapMonoid::classify_properties() const {
    const size_t n = size(), m = lat_->size();
    std::vector<MapFlags> flags(n);
    for (size_t x = 0; x < n; ++x) {
        MapFlags& f = flags[x];
        const auto& img = images_[x];
        f.idempotent = compose(x, x) == x;
        f.constant = std::all_of(img.begin(), img.end(),
                                 [&](size_t v) { return v == img[0]; });
        f.order_preserving = f.order_reversing = true;
        for (size_t i = 0; i < m && (f.order_preserving || f.order_reversing); ++i)
            for (size_t j = 0; j < m; ++j) {
                if (i == j || !lat_->contains(i, j)) continue;
                if (!lat_->contains(img[i], img[j])) f.order_preserving = false;
                if (!lat_->contains(img[j], img[i])) f.order_reversing = false;
                if (!f.order_preserving && !f.order_reversing) break;
            }
        f.parity_even = parity_[x].first;
        f.parity_odd = parity_[x].second;
    }
    return flags;
}

std::vector<std::pair<size_t, size_t>> MapMonoid::hasse() const {
    const size_t n = size();
    std::vector<std::pair<size_t, size_t>> covers;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool between = false;
            for (size_t k = 0; k < n && !between; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) between = true;
            if (!between) covers.emplace_back(i, j);
        }
    return covers;
}

OrderedMonoid MapMonoid::export_abstract() const {
    OrderedMonoid out;
    out.labels = labels_;
    out.identity = identity_index();
    out.table = table_;
    out.order = order_;
    // designated generators, r-like first
    if (gens_.find('r') != std::string::npos) {
        out.symbols += 'r';
        out.generators.push_back(generator('r'));
    }
    for (char c : gens_)
        if (c != 'r') {
            out.symbols += c;
            out.generators.push_back(generator(c));
        }
    return out;
}

std::string MapMonoid::to_dot() const {
    std::ostringstream os;
    os << "digraph \"" << lat_->ring().display_name() << " monoid\" {\n";
    os << "  rankdir=BT;\n  edge [dir=none];\n";
    for (size_t i = 0; i < size(); ++i) {
        os << "  \"" << labels_[i] << "\"";
        if (compose(i, i) == i) os << " [style=bold]";
        os << ";\n";
    }
    for (auto [lo, hi] : hasse())
        os << "  \"" << labels_[lo] << "\" -> \"" << labels_[hi] << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace ramo
