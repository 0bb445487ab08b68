#include "ramo/ordered_monoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ramo {

size_t OrderedMonoid::eval_word(const std::string& word) const {
    size_t acc = identity;
    if (word == "1" || word.empty()) return acc;
    // word w1 w2 ... wn denotes w1 o w2 o ... o wn; multiply left to right
    for (char c : word) {
        size_t pos = symbols.find(c);
        if (pos == std::string::npos)
            throw std::invalid_argument(std::string("unknown generator symbol '") + c + "'");
        acc = mul(acc, generators[pos]);
    }
    return acc;
}

void OrderedMonoid::validate() const {
    size_t n = size();
    if (n == 0 || table.size() != n * n || order.size() != n * n)
        throw std::logic_error("ordered monoid: malformed tables");
    if (generators.size() != symbols.size())
        throw std::logic_error("ordered monoid: generator/symbol mismatch");
    for (size_t i = 0; i < n; ++i)
        if (mul(identity, i) != i || mul(i, identity) != i)
            throw std::logic_error("ordered monoid: identity law fails");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (mul(mul(i, j), k) != mul(i, mul(j, k)))
                    throw std::logic_error("ordered monoid: associativity fails");
    for (size_t i = 0; i < n; ++i) {
        if (!leq(i, i)) throw std::logic_error("ordered monoid: order not reflexive");
        for (size_t j = 0; j < n; ++j) {
            if (i != j && leq(i, j) && leq(j, i))
                throw std::logic_error("ordered monoid: order not antisymmetric");
            for (size_t k = 0; k < n; ++k)
                if (leq(i, j) && leq(j, k) && !leq(i, k))
                    throw std::logic_error("ordered monoid: order not transitive");
        }
    }
    // generators generate
    std::vector<uint8_t> reach(n, 0);
    reach[identity] = 1;
    std::vector<size_t> stack{identity};
    while (!stack.empty()) {
        size_t x = stack.back();
        stack.pop_back();
        for (size_t g : generators) {
            size_t y = mul(x, g);
            if (!reach[y]) {
                reach[y] = 1;
                stack.push_back(y);
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (!reach[i]) throw std::logic_error("ordered monoid: generators do not generate");
    for (size_t i = 0; i < n; ++i)
        if (eval_word(labels[i]) != i)
            throw std::logic_error("ordered monoid: label does not evaluate to its element");
}

std::vector<std::pair<size_t, size_t>> OrderedMonoid::hasse_covers() const {
    size_t n = size();
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

nlohmann::json OrderedMonoid::to_json() const {
    size_t n = size();
    nlohmann::json j;
    j["name"] = name;
    j["elements"] = labels;
    j["identity"] = identity;
    j["generators"] = generators;
    j["symbols"] = symbols;
    std::vector<std::vector<size_t>> rows(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) rows[i].push_back(mul(i, k));
    j["table"] = rows;
    std::vector<std::vector<size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (i != k && leq(i, k)) pairs.push_back({i, k});
    j["order_pairs"] = pairs;
    return j;
}

OrderedMonoid OrderedMonoid::from_json(const nlohmann::json& j) {
    OrderedMonoid m;
    m.name = j.value("name", std::string());
    m.labels = j.at("elements").get<std::vector<std::string>>();
    m.identity = j.at("identity").get<size_t>();
    m.generators = j.at("generators").get<std::vector<size_t>>();
    m.symbols = j.at("symbols").get<std::string>();
    size_t n = m.labels.size();
    m.table.assign(n * n, 0);
    const auto& rows = j.at("table");
    if (rows.size() != n) throw std::invalid_argument("monoid document: bad table size");
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) m.table[i * n + k] = rows[i][k].get<size_t>();
    m.order.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) m.order[i * n + i] = 1;
    for (const auto& p : j.at("order_pairs"))
        m.order[p[0].get<size_t>() * n + p[1].get<size_t>()] = 1;
    m.validate();
    return m;
}

std::string OrderedMonoid::to_dot() const {
    std::ostringstream os;
    os << "digraph \"" << (name.empty() ? "monoid" : name) << "\" {\n";
    os << "  rankdir=BT;\n  edge [dir=none];\n";
    for (size_t i = 0; i < size(); ++i) {
        os << "  \"" << labels[i] << "\"";
        if (is_idempotent(i)) os << " [style=bold]";
        os << ";\n";
    }
    for (auto [lo, hi] : hasse_covers())
        os << "  \"" << labels[lo] << "\" -> \"" << labels[hi] << "\";\n";
    os << "}\n";
    return os.str();
}

OrderedMonoid odot(const std::vector<OrderedMonoid>& ms) {
    if (ms.empty()) throw std::invalid_argument("odot: no inputs");
    size_t g = ms[0].generators.size();
    for (const auto& m : ms)
        if (m.generators.size() != g)
            throw std::invalid_argument("odot: inputs have different generator counts");

    size_t nf = ms.size();
    using Tuple = std::vector<size_t>;
    Tuple id(nf);
    std::vector<Tuple> gens(g, Tuple(nf));
    for (size_t i = 0; i < nf; ++i) {
        id[i] = ms[i].identity;
        for (size_t k = 0; k < g; ++k) gens[k][i] = ms[i].generators[k];
    }

    // generator symbols in ascending character order drive the canonical
    // shortest-lex labels
    std::vector<size_t> sym_order(g);
    for (size_t k = 0; k < g; ++k) sym_order[k] = k;
    std::sort(sym_order.begin(), sym_order.end(),
              [&](size_t x, size_t y) { return ms[0].symbols[x] < ms[0].symbols[y]; });

    std::map<Tuple, size_t> index;
    std::vector<Tuple> elems;
    std::vector<std::string> labels;
    auto add = [&](Tuple t, std::string label) -> bool {
        auto [it, fresh] = index.emplace(std::move(t), elems.size());
        if (!fresh) return false;
        elems.push_back(it->first);
        labels.push_back(std::move(label));
        return true;
    };
    add(id, "1");
    size_t lo = 0, hi = elems.size();
    while (lo < hi) {
        for (size_t k : sym_order)
            for (size_t e = lo; e < hi; ++e) {
                Tuple t(nf);
                for (size_t i = 0; i < nf; ++i) t[i] = ms[i].mul(gens[k][i], elems[e][i]);
                std::string lbl = ms[0].symbols[k] + (labels[e] == "1" ? "" : labels[e]);
                add(std::move(t), std::move(lbl));
            }
        lo = hi;
        hi = elems.size();
    }

    size_t n = elems.size();
    OrderedMonoid out;
    out.labels = labels;
    out.identity = 0;
    out.symbols = ms[0].symbols;
    for (size_t k = 0; k < g; ++k) out.generators.push_back(index.at(gens[k]));
    out.table.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            Tuple t(nf);
            for (size_t i = 0; i < nf; ++i) t[i] = ms[i].mul(elems[x][i], elems[y][i]);
            out.table[x * n + y] = index.at(t);
        }
    out.order.assign(n * n, 0);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            bool le = true;
            for (size_t i = 0; i < nf && le; ++i) le = ms[i].leq(elems[x][i], elems[y][i]);
            if (le) out.order[x * n + y] = 1;
        }
    return out;
}

bool is_isomorphic(const OrderedMonoid& a, const OrderedMonoid& b) {
    size_t n = a.size();
    if (n != b.size() || a.generators.size() != b.generators.size()) return false;
    constexpr size_t npos = (size_t)-1;
    std::vector<size_t> phi(n, npos);
    std::vector<size_t> known;
    auto assign = [&](size_t x, size_t y) -> bool {
        if (phi[x] != npos) return phi[x] == y;
        phi[x] = y;
        known.push_back(x);
        return true;
    };
    if (!assign(a.identity, b.identity)) return false;
    for (size_t k = 0; k < a.generators.size(); ++k)
        if (!assign(a.generators[k], b.generators[k])) return false;
    // propagate products until closed
    for (size_t i = 0; i < known.size(); ++i) {
        size_t x = known[i];
        for (size_t j = 0; j <= i; ++j) {
            size_t y = known[j];
            if (!assign(a.mul(x, y), b.mul(phi[x], phi[y]))) return false;
            if (!assign(a.mul(y, x), b.mul(phi[y], phi[x]))) return false;
        }
    }
    std::vector<uint8_t> hit(n, 0);
    for (size_t x = 0; x < n; ++x) {
        if (phi[x] == npos) return false; // generators fail to generate a
        if (hit[phi[x]]) return false;
        hit[phi[x]] = 1;
    }
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (a.leq(x, y) != b.leq(phi[x], phi[y])) return false;
    return true;
}

} // namespace ramo
