#include "betpo/transform.hpp"

#include <algorithm>
#include <set>

namespace betpo {

TernaryStructure betweenness_of(const Poset& p) {
    const int n = p.size();
    std::vector<Triple> triples;
    for (const Pair& q : p.pairs()) {
        for (Vertex z = 0; z < n; ++z) {
            if (p.less(q.b, z)) {
                triples.push_back({q.a, q.b, z});
                triples.push_back({z, q.b, q.a});
            }
        }
    }
    return TernaryStructure(n, std::move(triples));
}

namespace {

std::pair<std::vector<bool>, std::vector<bool>> below_above(const Poset& p) {
    std::vector<bool> has_below(static_cast<std::size_t>(p.size()), false);
    std::vector<bool> has_above(static_cast<std::size_t>(p.size()), false);
    for (const Pair& q : p.pairs()) {
        has_below[static_cast<std::size_t>(q.b)] = true;
        has_above[static_cast<std::size_t>(q.a)] = true;
    }
    return {std::move(has_below), std::move(has_above)};
}

}  // namespace

std::vector<Vertex> min_elements(const Poset& p) {
    auto [has_below, has_above] = below_above(p);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.size(); ++v) {
        if (!has_below[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> max_elements(const Poset& p) {
    auto [has_below, has_above] = below_above(p);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.size(); ++v) {
        if (!has_above[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> isolated_elements(const Poset& p) {
    auto [has_below, has_above] = below_above(p);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < p.size(); ++v) {
        if (!has_below[static_cast<std::size_t>(v)] && !has_above[static_cast<std::size_t>(v)]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> extremal_elements(const TernaryStructure& s) {
    std::vector<bool> middle(static_cast<std::size_t>(s.size()), false);
    for (const Triple& t : s.triples()) middle[static_cast<std::size_t>(t.y)] = true;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < s.size(); ++v) {
        if (!middle[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

namespace {

bool on_chain_of_three(const Poset& p, Vertex x, Vertex y) {
    for (Vertex z = 0; z < p.size(); ++z) {
        if (p.less(z, x) || (p.less(x, z) && p.less(z, y)) || p.less(y, z)) return true;
    }
    return false;
}

}  // namespace

bool is_b_minimal(const Poset& p) {
    for (const Pair& q : p.pairs()) {
        if (!on_chain_of_three(p, q.a, q.b)) return false;
    }
    return true;
}

Poset minimize(const Poset& p) {
    auto [has_below, has_above] = below_above(p);
    std::vector<Pair> kept;
    for (const Pair& q : p.pairs()) {
        bool min_to_max = !has_below[static_cast<std::size_t>(q.a)] &&
                          !has_above[static_cast<std::size_t>(q.b)];
        if (min_to_max) {
            bool between = false;
            for (Vertex z = 0; z < p.size() && !between; ++z) {
                between = p.less(q.a, z) && p.less(z, q.b);
            }
            if (!between) continue;
        }
        kept.push_back(q);
    }
    return Poset(p.size(), std::move(kept));
}

Cut cut_of(const Poset& p) {
    if (p.size() == 0) throw Error("empty poset has no cut");
    if (auto iso = isolated_elements(p); !iso.empty()) {
        throw HasIsolatedElement("element " + std::to_string(iso.front()) +
                                 " is comparable to nothing, no cut exists");
    }
    std::vector<Vertex> antichain;
    for (Vertex v = 0; v < p.size(); ++v) {
        bool free = true;
        for (Vertex a : antichain) {
            if (p.comparable(a, v)) {
                free = false;
                break;
            }
        }
        if (free) antichain.push_back(v);
    }
    auto [has_below, has_above] = below_above(p);
    Cut cut;
    for (Vertex x = 0; x < p.size(); ++x) {
        bool in_upper = false;
        if (has_below[static_cast<std::size_t>(x)]) {
            for (Vertex a : antichain) {
                if (a == x || p.less(a, x)) {
                    in_upper = true;
                    break;
                }
            }
        }
        (in_upper ? cut.upper : cut.lower).push_back(x);
    }
    return cut;
}

std::vector<Pair> order_from_cut(const TernaryStructure& s, std::span<const Vertex> lower) {
    std::vector<bool> in_lower(static_cast<std::size_t>(s.size()), false);
    for (Vertex v : lower) {
        if (v < 0 || v >= s.size()) throw std::invalid_argument("lower set outside universe");
        in_lower[static_cast<std::size_t>(v)] = true;
    }
    auto low = [&in_lower](Vertex v) { return in_lower[static_cast<std::size_t>(v)]; };
    std::set<Pair> rel;
    for (const Triple& t : s.triples()) {
        // (i) with t read as B(x,y,z), B(x,z,y) and B(z,x,y).
        if (low(t.x) && !low(t.y)) rel.insert({t.x, t.y});
        if (low(t.x) && !low(t.z)) rel.insert({t.x, t.z});
        if (low(t.y) && !low(t.z)) rel.insert({t.y, t.z});
        // (ii) with t read as B(x,y,w).
        if (low(t.x) && low(t.y) && !low(t.z)) rel.insert({t.x, t.y});
        // (iii) with t read as B(w,x,y).
        if (!low(t.y) && !low(t.z) && low(t.x)) rel.insert({t.y, t.z});
    }
    return {rel.begin(), rel.end()};
}

}  // namespace betpo
