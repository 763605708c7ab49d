#include "betpo/graphs.hpp"

#include <algorithm>

namespace betpo {

namespace {

void normalize_edges(int n, std::vector<Pair>& edges) {
    for (Pair& e : edges) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
            throw std::invalid_argument("edge endpoint outside universe");
        }
        if (e.a == e.b) throw std::invalid_argument("self-loop in simple graph");
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

SimpleGraph::SimpleGraph(int n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    normalize_edges(n_, edges_);
    adj_.resize(static_cast<std::size_t>(n_));
    for (const Pair& e : edges_) {
        adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

SimpleGraph::SimpleGraph(int n, std::vector<Pair> edges, std::vector<Vertex> tag)
    : SimpleGraph(n, std::move(edges)) {
    std::sort(tag.begin(), tag.end());
    tag.erase(std::unique(tag.begin(), tag.end()), tag.end());
    for (Vertex v : tag) {
        if (v < 0 || v >= n_) throw std::invalid_argument("tagged vertex outside universe");
    }
    for (const Pair& e : edges_) {
        if (!std::binary_search(tag.begin(), tag.end(), e.a) ||
            !std::binary_search(tag.begin(), tag.end(), e.b)) {
            throw std::invalid_argument("edge endpoint outside tagged set");
        }
    }
    tag_ = std::move(tag);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Pair{u, v});
}

SimpleGraph gaifman(const TernaryStructure& s) {
    std::vector<Pair> edges;
    edges.reserve(s.triples().size() * 3);
    for (const Triple& t : s.triples()) {
        if (t.x != t.y) edges.push_back({t.x, t.y});
        if (t.y != t.z) edges.push_back({t.y, t.z});
        if (t.x != t.z) edges.push_back({t.x, t.z});
    }
    return SimpleGraph(s.size(), std::move(edges));
}

SimpleGraph comparability(const Poset& p) {
    std::vector<Pair> edges;
    for (const Pair& q : p.pairs()) edges.push_back(q);
    return SimpleGraph(p.size(), std::move(edges));
}

SimpleGraph ext_graph(const TernaryStructure& s) {
    std::vector<bool> middle(static_cast<std::size_t>(s.size()), false);
    for (const Triple& t : s.triples()) middle[static_cast<std::size_t>(t.y)] = true;
    std::vector<Vertex> extremal;
    for (Vertex v = 0; v < s.size(); ++v) {
        if (!middle[static_cast<std::size_t>(v)]) extremal.push_back(v);
    }
    std::vector<Pair> edges;
    for (const Triple& t : s.triples()) {
        if (t.x == t.z) continue;
        if (!middle[static_cast<std::size_t>(t.x)] && !middle[static_cast<std::size_t>(t.z)]) {
            edges.push_back({t.x, t.z});
        }
    }
    return SimpleGraph(s.size(), std::move(edges), std::move(extremal));
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < g.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<Vertex> comp;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(
    const SimpleGraph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < g.size(); ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<Vertex>, std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.tagged() && !std::binary_search(g.tag().begin(), g.tag().end(), v)) continue;
        (color[static_cast<std::size_t>(v)] == 0 ? blocks.first : blocks.second).push_back(v);
    }
    return blocks;
}

}  // namespace betpo
