#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "betpo/core.hpp"

namespace betpo {

// Undirected simple graph on 0..n-1. Edges are stored sorted with a < b.
// tag() optionally marks a distinguished vertex subset (used for the graph
// on extremal elements, whose non-vertices still occupy index space).
class SimpleGraph {
  public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<Pair> edges);
    SimpleGraph(int n, std::vector<Pair> edges, std::vector<Vertex> tag);

    int size() const { return n_; }
    const std::vector<Pair>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    bool has_edge(Vertex u, Vertex v) const;

    bool tagged() const { return tag_.has_value(); }
    const std::vector<Vertex>& tag() const { return *tag_; }

  private:
    int n_ = 0;
    std::vector<Pair> edges_;  // sorted, unique, a < b
    std::vector<std::vector<Vertex>> adj_;
    std::optional<std::vector<Vertex>> tag_;  // sorted
};

// Gaifman graph: u-v iff u != v occur together in some triple.
SimpleGraph gaifman(const TernaryStructure& s);

// Comparability graph: u-v iff u < v or v < u.
SimpleGraph comparability(const Poset& p);

// Graph on the extremal elements of s (those never in middle position);
// u-v iff B(u,w,v) for some w. The extremal elements are returned as the
// tag; all other vertices are present but meant to stay isolated.
// Degenerate triples may produce u == v, such self-loops are skipped.
SimpleGraph ext_graph(const TernaryStructure& s);

// Vertex sets of the connected components, a partition of 0..n-1. Each
// component is sorted and components are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);

// Two-coloring if one exists. Within each component the side of its
// smallest vertex goes to the first block, so the result is deterministic
// and unique up to swap on connected graphs. For a tagged graph only
// tagged vertices appear in the blocks.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(
    const SimpleGraph& g);

}  // namespace betpo
