#pragma once

#include <span>
#include <vector>

#include "betpo/core.hpp"

namespace betpo {

// {(x,y,z) : x<y<z} closed under reversal of triples.
TernaryStructure betweenness_of(const Poset& p);

std::vector<Vertex> min_elements(const Poset& p);
std::vector<Vertex> max_elements(const Poset& p);
// Elements comparable to nothing, i.e. both minimal and maximal.
std::vector<Vertex> isolated_elements(const Poset& p);

// Elements that are not the middle of any triple.
std::vector<Vertex> extremal_elements(const TernaryStructure& s);

// True iff every comparable pair lies on a chain of size at least 3,
// equivalently the Gaifman graph of the betweenness equals the
// comparability graph.
bool is_b_minimal(const Poset& p);

// Drops every pair x<y with x minimal, y maximal and nothing strictly
// between. The result is the unique smallest sub-order with the same
// betweenness; it is B-minimal and idempotent under this map.
Poset minimize(const Poset& p);

// Partition (L,U) with L downwards closed, U upwards closed, both nonempty,
// such that every maximal chain meets both.
struct Cut {
    std::vector<Vertex> lower;
    std::vector<Vertex> upper;
};

// Builds a cut from the greedy maximal antichain A over the vertex order
// 0..n-1: U = {x not minimal : y <= x for some y in A}, L = V-U.
// Throws HasIsolatedElement if some element is comparable to nothing, and
// Error on the empty poset; neither has a cut.
Cut cut_of(const Poset& p);

// The binary relation {(x,y)} defined from a lower set L (U = V-L) by:
//   (i)   x in L, y in U, and B(x,y,z), B(x,z,y) or B(z,x,y) for some z,
//   (ii)  x,y in L and B(x,y,w) for some w in U,
//   (iii) x,y in U and B(w,x,y) for some w in L.
// Returned raw and unvalidated: on arbitrary structures it may fail to be
// an order, and clauses (ii)/(iii) can even emit reflexive pairs.
std::vector<Pair> order_from_cut(const TernaryStructure& s, std::span<const Vertex> lower);

}  // namespace betpo
