#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace betpo {

using Vertex = int;

// Ordered triple (x, y, z): "y lies between x and z".
struct Triple {
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Ordered pair (a, b): "a < b" when used as an order relation,
// an undirected edge when used by SimpleGraph (stored with a < b).
struct Pair {
    Vertex a = 0;
    Vertex b = 0;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error {
    using Error::Error;
};
struct HasIsolatedElement : Error {
    using Error::Error;
};
struct UniverseTooLarge : Error {
    using Error::Error;
};
struct ParameterTooSmall : Error {
    using Error::Error;
};
struct OddParameter : Error {
    using Error::Error;
};
struct ComponentTooLarge : Error {
    using Error::Error;
};
struct NotRecognized : Error {
    using Error::Error;
};

// A finite ternary structure: universe 0..n-1 and a set of ordered triples.
// No axiom is enforced at construction; duplicates are dropped, triples are
// kept sorted so equal structures compare equal.
class TernaryStructure {
  public:
    TernaryStructure() = default;
    // Throws std::invalid_argument when n < 0 or a vertex falls outside
    // 0..n-1.
    TernaryStructure(int n, std::vector<Triple> triples);

    int size() const { return n_; }
    const std::vector<Triple>& triples() const { return triples_; }
    bool contains(Vertex x, Vertex y, Vertex z) const;
    bool contains(const Triple& t) const { return contains(t.x, t.y, t.z); }

    friend bool operator==(const TernaryStructure& lhs, const TernaryStructure& rhs) {
        return lhs.n_ == rhs.n_ && lhs.triples_ == rhs.triples_;
    }

  private:
    int n_ = 0;
    std::vector<Triple> triples_;  // sorted, unique
};

// A finite poset stored as its full strict order: irreflexive, antisymmetric
// and transitively closed. The constructor validates all three invariants.
class Poset {
  public:
    Poset() = default;
    // Antichain on 0..n-1.
    explicit Poset(int n) : Poset(n, {}) {}
    Poset(int n, std::vector<Pair> closed_pairs);

    int size() const { return n_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    bool less(Vertex x, Vertex y) const { return lt_[static_cast<std::size_t>(x) * n_ + y]; }
    bool comparable(Vertex x, Vertex y) const { return less(x, y) || less(y, x); }

    friend bool operator==(const Poset& lhs, const Poset& rhs) {
        return lhs.n_ == rhs.n_ && lhs.pairs_ == rhs.pairs_;
    }

  private:
    int n_ = 0;
    std::vector<Pair> pairs_;  // sorted, unique
    std::vector<bool> lt_;     // n*n matrix for O(1) queries
};

// Transitive closure of the given generator pairs as a strict order.
// Reflexive input pairs are ignored. Throws CycleDetected if the closure
// would force x < x.
Poset poset_from_pairs(int n, std::span<const Pair> pairs);

// The poset with every pair flipped.
Poset reverse(const Poset& p);

struct AxiomCheck {
    bool holds = true;
    std::vector<Vertex> witness;  // violating tuple, empty iff holds
};

// One verdict per axiom. B6 holds for betweenness of linear orders only;
// it is reported alongside the rest but aggregated separately.
struct AxiomReport {
    AxiomCheck b1, b2, b3, b4, b5, b6, x, f;

    bool b1_to_b3() const { return b1.holds && b2.holds && b3.holds; }
    bool b1_to_b5() const { return b1_to_b3() && b4.holds && b5.holds; }
    // Everything a poset betweenness satisfies.
    bool poset_axioms() const { return b1_to_b5() && x.holds && f.holds; }
};

// Exhaustive evaluation of every axiom; failures come with a witness tuple
// in quantifier order. Diagnostic brute force, up to O(n^4) and beyond.
AxiomReport check_axioms(const TernaryStructure& s);

struct B123Violation {
    int axiom = 0;  // 1, 2 or 3
    std::vector<Vertex> witness;
};

// Fast path for the three local axioms, O(|triples| log |triples|).
std::optional<B123Violation> first_b123_violation(const TernaryStructure& s);

// True iff B(x,y,z) or B(x,z,y) or B(y,x,z): x, y, z lie on a common chain
// of size at least 3 when s is a poset betweenness.
bool chain3_related(const TernaryStructure& s, Vertex x, Vertex y, Vertex z);

// S[X]: the substructure induced by the sorted vertex set xs, re-indexed to
// 0..|xs|-1 in the order given. Keeps exactly the triples inside xs.
TernaryStructure induced_substructure(const TernaryStructure& s, std::span<const Vertex> xs);

}  // namespace betpo
