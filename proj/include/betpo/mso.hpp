#pragma once

#include <optional>
#include <span>
#include <vector>

#include "betpo/core.hpp"

namespace betpo {

// Brute-force evaluation of the defining second-order sentence: a structure
// is a poset betweenness iff on every Gaifman component that carries a
// triple there exists a lower set L passing the first-order check below.
// Set quantification is exhaustive, hence the component size cap.

inline constexpr int kDefaultMaxComponent = 16;

// First-order check for a candidate lower set on a connected structure:
// (a) the three local axioms hold and every element is in some triple,
// (b) L and its complement are both nonempty,
// (c) the relation derived from L via order_from_cut is a strict partial
//     order and is B-minimal,
// (d) the betweenness of that order is exactly s.
bool psi_check(const TernaryStructure& s, std::span<const Vertex> lower);

// Smallest lower set satisfying psi_check, enumerating subsets of the
// universe by ascending bitmask (bit i is vertex i), or nullopt. Treats s
// as a single component; throws ComponentTooLarge if s.size() exceeds
// max_component.
std::optional<std::vector<Vertex>> theta_check_component(const TernaryStructure& s,
                                                         int max_component = kDefaultMaxComponent);

struct MsoVerdict {
    bool satisfied = false;
    // One witness lower set per checked component, in component order and
    // original vertex ids; filled only when satisfied.
    std::vector<std::vector<Vertex>> witness_lower;
    // The component no lower set works for; filled only when unsatisfied.
    std::vector<Vertex> failing_component;
};

// Evaluates the sentence componentwise. Vertices lying in no triple are
// genuinely isolated and impose nothing; every other Gaifman component must
// satisfy the component check. Agrees with recognize() on every structure.
MsoVerdict theta_check(const TernaryStructure& s, int max_component = kDefaultMaxComponent);

}  // namespace betpo
