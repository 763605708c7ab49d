#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "betpo/core.hpp"

namespace betpo {

// Exhaustive ground-truth generators. Everything here is exponential in n
// and guarded by hard caps; these functions exist so that the polynomial
// algorithms can be checked against raw enumeration.

// Calls fn once for every labeled poset on 0..n-1 (every strict partial
// order, as its transitive closure). Enumeration order is deterministic:
// depth-first over the lexicographic list of ordered pairs, excluding a
// pair before including it. Throws UniverseTooLarge for n > 6.
void for_each_poset(int n, const std::function<void(const Poset&)>& fn);

// The same posets collected in enumeration order.
// Counts for n = 0..6: 1, 1, 3, 19, 219, 4231, 130023.
std::vector<Poset> enumerate_posets(int n);

// Every poset whose betweenness structure equals s, by filtering the full
// enumeration. Throws UniverseTooLarge for s.size() > 6.
std::vector<Poset> posets_with_betweenness(const TernaryStructure& s);

// Calls fn once for every structure on 0..n-1 whose triple set is closed
// under reversal and contains no repeated-vertex triple: the subsets of
// the orbit pairs {(x,y,z),(z,y,x)} with x < z and y distinct from both.
// Ascending bitmask order over the lexicographic orbit list. Throws
// UniverseTooLarge for n > 4.
void for_each_b2_closed_structure(int n, const std::function<void(const TernaryStructure&)>& fn);

struct ScanReport {
    int n = 0;
    std::uint64_t scanned = 0;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    // First structure on which the polynomial decision and the brute-force
    // enumeration disagree; empty when the two always match.
    std::optional<TernaryStructure> disagreement;

    std::string summary() const;
};

// Runs recognize() on every structure enumerated by
// for_each_b2_closed_structure(n) and cross-checks each verdict against
// ground truth: whether any enumerated poset realizes the structure as its
// betweenness. Accepted witnesses must also reproduce the input structure.
ScanReport exhaustive_structure_scan(int n);

}  // namespace betpo
