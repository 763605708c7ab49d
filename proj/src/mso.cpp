#include "betpo/mso.hpp"

#include <algorithm>

#include "betpo/graphs.hpp"
#include "betpo/transform.hpp"

namespace betpo {

namespace {

bool strict_order_pairs(int n, const std::vector<Pair>& rel, std::vector<bool>& lt) {
    lt.assign(static_cast<std::size_t>(n) * n, false);
    for (const Pair& q : rel) {
        if (q.a == q.b) return false;
        lt[static_cast<std::size_t>(q.a) * n + q.b] = true;
    }
    auto at = [&lt, n](Vertex i, Vertex j) { return lt[static_cast<std::size_t>(i) * n + j]; };
    for (const Pair& q : rel) {
        if (at(q.b, q.a)) return false;
        for (Vertex w = 0; w < n; ++w) {
            if (at(q.b, w) && !at(q.a, w)) return false;
        }
    }
    return true;
}

}  // namespace

bool psi_check(const TernaryStructure& s, std::span<const Vertex> lower) {
    const int n = s.size();

    // (a)
    if (first_b123_violation(s)) return false;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    for (const Triple& t : s.triples()) {
        covered[static_cast<std::size_t>(t.x)] = true;
        covered[static_cast<std::size_t>(t.y)] = true;
        covered[static_cast<std::size_t>(t.z)] = true;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return false;

    // (b)
    std::vector<bool> in_lower(static_cast<std::size_t>(n), false);
    for (Vertex v : lower) {
        if (v < 0 || v >= n) throw std::invalid_argument("lower set outside universe");
        in_lower[static_cast<std::size_t>(v)] = true;
    }
    const auto members = std::count(in_lower.begin(), in_lower.end(), true);
    if (members == 0 || members == n) return false;

    // (c)
    std::vector<Pair> rel = order_from_cut(s, lower);
    std::vector<bool> lt;
    if (!strict_order_pairs(n, rel, lt)) return false;
    Poset p(n, std::move(rel));
    if (!is_b_minimal(p)) return false;

    // (d)
    return betweenness_of(p) == s;
}

std::optional<std::vector<Vertex>> theta_check_component(const TernaryStructure& s,
                                                         int max_component) {
    if (s.size() > max_component) {
        throw ComponentTooLarge("component of size " + std::to_string(s.size()) +
                                " exceeds the exhaustive quantification cap " +
                                std::to_string(max_component));
    }
    const int n = s.size();
    std::vector<Vertex> lower;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        lower.clear();
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) lower.push_back(v);
        }
        if (psi_check(s, lower)) return lower;
    }
    return std::nullopt;
}

MsoVerdict theta_check(const TernaryStructure& s, int max_component) {
    std::vector<bool> in_triple(static_cast<std::size_t>(s.size()), false);
    for (const Triple& t : s.triples()) {
        in_triple[static_cast<std::size_t>(t.x)] = true;
        in_triple[static_cast<std::size_t>(t.y)] = true;
        in_triple[static_cast<std::size_t>(t.z)] = true;
    }
    MsoVerdict verdict;
    for (const std::vector<Vertex>& comp : connected_components(gaifman(s))) {
        if (comp.size() == 1 && !in_triple[static_cast<std::size_t>(comp.front())]) continue;
        TernaryStructure sub = induced_substructure(s, comp);
        auto lower = theta_check_component(sub, max_component);
        if (!lower) {
            verdict.witness_lower.clear();
            verdict.failing_component = comp;
            return verdict;
        }
        std::vector<Vertex> global;
        global.reserve(lower->size());
        for (Vertex v : *lower) global.push_back(comp[static_cast<std::size_t>(v)]);
        verdict.witness_lower.push_back(std::move(global));
    }
    verdict.satisfied = true;
    return verdict;
}

}  // namespace betpo
