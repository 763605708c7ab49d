#include "betpo/generators.hpp"

#include <random>
#include <vector>

namespace betpo {

TernaryStructure b_cycle(int k) {
    if (k < 2) throw ParameterTooSmall("cycle needs at least 2 segments, got " + std::to_string(k));
    std::vector<Triple> triples;
    triples.reserve(static_cast<std::size_t>(k) * 2);
    for (int i = 0; i < k; ++i) {
        Vertex a = 2 * i;
        Vertex b = 2 * i + 1;
        Vertex a_next = 2 * ((i + 1) % k);
        triples.push_back({a, b, a_next});
        triples.push_back({a_next, b, a});
    }
    return TernaryStructure(2 * k, std::move(triples));
}

Poset fence_poset(int k) {
    if (k < 2) throw ParameterTooSmall("fence needs at least 2 segments, got " + std::to_string(k));
    if (k % 2 != 0) throw OddParameter("fence needs an even number of segments, got " +
                                       std::to_string(k));
    std::vector<Pair> gen;
    for (int i = 0; i < k; ++i) {
        Vertex a = 2 * i;
        Vertex b = 2 * i + 1;
        Vertex a_next = 2 * ((i + 1) % k);
        if (i % 2 == 0) {
            gen.push_back({a, b});
            gen.push_back({b, a_next});
        } else {
            gen.push_back({a_next, b});
            gen.push_back({b, a});
        }
    }
    return poset_from_pairs(2 * k, gen);
}

Poset chain(int n) {
    std::vector<Pair> gen;
    for (Vertex v = 0; v + 1 < n; ++v) gen.push_back({v, v + 1});
    return poset_from_pairs(n, gen);
}

Poset example3() {
    const std::vector<Pair> gen{{0, 1}, {1, 2}, {2, 3}, {4, 2}, {4, 5}, {1, 5}};
    return poset_from_pairs(6, gen);
}

Poset example5() {
    const std::vector<Pair> gen{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 2}};
    return poset_from_pairs(6, gen);
}

Poset random_poset(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability outside [0,1]");
    std::mt19937_64 rng(seed);
    // Top 53 bits as a uniform double in [0,1); avoids the distribution
    // classes, whose output differs across standard libraries.
    auto coin = [&rng, p] { return (rng() >> 11) * 0x1.0p-53 < p; };
    std::vector<Pair> gen;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin()) gen.push_back({i, j});
        }
    }
    return poset_from_pairs(n, gen);
}

}  // namespace betpo
