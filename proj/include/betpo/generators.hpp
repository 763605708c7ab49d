#pragma once

#include <cstdint>

#include "betpo/core.hpp"

namespace betpo {

// Named structures and posets used throughout the tests and the CLI.

// Universe {0,...,2k-1} where even vertices play the role a_1..a_k and odd
// vertices b_1..b_k: triples (a_i, b_i, a_{i+1 mod k}) and their reversals.
// Is a poset betweenness iff k is even. Throws ParameterTooSmall for k < 2.
TernaryStructure b_cycle(int k);

// The zigzag order a_1 < b_1 < a_2 > b_2 > a_3 < ... > a_1 on the same
// vertex naming, whose betweenness is b_cycle(k). Requires even k >= 2;
// throws OddParameter or ParameterTooSmall.
Poset fence_poset(int k);

// The linear order 0 < 1 < ... < n-1.
Poset chain(int n);

// Six elements, generated by 0<1<2<3, 4<2, 4<5, 1<5. Comparable pair (4,5)
// lies on no chain of size 3, so this poset is not B-minimal.
Poset example3();

// Six elements, generated by 0<1<2, 3<4<5, 3<2. Connected comparability
// graph whose betweenness has two Gaifman components, hence four posets
// share this betweenness and none of them is reconstructible from it.
Poset example5();

// Transitive closure of a random DAG: each generator pair i < j (as
// integers) is kept independently with probability p. Identical seeds give
// identical posets on every platform.
Poset random_poset(int n, double p, std::uint64_t seed);

}  // namespace betpo
