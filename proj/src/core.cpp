#include "betpo/core.hpp"

#include <algorithm>
#include <map>

namespace betpo {

namespace {

void require_in_range(int n, Vertex v) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe 0.." +
                                    std::to_string(n - 1));
    }
}

}  // namespace

TernaryStructure::TernaryStructure(int n, std::vector<Triple> triples)
    : n_(n), triples_(std::move(triples)) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    for (const Triple& t : triples_) {
        require_in_range(n_, t.x);
        require_in_range(n_, t.y);
        require_in_range(n_, t.z);
    }
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool TernaryStructure::contains(Vertex x, Vertex y, Vertex z) const {
    return std::binary_search(triples_.begin(), triples_.end(), Triple{x, y, z});
}

Poset::Poset(int n, std::vector<Pair> closed_pairs) : n_(n), pairs_(std::move(closed_pairs)) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    for (const Pair& p : pairs_) {
        require_in_range(n_, p.a);
        require_in_range(n_, p.b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

    lt_.assign(static_cast<std::size_t>(n_) * n_, false);
    for (const Pair& p : pairs_) {
        if (p.a == p.b) throw std::invalid_argument("reflexive pair in strict order");
        lt_[static_cast<std::size_t>(p.a) * n_ + p.b] = true;
    }
    for (const Pair& p : pairs_) {
        if (less(p.b, p.a)) throw std::invalid_argument("antisymmetry violated");
    }
    for (const Pair& p : pairs_) {
        for (Vertex w = 0; w < n_; ++w) {
            if (less(p.b, w) && !less(p.a, w)) {
                throw std::invalid_argument("relation is not transitively closed");
            }
        }
    }
}

Poset poset_from_pairs(int n, std::span<const Pair> pairs) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    std::vector<bool> lt(static_cast<std::size_t>(n) * n, false);
    auto at = [&lt, n](Vertex i, Vertex j) -> std::vector<bool>::reference {
        return lt[static_cast<std::size_t>(i) * n + j];
    };
    for (const Pair& p : pairs) {
        require_in_range(n, p.a);
        require_in_range(n, p.b);
        if (p.a != p.b) at(p.a, p.b) = true;
    }
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex i = 0; i < n; ++i) {
            if (!at(i, k)) continue;
            for (Vertex j = 0; j < n; ++j) {
                if (at(k, j)) at(i, j) = true;
            }
        }
    }
    std::vector<Pair> closed;
    for (Vertex i = 0; i < n; ++i) {
        if (at(i, i)) {
            throw CycleDetected("generators force " + std::to_string(i) + " < " +
                                std::to_string(i));
        }
        for (Vertex j = 0; j < n; ++j) {
            if (at(i, j)) closed.push_back({i, j});
        }
    }
    return Poset(n, std::move(closed));
}

Poset reverse(const Poset& p) {
    std::vector<Pair> flipped;
    flipped.reserve(p.pairs().size());
    for (const Pair& q : p.pairs()) flipped.push_back({q.b, q.a});
    return Poset(p.size(), std::move(flipped));
}

namespace {

// Triples whose middle element is m, in sorted triple order.
std::map<Vertex, std::vector<const Triple*>> index_by_middle(const TernaryStructure& s) {
    std::map<Vertex, std::vector<const Triple*>> by_mid;
    for (const Triple& t : s.triples()) by_mid[t.y].push_back(&t);
    return by_mid;
}

// Sorted range of triples with first element x (and second element y if
// given), exploiting the lexicographic order of triples().
std::span<const Triple> triples_starting(const TernaryStructure& s, Vertex x) {
    const auto& ts = s.triples();
    auto lo = std::lower_bound(ts.begin(), ts.end(), Triple{x, 0, 0});
    auto hi = std::lower_bound(ts.begin(), ts.end(), Triple{x + 1, 0, 0});
    return {lo, hi};
}

std::span<const Triple> triples_starting(const TernaryStructure& s, Vertex x, Vertex y) {
    const auto& ts = s.triples();
    auto lo = std::lower_bound(ts.begin(), ts.end(), Triple{x, y, 0});
    auto hi = std::lower_bound(ts.begin(), ts.end(), Triple{x, y + 1, 0});
    return {lo, hi};
}

}  // namespace

AxiomReport check_axioms(const TernaryStructure& s) {
    AxiomReport r;
    const auto& ts = s.triples();
    const int n = s.size();

    for (const Triple& t : ts) {
        if (t.x == t.y || t.y == t.z || t.x == t.z) {
            r.b1 = {false, {t.x, t.y, t.z}};
            break;
        }
    }
    for (const Triple& t : ts) {
        if (!s.contains(t.z, t.y, t.x)) {
            r.b2 = {false, {t.x, t.y, t.z}};
            break;
        }
    }
    for (const Triple& t : ts) {
        if (s.contains(t.x, t.z, t.y)) {
            r.b3 = {false, {t.x, t.y, t.z}};
            break;
        }
    }

    // B4: B(x,y,z) and B(y,z,u) imply B(x,y,u) and B(x,z,u).
    for (const Triple& t : ts) {
        if (!r.b4.holds) break;
        for (const Triple& u : triples_starting(s, t.y, t.z)) {
            if (!s.contains(t.x, t.y, u.z) || !s.contains(t.x, t.z, u.z)) {
                r.b4 = {false, {t.x, t.y, t.z, u.z}};
                break;
            }
        }
    }

    // B5: B(x,y,z) and B(x,u,y) imply B(x,u,z) and B(u,y,z).
    for (const Triple& t : ts) {
        if (!r.b5.holds) break;
        for (const Triple& u : triples_starting(s, t.x)) {
            if (u.z != t.y) continue;
            if (!s.contains(t.x, u.y, t.z) || !s.contains(u.y, t.y, t.z)) {
                r.b5 = {false, {t.x, t.y, t.z, u.y}};
                break;
            }
        }
    }

    // B6: any three distinct elements lie on a common chain. Holds for
    // betweenness of linear orders, fails for most posets.
    for (Vertex x = 0; x < n && r.b6.holds; ++x) {
        for (Vertex y = 0; y < n && r.b6.holds; ++y) {
            if (y == x) continue;
            for (Vertex z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (!chain3_related(s, x, y, z)) {
                    r.b6 = {false, {x, y, z}};
                    break;
                }
            }
        }
    }

    const auto by_mid = index_by_middle(s);

    // X: B(x,y,z) and B(u,y,v) imply B(x,y,u) or B(x,y,v).
    for (const Triple& t : ts) {
        if (!r.x.holds) break;
        auto it = by_mid.find(t.y);
        if (it == by_mid.end()) continue;
        for (const Triple* u : it->second) {
            if (!s.contains(t.x, t.y, u->x) && !s.contains(t.x, t.y, u->z)) {
                r.x = {false, {t.x, t.y, t.z, u->x, u->z}};
                break;
            }
        }
    }

    // F: B(x,y,z) and B(y,u,v) imply B(x,y,u) or B(z,y,u).
    for (const Triple& t : ts) {
        if (!r.f.holds) break;
        for (const Triple& u : triples_starting(s, t.y)) {
            if (!s.contains(t.x, t.y, u.y) && !s.contains(t.z, t.y, u.y)) {
                r.f = {false, {t.x, t.y, t.z, u.y, u.z}};
                break;
            }
        }
    }

    return r;
}

std::optional<B123Violation> first_b123_violation(const TernaryStructure& s) {
    for (const Triple& t : s.triples()) {
        if (t.x == t.y || t.y == t.z || t.x == t.z) return B123Violation{1, {t.x, t.y, t.z}};
    }
    for (const Triple& t : s.triples()) {
        if (!s.contains(t.z, t.y, t.x)) return B123Violation{2, {t.x, t.y, t.z}};
    }
    for (const Triple& t : s.triples()) {
        if (s.contains(t.x, t.z, t.y)) return B123Violation{3, {t.x, t.y, t.z}};
    }
    return std::nullopt;
}

bool chain3_related(const TernaryStructure& s, Vertex x, Vertex y, Vertex z) {
    return s.contains(x, y, z) || s.contains(x, z, y) || s.contains(y, x, z);
}

TernaryStructure induced_substructure(const TernaryStructure& s, std::span<const Vertex> xs) {
    std::vector<Vertex> to_local(static_cast<std::size_t>(s.size()), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        require_in_range(s.size(), xs[i]);
        if (to_local[static_cast<std::size_t>(xs[i])] != -1) {
            throw std::invalid_argument("duplicate vertex in induced substructure");
        }
        to_local[static_cast<std::size_t>(xs[i])] = static_cast<Vertex>(i);
    }
    std::vector<Triple> kept;
    for (const Triple& t : s.triples()) {
        Vertex x = to_local[static_cast<std::size_t>(t.x)];
        Vertex y = to_local[static_cast<std::size_t>(t.y)];
        Vertex z = to_local[static_cast<std::size_t>(t.z)];
        if (x != -1 && y != -1 && z != -1) kept.push_back({x, y, z});
    }
    return TernaryStructure(static_cast<int>(xs.size()), std::move(kept));
}

}  // namespace betpo
