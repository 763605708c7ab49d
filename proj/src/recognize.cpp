#include "betpo/recognize.hpp"

#include <algorithm>
#include <set>

#include "betpo/graphs.hpp"
#include "betpo/transform.hpp"

namespace betpo {

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::AxiomB1Fail: return "AxiomB1Fail";
        case RejectReason::AxiomB2Fail: return "AxiomB2Fail";
        case RejectReason::AxiomB3Fail: return "AxiomB3Fail";
        case RejectReason::ExtNotBipartite: return "ExtNotBipartite";
        case RejectReason::ExtDisconnected: return "ExtDisconnected";
        case RejectReason::RecoveredRelationNotOrder: return "RecoveredRelationNotOrder";
        case RejectReason::BetweennessMismatch: return "BetweennessMismatch";
    }
    return "?";
}

std::vector<Pair> recover_order_component(const TernaryStructure& s,
                                          std::span<const Vertex> intended_max) {
    std::vector<bool> in_max(static_cast<std::size_t>(s.size()), false);
    for (Vertex v : intended_max) {
        if (v < 0 || v >= s.size()) throw std::invalid_argument("vertex outside universe");
        in_max[static_cast<std::size_t>(v)] = true;
    }
    auto mx = [&in_max](Vertex v) { return in_max[static_cast<std::size_t>(v)]; };
    std::set<Pair> rel;
    auto put = [&rel](Vertex a, Vertex b) {
        if (a != b) rel.insert({a, b});
    };
    for (const Triple& t : s.triples()) {
        // B(x,y,z) with z intended maximal gives x < y.
        if (mx(t.z)) put(t.x, t.y);
        // B(w,x,y) with y intended maximal, w not, gives x < y.
        if (mx(t.z) && !mx(t.x)) put(t.y, t.z);
        // B(x,w,y) with y intended maximal, w not, gives x < y.
        if (mx(t.z) && !mx(t.y)) put(t.x, t.z);
    }
    return {rel.begin(), rel.end()};
}

namespace {

// Local pair list -> rejection witness for whatever breaks strict-order
// validation, or the validated poset.
struct OrderCheck {
    bool ok = true;
    std::vector<Vertex> witness;
};

OrderCheck validate_strict_order(int n, const std::vector<Pair>& rel) {
    std::vector<bool> lt(static_cast<std::size_t>(n) * n, false);
    for (const Pair& q : rel) {
        if (q.a == q.b) return {false, {q.a}};
        lt[static_cast<std::size_t>(q.a) * n + q.b] = true;
    }
    auto at = [&lt, n](Vertex i, Vertex j) { return lt[static_cast<std::size_t>(i) * n + j]; };
    for (const Pair& q : rel) {
        if (at(q.b, q.a)) return {false, {q.a, q.b}};
    }
    for (const Pair& q : rel) {
        for (Vertex w = 0; w < n; ++w) {
            if (at(q.b, w) && !at(q.a, w)) return {false, {q.a, q.b, w}};
        }
    }
    return {};
}

std::vector<Vertex> to_global(const std::vector<Vertex>& local, const std::vector<Vertex>& comp) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(comp[static_cast<std::size_t>(v)]);
    return out;
}

struct ComponentResult {
    bool ok = false;
    std::vector<Pair> pairs;  // local ids, the recovered B-minimal order
    Rejection rejection;      // set when !ok, already in global ids
};

ComponentResult solve_component(const TernaryStructure& sub, const std::vector<Vertex>& comp) {
    ComponentResult res;
    SimpleGraph ext = ext_graph(sub);
    auto blocks = bipartition(ext);
    if (!blocks) {
        res.rejection = {RejectReason::ExtNotBipartite, comp, {}};
        return res;
    }
    // Components of the extremal vertices; other vertices sit in their own
    // singleton components of ext and do not count.
    int ext_components = 0;
    for (const std::vector<Vertex>& c : connected_components(ext)) {
        for (Vertex v : c) {
            if (std::binary_search(ext.tag().begin(), ext.tag().end(), v)) {
                ++ext_components;
                break;
            }
        }
    }
    if (ext_components != 1) {
        res.rejection = {RejectReason::ExtDisconnected, comp, {}};
        return res;
    }
    const std::vector<Vertex>& intended_max = blocks->first;
    std::vector<Pair> rel = recover_order_component(sub, intended_max);
    OrderCheck chk = validate_strict_order(sub.size(), rel);
    if (!chk.ok) {
        res.rejection = {RejectReason::RecoveredRelationNotOrder, comp,
                         to_global(chk.witness, comp)};
        return res;
    }
    Poset q(sub.size(), rel);
    TernaryStructure bet = betweenness_of(q);
    if (!(bet == sub)) {
        // First triple on which the two structures differ.
        std::optional<Triple> bad;
        for (const Triple& t : bet.triples()) {
            if (!sub.contains(t)) {
                bad = t;
                break;
            }
        }
        for (const Triple& t : sub.triples()) {
            if (!bet.contains(t)) {
                if (!bad || t < *bad) bad = t;
                break;
            }
        }
        res.rejection = {RejectReason::BetweennessMismatch, comp,
                         to_global({bad->x, bad->y, bad->z}, comp)};
        return res;
    }
    res.ok = true;
    res.pairs = std::move(rel);
    return res;
}

}  // namespace

RecognitionOutcome recognize(const TernaryStructure& s) {
    if (auto v = first_b123_violation(s)) {
        RejectReason r = v->axiom == 1   ? RejectReason::AxiomB1Fail
                         : v->axiom == 2 ? RejectReason::AxiomB2Fail
                                         : RejectReason::AxiomB3Fail;
        return RecognitionOutcome(Rejection{r, {}, v->witness});
    }
    std::vector<Pair> all_pairs;
    for (const std::vector<Vertex>& comp : connected_components(gaifman(s))) {
        if (comp.size() == 1) continue;  // isolated, nothing to recover
        TernaryStructure sub = induced_substructure(s, comp);
        ComponentResult res = solve_component(sub, comp);
        if (!res.ok) return RecognitionOutcome(std::move(res.rejection));
        for (const Pair& q : res.pairs) {
            all_pairs.push_back({comp[static_cast<std::size_t>(q.a)],
                                 comp[static_cast<std::size_t>(q.b)]});
        }
    }
    return RecognitionOutcome(Poset(s.size(), std::move(all_pairs)));
}

std::vector<Poset> solutions_b_minimal(const TernaryStructure& s) {
    RecognitionOutcome out = recognize(s);
    if (!out.accepted()) {
        throw NotRecognized("structure is not the betweenness of any poset: " +
                            to_string(out.rejection().reason));
    }
    const Poset& base = out.witness();
    std::vector<std::vector<Pair>> comp_pairs;
    for (const std::vector<Vertex>& comp : connected_components(gaifman(s))) {
        if (comp.size() == 1) continue;
        std::vector<Pair> mine;
        for (const Pair& q : base.pairs()) {
            if (std::binary_search(comp.begin(), comp.end(), q.a)) mine.push_back(q);
        }
        comp_pairs.push_back(std::move(mine));
    }
    const std::size_t k = comp_pairs.size();
    std::vector<Poset> solutions;
    solutions.reserve(std::size_t{1} << k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < k; ++i) {
            for (const Pair& q : comp_pairs[i]) {
                pairs.push_back(mask >> i & 1 ? Pair{q.b, q.a} : q);
            }
        }
        solutions.emplace_back(s.size(), std::move(pairs));
    }
    return solutions;
}

bool is_b_reconstructible(const Poset& p) {
    if (!is_b_minimal(p)) return false;
    return connected_components(comparability(p)).size() <= 1;
}

}  // namespace betpo
