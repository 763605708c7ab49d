#include "betpo/oracle.hpp"

#include <set>
#include <sstream>

#include "betpo/recognize.hpp"
#include "betpo/transform.hpp"

namespace betpo {

namespace {

constexpr int kMaxEnumerationUniverse = 6;
constexpr int kMaxScanUniverse = 4;

// Backtracking enumeration of all strict partial orders. Pairs are decided
// one by one; a decision is pruned as soon as it contradicts antisymmetry
// or transitivity relative to the pairs decided so far, so every leaf is a
// strict order and none is visited twice.
class PosetEnumerator {
  public:
    PosetEnumerator(int n, const std::function<void(const Poset&)>& fn) : n_(n), fn_(fn) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = 0; b < n; ++b) {
                if (a != b) pairs_.push_back({a, b});
            }
        }
        state_.assign(static_cast<std::size_t>(n) * n, Undecided);
    }

    void run() { descend(0); }

  private:
    enum State : signed char { Out = 0, In = 1, Undecided = -1 };

    State at(Vertex i, Vertex j) const { return state_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(Vertex i, Vertex j, State s) { state_[static_cast<std::size_t>(i) * n_ + j] = s; }

    bool can_exclude(const Pair& q) const {
        // x < w < y already decided forces x < y.
        for (Vertex w = 0; w < n_; ++w) {
            if (at(q.a, w) == In && at(w, q.b) == In) return false;
        }
        return true;
    }

    bool can_include(const Pair& q) const {
        if (at(q.b, q.a) == In) return false;
        for (Vertex w = 0; w < n_; ++w) {
            // w < x and x < y force w < y, dead if w < y is already out.
            if (at(w, q.a) == In && at(w, q.b) == Out) return false;
            // x < y and y < w force x < w, dead if x < w is already out.
            if (at(q.b, w) == In && at(q.a, w) == Out) return false;
        }
        return true;
    }

    void descend(std::size_t k) {
        if (k == pairs_.size()) {
            std::vector<Pair> included;
            for (const Pair& q : pairs_) {
                if (at(q.a, q.b) == In) included.push_back(q);
            }
            fn_(Poset(n_, std::move(included)));
            return;
        }
        const Pair& q = pairs_[k];
        if (can_exclude(q)) {
            set(q.a, q.b, Out);
            descend(k + 1);
        }
        if (can_include(q)) {
            set(q.a, q.b, In);
            descend(k + 1);
        }
        set(q.a, q.b, Undecided);
    }

    int n_;
    const std::function<void(const Poset&)>& fn_;
    std::vector<Pair> pairs_;
    std::vector<State> state_;
};

}  // namespace

void for_each_poset(int n, const std::function<void(const Poset&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    if (n > kMaxEnumerationUniverse) {
        throw UniverseTooLarge("poset enumeration is capped at " +
                               std::to_string(kMaxEnumerationUniverse) + " elements, got " +
                               std::to_string(n));
    }
    PosetEnumerator(n, fn).run();
}

std::vector<Poset> enumerate_posets(int n) {
    std::vector<Poset> out;
    for_each_poset(n, [&out](const Poset& p) { out.push_back(p); });
    return out;
}

std::vector<Poset> posets_with_betweenness(const TernaryStructure& s) {
    std::vector<Poset> out;
    for_each_poset(s.size(), [&](const Poset& p) {
        if (betweenness_of(p) == s) out.push_back(p);
    });
    return out;
}

void for_each_b2_closed_structure(int n,
                                  const std::function<void(const TernaryStructure&)>& fn) {
    if (n < 0) throw std::invalid_argument("negative universe size");
    if (n > kMaxScanUniverse) {
        throw UniverseTooLarge("structure scan is capped at " + std::to_string(kMaxScanUniverse) +
                               " elements, got " + std::to_string(n));
    }
    std::vector<Triple> orbit;  // representative (x,y,z) with x < z, y distinct
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            for (Vertex z = x + 1; z < n; ++z) {
                if (y != x && y != z) orbit.push_back({x, y, z});
            }
        }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbit.size()); ++mask) {
        std::vector<Triple> triples;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (mask >> i & 1) {
                triples.push_back(orbit[i]);
                triples.push_back({orbit[i].z, orbit[i].y, orbit[i].x});
            }
        }
        fn(TernaryStructure(n, std::move(triples)));
    }
}

std::string ScanReport::summary() const {
    std::ostringstream os;
    os << "n=" << n << ": " << scanned << " structures, " << accepted << " accepted, "
       << rejected << " rejected, "
       << (disagreement ? "DISAGREEMENT FOUND" : "decision and enumeration agree");
    return os.str();
}

ScanReport exhaustive_structure_scan(int n) {
    // All betweenness structures realizable on n vertices, computed once.
    std::set<std::vector<Triple>> realizable;
    for_each_poset(n, [&realizable](const Poset& p) {
        realizable.insert(betweenness_of(p).triples());
    });
    ScanReport report;
    report.n = n;
    for_each_b2_closed_structure(n, [&report, &realizable](const TernaryStructure& s) {
        ++report.scanned;
        RecognitionOutcome out = recognize(s);
        bool algo = out.accepted();
        (algo ? report.accepted : report.rejected) += 1;
        if (algo && !(betweenness_of(out.witness()) == s)) algo = false;  // unsound witness
        bool oracle = realizable.count(s.triples()) > 0;
        if (algo != oracle && !report.disagreement) report.disagreement = s;
    });
    return report;
}

}  // namespace betpo
