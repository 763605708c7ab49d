#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "betpo/core.hpp"

namespace betpo {

enum class RejectReason {
    AxiomB1Fail,
    AxiomB2Fail,
    AxiomB3Fail,
    ExtNotBipartite,
    ExtDisconnected,
    RecoveredRelationNotOrder,
    BetweennessMismatch,
};

std::string to_string(RejectReason r);

struct Rejection {
    RejectReason reason;
    // Gaifman component under scrutiny; empty for the global axiom checks.
    std::vector<Vertex> component;
    // Offending tuple if the reason pins one down, in original vertex ids.
    std::vector<Vertex> witness;
};

// Either a poset whose betweenness is the input, or a rejection.
class RecognitionOutcome {
  public:
    explicit RecognitionOutcome(Poset witness) : v_(std::move(witness)) {}
    explicit RecognitionOutcome(Rejection rejection) : v_(std::move(rejection)) {}

    bool accepted() const { return std::holds_alternative<Poset>(v_); }
    const Poset& witness() const { return std::get<Poset>(v_); }
    const Rejection& rejection() const { return std::get<Rejection>(v_); }

  private:
    std::variant<Poset, Rejection> v_;
};

// The relation recovered from a structure once a set of intended maximal
// elements is fixed: x < y iff x != y and either B(x,y,z) for some z in the
// set, or y is in the set and B(w,x,y) or B(x,w,y) holds for some w outside
// it. No order axiom is validated; the caller checks.
std::vector<Pair> recover_order_component(const TernaryStructure& s,
                                          std::span<const Vertex> intended_max);

// Decides whether s is the betweenness structure of some poset. On success
// the witness poset is B-minimal on every non-singleton Gaifman component.
// Runs in time polynomial in |V| + |B|.
RecognitionOutcome recognize(const TernaryStructure& s);

// All B-minimal posets whose betweenness is s, one per orientation choice
// of the non-singleton Gaifman components (2^k posets for k components,
// ordered by orientation mask, bit i flipping the i-th component). Throws
// NotRecognized if s is not a poset betweenness.
std::vector<Poset> solutions_b_minimal(const TernaryStructure& s);

// True iff p and its reversal are the only posets whose betweenness
// structure equals that of p; for finite posets this holds exactly when
// p is B-minimal and its comparability graph is connected.
bool is_b_reconstructible(const Poset& p);

}  // namespace betpo
