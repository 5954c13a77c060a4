#pragma once
#include <string>
#include <vector>

#include "triadic/implication.hpp"

namespace triadic {

// Syntactic closure of A at constraint C under a set of Biedermann
// implications: least fixpoint adding b whenever every c in C is covered by
// some applicable implication (premise ⊆ S, c ∈ C' ⊆ C, b in conclusion).
// C = ∅ returns the whole universe (Non-constraint axiom).
Mask closure(const std::vector<Implication>& sigma, Mask A, Mask C,
             Mask universe);
// Throws KindError when the base kind is CAI/ACI (callers decompose first).
Mask closure(const TriadicContext& ctx, const ImplicationBase& sigma, Mask A,
             Mask C);

// Σ ⊢ goal: conclusion ⊆ closure(premise, constraint); CAI/ACI goals and
// bases are decomposed to singleton constraints first.
bool entails(const TriadicContext& ctx, const ImplicationBase& sigma,
             const Implication& goal);

bool mutually_entailing(const TriadicContext& ctx, const ImplicationBase& a,
                        const ImplicationBase& b);

// Greedily removes items entailed by the remaining ones, scanning in
// canonical (premise, constraint) name order.
ImplicationBase eliminate_redundant(const TriadicContext& ctx,
                                    const ImplicationBase& sigma);

// Removes premise attributes from conclusions, then drops conclusion and
// premise elements (in universe order) whenever the base stays equivalent;
// items left with empty conclusions are removed.
ImplicationBase right_reduce(const TriadicContext& ctx,
                             const ImplicationBase& sigma);

// Unions the constraints of items sharing premise and conclusion (CAI/ACI
// only); first-occurrence order is preserved.
ImplicationBase merge_constraints(const ImplicationBase& sigma);

// One derivation step: an axiom, a base-implication citation ("Assumption"),
// or a rule applied to earlier steps (0-based indices into the trace).
struct TraceStep {
  std::string rule;
  std::vector<int> uses;
  Implication produced;
};

struct DerivationTrace {
  std::vector<TraceStep> steps;
  const Implication& goal() const { return steps.back().produced; }
};

// Builds a replayable derivation of goal from sigma; throws NotEntailedError
// when entails(sigma, goal) is false.
DerivationTrace trace(const TriadicContext& ctx, const ImplicationBase& sigma,
                      const Implication& goal);

// Checks every step of a trace against the rule system and that the last
// step produces the goal.
bool replay(const TriadicContext& ctx, const ImplicationBase& sigma,
            const DerivationTrace& t, const Implication& goal);

std::string trace_to_json(const TriadicContext& ctx,
                          const DerivationTrace& t);

}  // namespace triadic
