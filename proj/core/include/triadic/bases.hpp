#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triadic/augmentation.hpp"
#include "triadic/implication.hpp"

namespace triadic {

// One implication per relevant quasi-feature; conclusion is the full double
// derivation.  Kind must be BCAI or BACI.
ImplicationBase complete_base(const TriadicContext& ctx, Kind kind);

// Result of the minimal-coverage computation over a quasi-feature set.
struct CoverageResult {
  std::vector<Product> kept;
  std::vector<std::pair<Product, std::string>> dropped;  // with justification
};

// Reduces a quasi-feature set to a minimal coverage: segregates the
// empty-premise forms, drops entries conveying the same information, then
// greedily eliminates entries whose induced implication the rest entail.
CoverageResult min_cover(const TriadicContext& ctx,
                         const std::vector<Product>& quasi, Axis axis);

// One implication per pseudo-feature (min_cover of the full relevant
// quasi-feature set).  Complete and minimal.  Kind BCAI or BACI.
ImplicationBase minimal_base(const TriadicContext& ctx, Kind kind);

// optimal=false: one implication per relevant unit quasi-feature.
// optimal=true: built from the unit pseudo-features with reduced conclusions,
// then reduced by the smaller of the two pipelines
// (right_reduce|merge|right_reduce) and (merge|right_reduce).
// Kind CAI or ACI.
ImplicationBase cai_base(const TriadicContext& ctx, Kind kind, bool optimal);

struct Metrics {
  int cardinality = 0;
  int size = 0;
  // Percentages versus the reference base, rounded to nearest.
  std::optional<int> cardinality_reduction_pct;
  std::optional<int> size_reduction_pct;
};

Metrics metrics(const ImplicationBase& base,
                const ImplicationBase* reference = nullptr);

// Checks the necessary condition for completeness: for every pseudo-feature
// the base contains an implication with the same constraint whose premise
// closure matches.
bool lemma_minbase_check(const TriadicContext& ctx,
                         const ImplicationBase& sigma, Kind kind);

}  // namespace triadic
