#pragma once
#include <string>
#include <utility>
#include <vector>

#include "triadic/concepts.hpp"
#include "triadic/context.hpp"

namespace triadic {

// Attribute-condition pairs by name; need not form a rectangle.
using PairList = std::vector<std::pair<std::string, std::string>>;

PairList rect_pairs(const TriadicContext& ctx, const Product& p);

// The context augmented by a fresh object incident to exactly `pairs`.
// The base context is never mutated.
struct AugmentedContext {
  TriadicContext context;
  std::string new_object;
  PairList pairs;
};

AugmentedContext augment(const TriadicContext& ctx, const PairList& pairs);

// The four clauses relating derivations of the augmented context to those of
// the base context, evaluated on a pair set P and an object set O.
struct TransferCheck {
  bool clause_i = false;    // O^(1) unchanged for O within the base objects
  bool clause_ii = false;   // P^(1) = P^(1 in K[Z]) minus the new object
  bool clause_iii = false;  // new object outside P^(1): closures agree
  bool clause_iv = false;   // new object inside P^(1): closure = Z ∩ closure
  bool all() const { return clause_i && clause_ii && clause_iii && clause_iv; }
};

TransferCheck derivation_transfer_check(const TriadicContext& ctx,
                                        const PairList& pairs,
                                        const PairList& P,
                                        const std::vector<std::string>& O);

// features(augment(ctx, pairs)) computed incrementally: the features of the
// base context are kept as-is and only concepts whose extent contains the new
// object are enumerated.
std::vector<Product> merged_features(const TriadicContext& ctx,
                                     const std::vector<Product>& known_features,
                                     const PairList& pairs);

enum class Axis { M, C };

// True iff the rectangle is not a feature and augmenting by it adds exactly
// one feature.  Empty-sided rectangles use the 100%-support special forms.
bool is_quasi_feature(const TriadicContext& ctx, const Product& candidate);
bool is_quasi_feature(const TriadicContext& ctx, const Product& candidate,
                      const std::vector<Product>& feats);

// M-axis: the attribute closure strictly exceeds the attribute side and the
// condition side is non-empty; C-axis symmetric.
bool is_relevant(const TriadicContext& ctx, const Product& candidate,
                 Axis axis);

struct QuasiFeatureReport {
  Product candidate;
  bool is_quasi = false;
  bool is_relevant_m = false;
  bool is_relevant_c = false;
  int new_feature_count = 0;
};

QuasiFeatureReport quasi_feature_report(const TriadicContext& ctx,
                                        const Product& candidate);

// Scans the candidate space in canonical order and returns every relevant
// quasi-feature.  unit_only restricts the constraint-side component to
// singletons (plus the empty-sided special forms).  Guarded by
// |M|+|C| <= 24.
std::vector<Product> relevant_quasi_features(const TriadicContext& ctx,
                                             Axis axis, bool unit_only);

}  // namespace triadic
