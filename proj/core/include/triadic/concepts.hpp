#pragma once
#include <vector>

#include "triadic/context.hpp"

namespace triadic {

// A triple (extent, intent, modus) closed under all three derivations.
struct TriadicConcept {
  Mask extent = 0;
  Mask intent = 0;
  Mask modus = 0;
  auto operator<=>(const TriadicConcept&) const = default;
  Product feature() const { return Product{intent, modus}; }
};

// All concepts of one context, in canonical order (lexicographic by intent
// index sequence, then modus).
struct ConceptSet {
  std::vector<TriadicConcept> concepts;
  std::vector<Product> features() const;
  std::size_t size() const { return concepts.size(); }
};

bool is_concept(const TriadicContext& ctx, Mask O, Mask A, Mask C);

// Enumerates concepts by closing the object-set lattice of the flattened
// dyadic context and refining each closed extent into its maximal
// attribute×condition rectangles.
ConceptSet enumerate_concepts(const TriadicContext& ctx);

// Reference oracle: iterates every (A, C) in 2^M × 2^C and keeps the
// derivation fixpoints.  Guarded by |M|+|C| <= 24.
ConceptSet brute_force_concepts(const TriadicContext& ctx);

// The feature set F = {intent × modus} of all concepts, canonical order.
std::vector<Product> features(const TriadicContext& ctx);

}  // namespace triadic
