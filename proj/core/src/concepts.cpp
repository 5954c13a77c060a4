#include "triadic/concepts.hpp"

#include <algorithm>
#include <set>

namespace triadic {

namespace {

bool concept_canonical_less(const TriadicConcept& a, const TriadicConcept& b) {
  if (a.intent != b.intent) return seq_lex_less(a.intent, b.intent);
  if (a.modus != b.modus) return seq_lex_less(a.modus, b.modus);
  return seq_lex_less(a.extent, b.extent);
}

ConceptSet canonicalize(std::set<TriadicConcept> raw) {
  ConceptSet out;
  out.concepts.assign(raw.begin(), raw.end());
  std::sort(out.concepts.begin(), out.concepts.end(), concept_canonical_less);
  return out;
}

}  // namespace

std::vector<Product> ConceptSet::features() const {
  std::vector<Product> out;
  out.reserve(concepts.size());
  for (const auto& t : concepts) out.push_back(t.feature());
  std::sort(out.begin(), out.end(), product_canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_concept(const TriadicContext& ctx, Mask O, Mask A, Mask C) {
  return ctx.ext_rect(A, C) == O && ctx.der_attrs(O, C) == A &&
         ctx.der_conds(O, A) == C;
}

ConceptSet brute_force_concepts(const TriadicContext& ctx) {
  if (ctx.attributes().size() + ctx.conditions().size() > 24)
    throw SizeGuardError("brute_force_concepts: |M|+|C| exceeds 24");
  std::set<TriadicConcept> raw;
  Mask fullM = ctx.attributes().full();
  Mask fullC = ctx.conditions().full();
  for (Mask A = 0;; A = (A - fullM) & fullM) {
    for (Mask C = 0;; C = (C - fullC) & fullC) {
      Mask O = ctx.ext_rect(A, C);
      Mask A2 = ctx.der_attrs(O, C);
      Mask C2 = ctx.der_conds(O, A);
      if (is_concept(ctx, O, A2, C2)) raw.insert({O, A2, C2});
      if (C == fullC) break;
    }
    if (A == fullM) break;
  }
  return canonicalize(std::move(raw));
}

ConceptSet enumerate_concepts(const TriadicContext& ctx) {
  // Closed object sets of the flattened dyadic context: intersection closure
  // of the full object set under the pair columns.
  int nM = ctx.attributes().size();
  int nC = ctx.conditions().size();
  std::vector<Mask> cols;
  cols.reserve(static_cast<std::size_t>(nM) * nC);
  for (int a = 0; a < nM; ++a)
    for (int c = 0; c < nC; ++c)
      cols.push_back(ctx.ext_rect(bit(a), bit(c)));
  std::set<Mask> extents{ctx.objects().full()};
  std::vector<Mask> frontier{ctx.objects().full()};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask X : frontier)
      for (Mask E : cols) {
        Mask Y = X & E;
        if (extents.insert(Y).second) next.push_back(Y);
      }
    frontier = std::move(next);
  }
  std::set<TriadicConcept> raw;
  for (Mask O : extents) {
    // Rows of the common-pair relation of O: per attribute, the conditions
    // under which every object of O has it.
    std::vector<Mask> pairs = ctx.common_pairs(O);  // per condition
    std::vector<Mask> rows(nM, 0);
    for (int c = 0; c < nC; ++c)
      for (Mask rest = pairs[c]; rest; rest &= rest - 1)
        rows[std::countr_zero(rest)] |= bit(c);
    std::set<Mask> csets{ctx.conditions().full()};
    std::vector<Mask> fr{ctx.conditions().full()};
    while (!fr.empty()) {
      std::vector<Mask> next;
      for (Mask X : fr)
        for (Mask R : rows) {
          Mask Y = X & R;
          if (csets.insert(Y).second) next.push_back(Y);
        }
      fr = std::move(next);
    }
    for (Mask C : csets) {
      Mask A = 0;
      for (int a = 0; a < nM; ++a)
        if (subset(C, rows[a])) A |= bit(a);
      if (ctx.der_conds(O, A) != C) continue;
      if (ctx.ext_rect(A, C) == O) raw.insert({O, A, C});
    }
  }
  return canonicalize(std::move(raw));
}

std::vector<Product> features(const TriadicContext& ctx) {
  return enumerate_concepts(ctx).features();
}

}  // namespace triadic
