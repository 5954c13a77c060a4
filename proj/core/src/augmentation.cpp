#include "triadic/augmentation.hpp"

#include <algorithm>
#include <set>

namespace triadic {

namespace {

// Z (or any pair set) as a per-condition family of attribute masks.
std::vector<Mask> pair_masks(const TriadicContext& ctx, const PairList& pairs) {
  std::vector<Mask> z(ctx.conditions().size(), 0);
  for (const auto& [a, c] : pairs)
    z[ctx.conditions().index_of(c)] |= bit(ctx.attributes().index_of(a));
  return z;
}

bool pairs_subset(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!subset(a[i], b[i])) return false;
  return true;
}

std::vector<Mask> pairs_intersect(const std::vector<Mask>& a,
                                  const std::vector<Mask>& b) {
  std::vector<Mask> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

}  // namespace

PairList rect_pairs(const TriadicContext& ctx, const Product& p) {
  PairList out;
  for (Mask am = p.attrs; am; am &= am - 1)
    for (Mask cm = p.conds; cm; cm &= cm - 1)
      out.emplace_back(ctx.attributes().name(std::countr_zero(am)),
                       ctx.conditions().name(std::countr_zero(cm)));
  return out;
}

AugmentedContext augment(const TriadicContext& ctx, const PairList& pairs) {
  // Validate names first so the reference error precedes any construction.
  for (const auto& [a, c] : pairs) {
    ctx.attributes().index_of(a);
    ctx.conditions().index_of(c);
  }
  std::string name;
  for (int k = 0;; ++k) {
    name = "aug#" + std::to_string(k);
    if (!ctx.objects().contains(name)) break;
  }
  Universe G = ctx.objects();
  int gi = G.add(name);
  TriadicContext out(G, ctx.attributes(), ctx.conditions());
  for (int g = 0; g < ctx.objects().size(); ++g)
    for (int c = 0; c < ctx.conditions().size(); ++c)
      for (Mask rest = ctx.attrs_at(g, c); rest; rest &= rest - 1)
        out.add_triple_indices(g, std::countr_zero(rest), c);
  for (const auto& [a, c] : pairs)
    out.add_triple_indices(gi, ctx.attributes().index_of(a),
                           ctx.conditions().index_of(c));
  return {std::move(out), name, pairs};
}

TransferCheck derivation_transfer_check(const TriadicContext& ctx,
                                        const PairList& pairs,
                                        const PairList& P,
                                        const std::vector<std::string>& O) {
  AugmentedContext az = augment(ctx, pairs);
  const TriadicContext& kz = az.context;
  int oz = kz.objects().index_of(az.new_object);
  std::vector<Mask> z = pair_masks(ctx, pairs);
  std::vector<Mask> p = pair_masks(ctx, P);

  TransferCheck out;
  // (i) O^(1) computed in K[Z] equals O^(1) in K, for O within the base
  // objects.
  Mask om_base = ctx.objects().mask_of(O);
  Mask om_aug = kz.objects().mask_of(O);
  out.clause_i = ctx.common_pairs(om_base) == kz.common_pairs(om_aug);

  // (ii) P^(1) in K equals P^(1) in K[Z] minus the new object.
  Mask p1_base = ctx.objects_of_pairs(p);
  Mask p1_aug = kz.objects_of_pairs(p);
  out.clause_ii = p1_base == (p1_aug & ~bit(oz));

  // (iii)/(iv) split on whether the new object supports P.
  std::vector<Mask> pcc_base =
      ctx.common_pairs(p1_base);  // P^(1)(1) in K
  std::vector<Mask> pcc_aug = kz.common_pairs(p1_aug);
  if ((p1_aug >> oz & 1) == 0) {
    out.clause_iii = pcc_base == pcc_aug;
    out.clause_iv = true;  // vacuous
  } else {
    out.clause_iii = true;  // vacuous
    out.clause_iv = pcc_aug == pairs_intersect(z, pcc_base);
  }
  return out;
}

std::vector<Product> merged_features(const TriadicContext& ctx,
                                     const std::vector<Product>& known_features,
                                     const PairList& pairs) {
  AugmentedContext az = augment(ctx, pairs);
  const TriadicContext& kz = az.context;
  int oz = kz.objects().index_of(az.new_object);
  int nM = kz.attributes().size();
  int nC = kz.conditions().size();
  std::vector<Mask> z = pair_masks(ctx, pairs);

  // Closed object sets of K[Z] containing the new object arise from
  // intersections of pair columns whose pair lies in Z (any other column
  // excludes the new object).
  std::vector<Mask> cols;
  for (int c = 0; c < nC; ++c)
    for (Mask rest = z[c]; rest; rest &= rest - 1)
      cols.push_back(kz.ext_rect(bit(std::countr_zero(rest)), bit(c)));
  std::set<Mask> extents{kz.objects().full()};
  std::vector<Mask> frontier{kz.objects().full()};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask X : frontier)
      for (Mask E : cols) {
        Mask Y = X & E;
        if (extents.insert(Y).second) next.push_back(Y);
      }
    frontier = std::move(next);
  }

  std::set<Product> out(known_features.begin(), known_features.end());
  for (Mask O : extents) {
    if ((O >> oz & 1) == 0) continue;
    std::vector<Mask> b = kz.common_pairs(O);
    std::vector<Mask> rows(nM, 0);
    for (int c = 0; c < nC; ++c)
      for (Mask rest = b[c]; rest; rest &= rest - 1)
        rows[std::countr_zero(rest)] |= bit(c);
    std::set<Mask> csets{kz.conditions().full()};
    std::vector<Mask> fr{kz.conditions().full()};
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
      if (kz.der_conds(O, A) != C) continue;
      if (kz.ext_rect(A, C) == O) out.insert(Product{A, C});
    }
  }
  std::vector<Product> res(out.begin(), out.end());
  std::sort(res.begin(), res.end(), product_canonical_less);
  return res;
}

bool is_quasi_feature(const TriadicContext& ctx, const Product& candidate) {
  return is_quasi_feature(ctx, candidate, features(ctx));
}

bool is_quasi_feature(const TriadicContext& ctx, const Product& candidate,
                      const std::vector<Product>& feats) {
  Mask A = candidate.attrs, C = candidate.conds;
  if (!A && !C) return false;
  // Empty-sided special forms stand for the families of 100%-support
  // implications; they qualify exactly when the closure of the empty set
  // under the non-empty side is itself non-empty.
  if (!A) return C && ctx.objects().size() > 0 && ctx.closure_12C(0, C) != 0;
  if (!C) return A && ctx.objects().size() > 0 && ctx.closure_13A(0, A) != 0;
  if (std::binary_search(feats.begin(), feats.end(), candidate,
                         product_canonical_less))
    return false;
  std::vector<Product> merged =
      merged_features(ctx, feats, rect_pairs(ctx, candidate));
  return merged.size() == feats.size() + 1;
}

bool is_relevant(const TriadicContext& ctx, const Product& candidate,
                 Axis axis) {
  if (axis == Axis::M)
    return candidate.conds &&
           (ctx.closure_12C(candidate.attrs, candidate.conds) &
            ~candidate.attrs) != 0;
  return candidate.attrs &&
         (ctx.closure_13A(candidate.conds, candidate.attrs) &
          ~candidate.conds) != 0;
}

QuasiFeatureReport quasi_feature_report(const TriadicContext& ctx,
                                        const Product& candidate) {
  QuasiFeatureReport r;
  r.candidate = candidate;
  std::vector<Product> feats = features(ctx);
  r.is_quasi = is_quasi_feature(ctx, candidate, feats);
  r.is_relevant_m = is_relevant(ctx, candidate, Axis::M);
  r.is_relevant_c = is_relevant(ctx, candidate, Axis::C);
  if (candidate.attrs && candidate.conds) {
    std::vector<Product> merged =
        merged_features(ctx, feats, rect_pairs(ctx, candidate));
    r.new_feature_count = static_cast<int>(merged.size() - feats.size());
  } else {
    r.new_feature_count = r.is_quasi ? 1 : 0;
  }
  return r;
}

std::vector<Product> relevant_quasi_features(const TriadicContext& ctx,
                                             Axis axis, bool unit_only) {
  if (ctx.attributes().size() + ctx.conditions().size() > 24)
    throw SizeGuardError("relevant_quasi_features: |M|+|C| exceeds 24");
  std::vector<Product> feats = features(ctx);
  Mask fullM = ctx.attributes().full();
  Mask fullC = ctx.conditions().full();
  std::vector<Product> cands;
  for (Mask A = 0;; A = (A - fullM) & fullM) {
    for (Mask C = 0;; C = (C - fullC) & fullC) {
      bool take = true;
      if (unit_only) {
        if (axis == Axis::M && set_size(C) != 1) take = false;
        if (axis == Axis::C && set_size(A) != 1) take = false;
      }
      if (take) cands.push_back(Product{A, C});
      if (C == fullC) break;
    }
    if (A == fullM) break;
  }
  std::sort(cands.begin(), cands.end(), product_canonical_less);
  std::vector<Product> out;
  for (const Product& p : cands)
    if (is_relevant(ctx, p, axis) && is_quasi_feature(ctx, p, feats))
      out.push_back(p);
  if (unit_only && axis == Axis::M) {
    // Redundancy filter: drop a unit entry when another unit entry with the
    // same condition, a strictly smaller attribute side and the same closure
    // exists, and the excess attributes are 100%-support under that
    // condition.  The dropped entry's implication is entailed by the
    // retained entries together with the empty-premise entry, on any
    // context.
    std::vector<Product> kept;
    for (const Product& p : out) {
      Mask full_support = ctx.closure_12C(0, p.conds);
      bool drop = false;
      for (const Product& q : out) {
        if (q.conds != p.conds || q.attrs == p.attrs) continue;
        if (!q.attrs || !subset(q.attrs, p.attrs)) continue;
        if (!subset(p.attrs & ~q.attrs, full_support)) continue;
        if (ctx.closure_12C(q.attrs, p.conds) ==
            ctx.closure_12C(p.attrs, p.conds)) {
          drop = true;
          break;
        }
      }
      if (!drop) kept.push_back(p);
    }
    out = std::move(kept);
  }
  return out;
}

}  // namespace triadic
