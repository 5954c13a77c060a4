#include "triadic/bases.hpp"

#include <algorithm>
#include <cmath>

#include "triadic/logic.hpp"

namespace triadic {

namespace {

Axis axis_of(Kind k) {
  return premise_on_attributes(k) ? Axis::M : Axis::C;
}

// The implication induced by a quasi-feature: premise-side component implies
// its double derivation under the other component.
Implication induced(const TriadicContext& ctx, const Product& p, Axis axis) {
  if (axis == Axis::M)
    return {Kind::BCAI, p.attrs, ctx.closure_12C(p.attrs, p.conds), p.conds};
  return {Kind::BACI, p.conds, ctx.closure_13A(p.conds, p.attrs), p.attrs};
}

Mask prem_of(const Product& p, Axis axis) {
  return axis == Axis::M ? p.attrs : p.conds;
}

Mask constr_of(const Product& p, Axis axis) {
  return axis == Axis::M ? p.conds : p.attrs;
}

Mask closure_of(const TriadicContext& ctx, const Product& p, Axis axis) {
  return axis == Axis::M ? ctx.closure_12C(p.attrs, p.conds)
                         : ctx.closure_13A(p.conds, p.attrs);
}

std::string product_name(const TriadicContext& ctx, const Product& p) {
  auto join = [](const std::vector<std::string>& xs) {
    if (xs.empty()) return std::string{"{}"};
    std::string s;
    for (const auto& x : xs) s += x;
    return s;
  };
  return join(ctx.attributes().names_of(p.attrs)) + "x" +
         join(ctx.conditions().names_of(p.conds));
}

}  // namespace

ImplicationBase complete_base(const TriadicContext& ctx, Kind kind) {
  if (!is_biedermann(kind))
    throw KindError("complete_base expects kind BCAI or BACI");
  Axis axis = axis_of(kind);
  ImplicationBase out{kind, {}};
  for (const Product& p : relevant_quasi_features(ctx, axis, false))
    out.items.push_back(induced(ctx, p, axis));
  return out;
}

CoverageResult min_cover(const TriadicContext& ctx,
                         const std::vector<Product>& quasi, Axis axis) {
  CoverageResult res;
  Kind kind = axis == Axis::M ? Kind::BCAI : Kind::BACI;
  std::vector<Product> store, with_premise;
  for (const Product& p : quasi)
    (prem_of(p, axis) ? with_premise : store).push_back(p);
  // (b) drop entries conveying the same information as an empty-premise
  // form: same constraint, same closure.
  std::vector<Product> kept = store;
  std::vector<Product> x0, x1;
  for (const Product& p : with_premise) {
    const Product* dup = nullptr;
    for (const Product& s : store)
      if (constr_of(s, axis) == constr_of(p, axis) &&
          closure_of(ctx, s, axis) == closure_of(ctx, p, axis)) {
        dup = &s;
        break;
      }
    if (dup) {
      res.dropped.emplace_back(
          p, "same information as " + product_name(ctx, *dup));
      continue;
    }
    (set_size(prem_of(p, axis)) > 1 ? x1 : x0).push_back(p);
  }
  // (c) drop multi-premise entries subsumed by a smaller remaining entry
  // with the same constraint and closure.
  std::vector<Product> x1_kept;
  for (const Product& p : x1) {
    const Product* by = nullptr;
    for (const Product& q : x0)
      if (constr_of(q, axis) == constr_of(p, axis) &&
          prem_of(q, axis) != prem_of(p, axis) &&
          subset(prem_of(q, axis), prem_of(p, axis)) &&
          closure_of(ctx, q, axis) == closure_of(ctx, p, axis)) {
        by = &q;
        break;
      }
    if (by)
      res.dropped.emplace_back(p, "subsumed by " + product_name(ctx, *by));
    else
      x1_kept.push_back(p);
  }
  kept.insert(kept.end(), x0.begin(), x0.end());
  kept.insert(kept.end(), x1_kept.begin(), x1_kept.end());
  std::sort(kept.begin(), kept.end(), product_canonical_less);
  // engine phase: greedily remove entries whose induced implication the
  // remaining entries entail.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size();) {
      ImplicationBase rest{kind, {}};
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) rest.items.push_back(induced(ctx, kept[j], axis));
      if (entails(ctx, rest, induced(ctx, kept[i], axis))) {
        res.dropped.emplace_back(kept[i], "entailed by the remaining cover");
        kept.erase(kept.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  res.kept = std::move(kept);
  return res;
}

ImplicationBase minimal_base(const TriadicContext& ctx, Kind kind) {
  if (!is_biedermann(kind))
    throw KindError("minimal_base expects kind BCAI or BACI");
  Axis axis = axis_of(kind);
  CoverageResult cover =
      min_cover(ctx, relevant_quasi_features(ctx, axis, false), axis);
  ImplicationBase out{kind, {}};
  for (const Product& p : cover.kept)
    out.items.push_back(induced(ctx, p, axis));
  return out;
}

ImplicationBase cai_base(const TriadicContext& ctx, Kind kind, bool optimal) {
  if (is_biedermann(kind))
    throw KindError("cai_base expects kind CAI or ACI");
  Axis axis = axis_of(kind);
  std::vector<Product> units = relevant_quasi_features(ctx, axis, true);
  ImplicationBase out{kind, {}};
  if (!optimal) {
    for (const Product& p : units) {
      Implication i = induced(ctx, p, axis);
      out.items.push_back({kind, i.premise, i.conclusion, i.constraint});
    }
    return out;
  }
  CoverageResult cover = min_cover(ctx, units, axis);
  ImplicationBase init{kind, {}};
  for (const Product& p : cover.kept) {
    Implication i = induced(ctx, p, axis);
    init.items.push_back(
        {kind, i.premise, i.conclusion & ~i.premise, i.constraint});
  }
  // Two reduction orders; keep the smaller result by (size, cardinality).
  ImplicationBase s1 = right_reduce(ctx, init);
  s1 = merge_constraints(s1);
  s1 = right_reduce(ctx, s1);
  ImplicationBase s2 = merge_constraints(init);
  s2 = right_reduce(ctx, s2);
  auto score = [](const ImplicationBase& b) {
    return std::pair<int, int>(b.size(), b.cardinality());
  };
  return score(s1) <= score(s2) ? s1 : s2;
}

Metrics metrics(const ImplicationBase& base, const ImplicationBase* reference) {
  Metrics m;
  m.cardinality = base.cardinality();
  m.size = base.size();
  if (reference && reference->cardinality() > 0 && reference->size() > 0) {
    m.cardinality_reduction_pct = static_cast<int>(std::lround(
        100.0 * (1.0 - static_cast<double>(m.cardinality) /
                           reference->cardinality())));
    m.size_reduction_pct = static_cast<int>(std::lround(
        100.0 * (1.0 - static_cast<double>(m.size) / reference->size())));
  }
  return m;
}

bool lemma_minbase_check(const TriadicContext& ctx,
                         const ImplicationBase& sigma, Kind kind) {
  if (!is_biedermann(kind))
    throw KindError("lemma_minbase_check expects kind BCAI or BACI");
  Axis axis = axis_of(kind);
  CoverageResult cover =
      min_cover(ctx, relevant_quasi_features(ctx, axis, false), axis);
  auto cl = [&](Mask premise, Mask constraint) {
    return axis == Axis::M ? ctx.closure_12C(premise, constraint)
                           : ctx.closure_13A(premise, constraint);
  };
  for (const Product& p : cover.kept) {
    Mask constraint = constr_of(p, axis);
    Mask want = closure_of(ctx, p, axis);
    bool found = false;
    for (const auto& i : sigma.items)
      if (i.constraint == constraint &&
          cl(i.premise, constraint) == want) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace triadic
