#include "triadic/logic.hpp"

#include <algorithm>

#include "json.hpp"

namespace triadic {

namespace {

std::vector<Implication> decomposed_items(const ImplicationBase& sigma) {
  if (is_biedermann(sigma.kind)) return sigma.items;
  std::vector<Implication> out;
  for (const auto& i : sigma.items)
    for (const auto& d : decompose_cai(i)) out.push_back(d);
  return out;
}

Mask premise_full(const TriadicContext& ctx, Kind k) {
  return premise_universe(ctx, k).full();
}

bool entails_goal(const std::vector<Implication>& sigma,
                  const Implication& goal, Mask universe) {
  if (is_biedermann(goal.kind))
    return subset(goal.conclusion,
                  closure(sigma, goal.premise, goal.constraint, universe));
  for (Mask rest = goal.constraint; rest; rest &= rest - 1)
    if (!subset(goal.conclusion,
                closure(sigma, goal.premise, bit(std::countr_zero(rest)),
                        universe)))
      return false;
  return true;
}

// Canonical order used by eliminate_redundant: premise and constraint name
// sequences, sorted lexicographically.
struct NameOrder {
  const Universe& pu;
  const Universe& cu;
  std::vector<std::string> sorted_names(const Universe& u, Mask m) const {
    std::vector<std::string> xs = u.names_of(m);
    std::sort(xs.begin(), xs.end());
    return xs;
  }
  bool operator()(const Implication& a, const Implication& b) const {
    if (set_size(a.premise) != set_size(b.premise))
      return set_size(a.premise) < set_size(b.premise);
    auto pa = sorted_names(pu, a.premise), pb = sorted_names(pu, b.premise);
    if (pa != pb) return pa < pb;
    if (set_size(a.constraint) != set_size(b.constraint))
      return set_size(a.constraint) < set_size(b.constraint);
    auto ca = sorted_names(cu, a.constraint),
         cb = sorted_names(cu, b.constraint);
    if (ca != cb) return ca < cb;
    return shortlex_less(a.conclusion, b.conclusion);
  }
};

}  // namespace

Mask closure(const std::vector<Implication>& sigma, Mask A, Mask C,
             Mask universe) {
  if (!C) return universe;
  Mask S = A;
  bool changed = true;
  while (changed) {
    changed = false;
    // Attributes coverable per condition, intersected across the constraint.
    Mask addable = universe & ~S;
    for (Mask rest = C; addable && rest; rest &= rest - 1) {
      Mask c = bit(std::countr_zero(rest));
      Mask covered = 0;
      for (const auto& i : sigma)
        if (subset(i.premise, S) && (i.constraint & c) &&
            subset(i.constraint, C))
          covered |= i.conclusion;
      addable &= covered;
    }
    if (addable) {
      S |= addable;
      changed = true;
    }
  }
  return S;
}

Mask closure(const TriadicContext& ctx, const ImplicationBase& sigma, Mask A,
             Mask C) {
  if (!is_biedermann(sigma.kind))
    throw KindError("closure expects a Biedermann-kind base");
  return closure(sigma.items, A, C, premise_full(ctx, sigma.kind));
}

bool entails(const TriadicContext& ctx, const ImplicationBase& sigma,
             const Implication& goal) {
  bool sig_attrs = premise_on_attributes(sigma.kind);
  if (premise_on_attributes(goal.kind) != sig_attrs)
    throw KindError("goal and base live on different axes");
  return entails_goal(decomposed_items(sigma), goal,
                      premise_full(ctx, goal.kind));
}

bool mutually_entailing(const TriadicContext& ctx, const ImplicationBase& a,
                        const ImplicationBase& b) {
  for (const auto& i : a.items)
    if (!entails(ctx, b, i)) return false;
  for (const auto& i : b.items)
    if (!entails(ctx, a, i)) return false;
  return true;
}

ImplicationBase eliminate_redundant(const TriadicContext& ctx,
                                    const ImplicationBase& sigma) {
  NameOrder order{premise_universe(ctx, sigma.kind),
                  constraint_universe(ctx, sigma.kind)};
  ImplicationBase out = sigma;
  std::sort(out.items.begin(), out.items.end(), order);
  out.items.erase(std::unique(out.items.begin(), out.items.end()),
                  out.items.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.items.size();) {
      ImplicationBase rest{out.kind, {}};
      for (std::size_t j = 0; j < out.items.size(); ++j)
        if (j != i) rest.items.push_back(out.items[j]);
      if (entails(ctx, rest, out.items[i])) {
        out.items.erase(out.items.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return out;
}

ImplicationBase right_reduce(const TriadicContext& ctx,
                             const ImplicationBase& sigma) {
  ImplicationBase out = sigma;
  const Universe& pu = premise_universe(ctx, sigma.kind);
  auto equivalent = [&](const ImplicationBase& a, const ImplicationBase& b) {
    return mutually_entailing(ctx, a, b);
  };
  for (std::size_t i = 0; i < out.items.size(); ++i) {
    out.items[i].conclusion &= ~out.items[i].premise;
    // conclusion reduction, universe order
    for (int y = 0; y < pu.size(); ++y) {
      if (!(out.items[i].conclusion >> y & 1)) continue;
      ImplicationBase trial = out;
      trial.items[i].conclusion &= ~bit(y);
      if (equivalent(trial, out)) out = trial;
    }
    // premise reduction, universe order
    for (int p = 0; p < pu.size(); ++p) {
      if (!(out.items[i].premise >> p & 1)) continue;
      ImplicationBase trial = out;
      trial.items[i].premise &= ~bit(p);
      if (equivalent(trial, out)) out = trial;
    }
  }
  std::erase_if(out.items,
                [](const Implication& i) { return i.conclusion == 0; });
  return out;
}

ImplicationBase merge_constraints(const ImplicationBase& sigma) {
  if (is_biedermann(sigma.kind))
    throw KindError("merge_constraints expects a CAI or ACI base");
  ImplicationBase out{sigma.kind, {}};
  for (const auto& imp : sigma.items) {
    bool hit = false;
    for (auto& o : out.items)
      if (o.premise == imp.premise && o.conclusion == imp.conclusion) {
        o.constraint |= imp.constraint;
        hit = true;
        break;
      }
    if (!hit) out.items.push_back(imp);
  }
  return out;
}

// ---------- traces ----------
namespace {

int push(DerivationTrace& t, std::string rule, std::vector<int> uses,
         Implication produced) {
  t.steps.push_back({std::move(rule), std::move(uses), produced});
  return static_cast<int>(t.steps.size()) - 1;
}

}  // namespace

DerivationTrace trace(const TriadicContext& ctx, const ImplicationBase& sigma,
                      const Implication& goal) {
  if (!entails(ctx, sigma, goal))
    throw NotEntailedError("the base does not entail " +
                           format_implication(ctx, goal));
  Mask universe = premise_full(ctx, goal.kind);
  Kind unit_kind = premise_on_attributes(goal.kind) ? Kind::BCAI : Kind::BACI;
  std::vector<Implication> items = decomposed_items(sigma);
  DerivationTrace t;

  auto axioms_or_cover = [&](const Implication& g) -> int {
    // g is treated at its exact constraint (Biedermann reading).
    if (g.constraint == 0) {
      int s = push(t, "Non-constraint", {},
                   {unit_kind, 0, universe, 0});
      if (g.premise)
        s = push(t, "Augmentation", {s},
                 {unit_kind, g.premise, universe, 0});
      if (g.conclusion != t.steps[s].produced.conclusion)
        s = push(t, "Decomposition", {s}, g);
      return s;
    }
    if (subset(g.conclusion, g.premise)) {
      int s = push(t, "Reflexivity", {},
                   {unit_kind, g.premise, g.premise, g.constraint});
      if (g.conclusion != g.premise) s = push(t, "Decomposition", {s}, g);
      return s;
    }
    // One base implication per constraint element.
    std::vector<int> used;
    for (Mask rest = g.constraint; rest; rest &= rest - 1) {
      Mask c = bit(std::countr_zero(rest));
      int found = -1;
      for (std::size_t k = 0; k < items.size(); ++k)
        if (subset(items[k].premise, g.premise) &&
            (items[k].constraint & c) &&
            subset(items[k].constraint, g.constraint) &&
            subset(g.conclusion & ~g.premise, items[k].conclusion)) {
          found = static_cast<int>(k);
          break;
        }
      if (found < 0) return -1;
      if (std::find(used.begin(), used.end(), found) == used.end())
        used.push_back(found);
    }
    std::vector<int> steps;
    for (int k : used)
      steps.push_back(push(t, "Assumption", {},
                           {unit_kind, items[k].premise, items[k].conclusion,
                            items[k].constraint}));
    Mask prem = 0, concl = universe, constr = 0;
    for (int k : used) {
      prem |= items[k].premise;
      concl &= items[k].conclusion;
      constr |= items[k].constraint;
    }
    int s;
    if (used.size() == 1) {
      s = steps[0];
    } else {
      s = push(t, "Conditional composition", steps,
               {unit_kind, prem, concl, constr});
    }
    if (prem != g.premise || !subset(g.conclusion, concl | prem)) {
      // pad the premise (and conclusion) up to the goal premise
      Mask z = g.premise;
      s = push(t, "Augmentation", {s},
               {unit_kind, prem | z, concl | z, constr});
      prem |= z;
      concl |= z;
    }
    if (t.steps[s].produced.conclusion != g.conclusion ||
        t.steps[s].produced.premise != g.premise)
      s = push(t, "Decomposition", {s}, g);
    return s;
  };

  // Is `cand` addable in one closure round from S at constraint C, and with
  // which base implications (one per constraint element)?
  auto cover_of = [&](Mask S, Mask C, int cand) -> std::vector<int> {
    std::vector<int> used;
    for (Mask rest = C; rest; rest &= rest - 1) {
      Mask c = bit(std::countr_zero(rest));
      int found = -1;
      for (std::size_t k = 0; k < items.size(); ++k)
        if (subset(items[k].premise, S) && (items[k].constraint & c) &&
            subset(items[k].constraint, C) &&
            (items[k].conclusion >> cand & 1)) {
          found = static_cast<int>(k);
          break;
        }
      if (found < 0) return {};
      if (std::find(used.begin(), used.end(), found) == used.end())
        used.push_back(found);
    }
    return used;
  };

  auto derive_biedermann = [&](const Implication& g) -> int {
    int s = axioms_or_cover(g);
    if (s >= 0) return s;
    // General route: grow the derived set one attribute at a time (goal
    // conclusion attributes preferred), chaining rounds with Transitivity.
    Mask S = g.premise;
    int acc = -1;  // step deriving (g.premise -> S)_constraint
    while (!subset(g.conclusion, S)) {
      int b = -1;
      std::vector<int> used;
      for (Mask pool : {g.conclusion & ~S, universe & ~S}) {
        for (Mask tg = pool; tg; tg &= tg - 1) {
          int cand = std::countr_zero(tg);
          used = cover_of(S, g.constraint, cand);
          if (!used.empty()) { b = cand; break; }
        }
        if (b >= 0) break;
      }
      if (b < 0)
        throw NotEntailedError("trace construction failed unexpectedly");
      // assumptions, augmented to the current derived set, then composed
      std::vector<int> comp_steps;
      Mask concl = universe;
      for (int k : used) {
        int s2 = push(t, "Assumption", {},
                      {unit_kind, items[k].premise, items[k].conclusion,
                       items[k].constraint});
        if (items[k].premise != S || !subset(S, items[k].conclusion))
          s2 = push(t, "Augmentation", {s2},
                    {unit_kind, items[k].premise | S,
                     items[k].conclusion | S, items[k].constraint});
        comp_steps.push_back(s2);
        concl &= t.steps[s2].produced.conclusion;
      }
      int s2 = comp_steps.size() == 1
                   ? comp_steps[0]
                   : push(t, "Conditional composition", comp_steps,
                          {unit_kind, S, concl, g.constraint});
      Mask newS = S | bit(b);
      if (t.steps[s2].produced.conclusion != newS)
        s2 = push(t, "Decomposition", {s2}, {unit_kind, S, newS, g.constraint});
      if (acc >= 0)
        s2 = push(t, "Transitivity", {acc, s2},
                  {unit_kind, g.premise, newS, g.constraint});
      acc = s2;
      S = newS;
    }
    int s3 = acc;
    if (t.steps[s3].produced.conclusion != g.conclusion)
      s3 = push(t, "Decomposition", {s3}, g);
    return s3;
  };

  if (is_biedermann(goal.kind)) {
    derive_biedermann(goal);
    return t;
  }
  // CAI/ACI goal: try the single round at the whole constraint first (the
  // composed constraint then equals the goal constraint); otherwise derive
  // each singleton and compose.
  int s = axioms_or_cover(goal);
  if (s >= 0) return t;
  std::vector<int> parts;
  for (Mask rest = goal.constraint; rest; rest &= rest - 1) {
    Implication unit{goal.kind, goal.premise, goal.conclusion,
                     bit(std::countr_zero(rest))};
    parts.push_back(derive_biedermann(
        {unit_kind, unit.premise, unit.conclusion, unit.constraint}));
  }
  if (parts.size() > 1)
    push(t, "Conditional composition", parts,
         {unit_kind, goal.premise, goal.conclusion, goal.constraint});
  return t;
}

bool replay(const TriadicContext& ctx, const ImplicationBase& sigma,
            const DerivationTrace& t, const Implication& goal) {
  Mask universe = premise_full(ctx, goal.kind);
  std::vector<Implication> items = decomposed_items(sigma);
  auto same_kind_family = [&](const Implication& a) {
    return premise_on_attributes(a.kind) == premise_on_attributes(goal.kind);
  };
  std::vector<Implication> derived;
  for (const auto& step : t.steps) {
    const Implication& p = step.produced;
    if (!same_kind_family(p)) return false;
    for (int u : step.uses)
      if (u < 0 || u >= static_cast<int>(derived.size())) return false;
    auto in = [&](int u) -> const Implication& { return derived[u]; };
    bool ok = false;
    if (step.rule == "Assumption") {
      ok = std::find_if(items.begin(), items.end(), [&](const Implication& i) {
             return i.premise == p.premise && i.conclusion == p.conclusion &&
                    i.constraint == p.constraint;
           }) != items.end();
    } else if (step.rule == "Non-constraint") {
      ok = p.premise == 0 && p.conclusion == universe && p.constraint == 0;
    } else if (step.rule == "Reflexivity") {
      ok = p.premise == p.conclusion;
    } else if (step.rule == "Augmentation") {
      if (step.uses.size() == 1) {
        const Implication& a = in(step.uses[0]);
        Mask z = (p.premise & ~a.premise) | (p.conclusion & ~a.conclusion);
        ok = a.constraint == p.constraint && subset(a.premise, p.premise) &&
             subset(a.conclusion, p.conclusion) &&
             (a.premise | z) == p.premise && (a.conclusion | z) == p.conclusion;
      }
    } else if (step.rule == "Transitivity") {
      if (step.uses.size() == 2) {
        const Implication& a = in(step.uses[0]);
        const Implication& b = in(step.uses[1]);
        ok = a.constraint == b.constraint && a.constraint == p.constraint &&
             a.conclusion == b.premise && p.premise == a.premise &&
             p.conclusion == b.conclusion;
      }
    } else if (step.rule == "Conditional composition") {
      if (step.uses.size() >= 2) {
        Mask prem = 0, concl = universe, constr = 0;
        for (int u : step.uses) {
          prem |= in(u).premise;
          concl &= in(u).conclusion;
          constr |= in(u).constraint;
        }
        ok = p.premise == prem && p.conclusion == concl &&
             p.constraint == constr;
      }
    } else if (step.rule == "Decomposition") {
      if (step.uses.size() == 1) {
        const Implication& a = in(step.uses[0]);
        ok = a.constraint == p.constraint && a.premise == p.premise &&
             subset(p.conclusion, a.conclusion);
      }
    } else if (step.rule == "Additivity") {
      if (step.uses.size() == 2) {
        const Implication& a = in(step.uses[0]);
        const Implication& b = in(step.uses[1]);
        ok = a.constraint == b.constraint && a.constraint == p.constraint &&
             a.premise == b.premise && a.premise == p.premise &&
             p.conclusion == (a.conclusion | b.conclusion);
      }
    } else if (step.rule == "Pseudotransitivity") {
      if (step.uses.size() == 2) {
        const Implication& a = in(step.uses[0]);
        const Implication& b = in(step.uses[1]);
        ok = a.constraint == b.constraint && a.constraint == p.constraint &&
             p.conclusion == b.conclusion &&
             subset(a.premise, p.premise) &&
             subset(b.premise & ~a.conclusion, p.premise) &&
             subset(p.premise & ~a.premise, b.premise);
      }
    } else if (step.rule == "Accumulation") {
      if (step.uses.size() == 2) {
        const Implication& a = in(step.uses[0]);
        const Implication& b = in(step.uses[1]);
        ok = a.constraint == b.constraint && a.constraint == p.constraint &&
             p.premise == a.premise && subset(b.premise, a.conclusion) &&
             p.conclusion == (a.conclusion | b.conclusion);
      }
    } else if (step.rule == "Simplification") {
      if (step.uses.size() == 2) {
        const Implication& a = in(step.uses[0]);
        const Implication& b = in(step.uses[1]);
        ok = a.constraint == b.constraint && a.constraint == p.constraint &&
             subset(a.premise, b.premise) &&
             p.premise == (b.premise & ~a.conclusion) &&
             p.conclusion == (b.conclusion & ~a.conclusion);
      }
    } else {
      return false;
    }
    if (!ok) return false;
    derived.push_back(p);
  }
  if (derived.empty()) return false;
  const Implication& last = derived.back();
  return last.premise == goal.premise && last.conclusion == goal.conclusion &&
         last.constraint == goal.constraint;
}

std::string trace_to_json(const TriadicContext& ctx,
                          const DerivationTrace& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& step : t.steps) {
    nlohmann::ordered_json js;
    js["rule"] = step.rule;
    js["uses"] = step.uses;
    // steps carry the unit-kind form; print with the matching grammar
    js["produced"] = format_implication(ctx, step.produced);
    arr.push_back(js);
  }
  return arr.dump(2) + "\n";
}

}  // namespace triadic
