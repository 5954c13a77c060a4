// Acceptance suite: runs the ten acceptance checks on the reference context
// and prints one PASS/FAIL line per criterion.  Exits non-zero when any
// criterion fails.

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "triadic/augmentation.hpp"
#include "triadic/bases.hpp"
#include "triadic/concepts.hpp"
#include "triadic/implication.hpp"
#include "triadic/logic.hpp"

using namespace triadic;
using namespace testutil;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++failures;
}

std::vector<Product> prods(const TriadicContext& ctx,
                           const std::vector<std::pair<std::string,
                                                       std::string>>& xs) {
  std::vector<Product> out;
  for (const auto& [a, c] : xs) out.push_back(prod(ctx, a, c));
  std::sort(out.begin(), out.end(), product_canonical_less);
  return out;
}

std::vector<Product> sorted(std::vector<Product> v) {
  std::sort(v.begin(), v.end(), product_canonical_less);
  return v;
}

ImplicationBase mk_base(const TriadicContext& ctx, Kind kind,
                        const std::vector<std::string>& texts) {
  ImplicationBase b{kind, {}};
  for (const auto& t : texts) b.items.push_back(parse_implication(ctx, t, kind));
  return b;
}

void criterion1(const TriadicContext& ctx) {
  auto e = enumerate_concepts(ctx);
  auto b = brute_force_concepts(ctx);
  auto aug = augment(ctx, {{"d", "P"}}).context;
  auto ea = enumerate_concepts(aug);
  auto ba = brute_force_concepts(aug);
  bool ok = e.size() == 33 && e.concepts == b.concepts && ea.size() == 34 &&
            ea.concepts == ba.concepts;
  report(1, ok,
         "concept counts 33 / 34 after augmenting by d x {P}, both "
         "enumerations agree (got " +
             std::to_string(e.size()) + " / " + std::to_string(ea.size()) +
             ")");
}

void criterion2(const TriadicContext& ctx) {
  auto p2 = relevant_quasi_features(ctx, Axis::M, false);
  auto want2 = prods(
      ctx, {{"O", "P"},   {"O", "N"},   {"O", "R"},    {"O", "K"},
            {"O", "PN"},  {"O", "PR"},  {"O", "PK"},   {"O", "RK"},
            {"O", "PRK"}, {"a", "P"},   {"a", "N"},    {"b", "P"},
            {"b", "N"},   {"b", "R"},   {"b", "K"},    {"b", "S"},
            {"c", "P"},   {"c", "N"},   {"c", "R"},    {"c", "K"},
            {"c", "S"},   {"c", "PS"},  {"d", "P"},    {"d", "R"},
            {"d", "K"},   {"ab", "PRKS"}, {"ad", "PNRKS"}, {"bc", "S"},
            {"abc", "PRK"}, {"abc", "PRKS"}, {"abd", "PRK"},
            {"abd", "PNRKS"}, {"acd", "P"}});
  auto p3 = relevant_quasi_features(ctx, Axis::C, false);
  auto want3 = prods(
      ctx, {{"a", "O"},    {"a", "P"},    {"a", "N"},    {"a", "R"},
            {"a", "K"},    {"a", "S"},    {"a", "PR"},   {"a", "PK"},
            {"a", "RK"},   {"a", "PNRK"}, {"b", "P"},    {"b", "S"},
            {"c", "P"},    {"c", "S"},    {"c", "PS"},   {"d", "O"},
            {"d", "P"},    {"d", "N"},    {"d", "R"},    {"d", "K"},
            {"d", "S"},    {"d", "PNK"},  {"d", "PNRK"}, {"d", "PNRS"},
            {"d", "PNKS"}, {"ab", "PRKS"}, {"ad", "O"},  {"bc", "S"},
            {"abc", "PRK"}, {"abc", "PRKS"}, {"abd", "PRK"}, {"acd", "P"},
            {"abcd", "P"}, {"abcd", "PN"}, {"abcd", "PRK"}});
  bool ok = sorted(p2) == want2 && sorted(p3) == want3;
  report(2, ok,
         "relevant quasi-feature listings: M-axis 33 entries, C-axis 35 "
         "entries (got " +
             std::to_string(p2.size()) + " / " + std::to_string(p3.size()) +
             ")");
}

void criterion3(const TriadicContext& ctx) {
  auto up2 = relevant_quasi_features(ctx, Axis::M, true);
  auto want2 = prods(
      ctx, {{"O", "P"}, {"O", "N"}, {"O", "R"}, {"O", "K"}, {"a", "P"},
            {"a", "N"}, {"b", "P"}, {"b", "N"}, {"b", "R"}, {"b", "K"},
            {"b", "S"}, {"c", "P"}, {"c", "N"}, {"c", "R"}, {"c", "K"},
            {"c", "S"}, {"d", "P"}, {"d", "R"}, {"d", "K"}, {"bc", "S"}});
  auto up3 = relevant_quasi_features(ctx, Axis::C, true);
  auto want3 = prods(
      ctx, {{"a", "O"},  {"a", "P"},    {"a", "N"},    {"a", "R"},
            {"a", "K"},  {"a", "S"},    {"a", "PR"},   {"a", "PK"},
            {"a", "RK"}, {"a", "PNRK"}, {"b", "P"},    {"b", "S"},
            {"c", "P"},  {"c", "S"},    {"c", "PS"},   {"d", "O"},
            {"d", "P"},  {"d", "N"},    {"d", "R"},    {"d", "K"},
            {"d", "S"},  {"d", "PNK"},  {"d", "PNRK"}, {"d", "PNRS"},
            {"d", "PNKS"}});
  bool ok = sorted(up2) == want2 && sorted(up3) == want3;
  report(3, ok,
         "unit quasi-feature listings: 20 (M-axis) and 25 (C-axis) entries "
         "(got " +
             std::to_string(up2.size()) + " / " + std::to_string(up3.size()) +
             ")");
}

void criterion4(const TriadicContext& ctx) {
  auto p2 = min_cover(ctx, relevant_quasi_features(ctx, Axis::M, false),
                      Axis::M);
  auto p3 = min_cover(ctx, relevant_quasi_features(ctx, Axis::C, false),
                      Axis::C);
  auto up2 = min_cover(ctx, relevant_quasi_features(ctx, Axis::M, true),
                       Axis::M);
  auto up3 = min_cover(ctx, relevant_quasi_features(ctx, Axis::C, true),
                       Axis::C);
  bool ok =
      sorted(p2.kept) ==
          prods(ctx, {{"O", "P"}, {"O", "N"}, {"O", "R"}, {"O", "K"},
                      {"b", "S"}, {"c", "P"}, {"c", "N"}, {"c", "K"},
                      {"c", "S"}, {"d", "R"}, {"ab", "PRKS"},
                      {"ad", "PNRKS"}, {"abc", "PRK"}, {"abd", "PRK"}}) &&
      sorted(p3.kept) ==
          prods(ctx, {{"a", "O"}, {"a", "N"}, {"b", "P"}, {"b", "S"},
                      {"c", "P"}, {"c", "S"}, {"d", "O"}, {"d", "K"},
                      {"d", "PNRS"}, {"ab", "PRKS"}, {"abc", "PRK"},
                      {"abd", "PRK"}, {"acd", "P"}, {"abcd", "P"}}) &&
      sorted(up2.kept) ==
          prods(ctx, {{"O", "P"}, {"O", "N"}, {"O", "R"}, {"O", "K"},
                      {"b", "S"}, {"c", "P"}, {"c", "N"}, {"c", "K"},
                      {"c", "S"}, {"d", "R"}}) &&
      sorted(up3.kept) ==
          prods(ctx, {{"a", "O"}, {"a", "N"}, {"b", "P"}, {"b", "S"},
                      {"c", "P"}, {"c", "S"}, {"d", "O"}, {"d", "K"},
                      {"d", "PNRS"}});
  report(4, ok,
         "minimal coverages: 14 / 14 / 10 / 9 entries (got " +
             std::to_string(p2.kept.size()) + " / " +
             std::to_string(p3.kept.size()) + " / " +
             std::to_string(up2.kept.size()) + " / " +
             std::to_string(up3.kept.size()) + ")");
}

void criterion5(const TriadicContext& ctx) {
  auto cai = cai_base(ctx, Kind::CAI, false);
  auto caio = cai_base(ctx, Kind::CAI, true);
  auto aci = cai_base(ctx, Kind::ACI, false);
  auto acio = cai_base(ctx, Kind::ACI, true);
  auto cai_ref = mk_base(ctx, Kind::CAI,
                         {"{} -[{P}]-> {a,d}", "{} -[{N}]-> {d}",
                          "{} -[{R,K}]-> {a}", "{c} -[{P,N,K}]-> {b}",
                          "{d} -[{R}]-> {b}", "{b} -[{S}]-> {c}",
                          "{c} -[{S}]-> {a,b,d}"});
  auto aci_ref = mk_base(
      ctx, Kind::ACI,
      {"{} -[{a}]-> {P,R,K}", "{} -[{d}]-> {P,N}", "{P} -[{b}]-> {K}",
       "{P} -[{c}]-> {K,S}", "{N} -[{a}]-> {S}", "{K} -[{d}]-> {R,S}",
       "{S} -[{b,c}]-> {P,N,R}", "{P,N,R,S} -[{d}]-> {K}"});
  bool ok = cai.cardinality() == 20 && cai.size() == 86 &&
            caio.cardinality() <= 7 && caio.size() <= 24 &&
            mutually_entailing(ctx, caio, cai_ref) &&
            aci.cardinality() == 25 && aci.size() == 160 &&
            acio.cardinality() <= 8 && acio.size() <= 34 &&
            mutually_entailing(ctx, acio, aci_ref);
  auto mc = metrics(caio, &cai);
  // rate clause applies when the produced optimal base matches the
  // reference sizes exactly
  if (caio.cardinality() == 7 && caio.size() == 24)
    ok = ok && mc.cardinality_reduction_pct == 65 &&
         mc.size_reduction_pct == 72;
  auto ma = metrics(acio, &aci);
  if (acio.cardinality() == 8 && acio.size() == 34)
    ok = ok && ma.cardinality_reduction_pct == 68 &&
         ma.size_reduction_pct == 78;
  report(5, ok,
         "base metrics: CAI 20/86 -> optimal " +
             std::to_string(caio.cardinality()) + "/" +
             std::to_string(caio.size()) + ", ACI 25/160 -> optimal " +
             std::to_string(acio.cardinality()) + "/" +
             std::to_string(acio.size()) + ", both equivalent to the "
             "reference listings");
  if (acio.size() != 34)
    std::printf("  note: the optimal ACI base found has size %d (reference "
                "listing: 34); the rate clause is checked only on exact size "
                "matches\n",
                acio.size());
}

void criterion6(const TriadicContext& ctx) {
  bool ok = is_valid(ctx, parse_implication(ctx, "({d} -> {a})_{P}")) &&
            is_valid(ctx, parse_implication(ctx, "({P} -> {K,P})_{b}")) &&
            is_valid(ctx, parse_implication(ctx, "{d} -[{P}]-> {a}")) &&
            is_valid(ctx, parse_implication(ctx, "{P} -[{a,b,c}]-> {K}")) &&
            !is_valid(ctx, parse_implication(ctx, "({a} -> {c})_{S}"));
  report(6, ok, "validity spot checks (four valid, one invalid)");
}

void criterion7(const TriadicContext& ctx) {
  auto bcai = complete_base(ctx, Kind::BCAI);
  Mask fullA = ctx.attributes().full();
  Mask fullC = ctx.conditions().full();
  long bcai_total = 0, bcai_bad = 0;
  for (Mask A1 = 0;; A1 = (A1 - fullA) & fullA) {
    for (Mask A2 = 0;; A2 = (A2 - fullA) & fullA) {
      for (Mask C = 0;; C = (C - fullC) & fullC) {
        Implication g{Kind::BCAI, A1, A2, C};
        ++bcai_total;
        if (is_valid(ctx, g) != entails(ctx, bcai, g)) ++bcai_bad;
        if (C == fullC) break;
      }
      if (A2 == fullA) break;
    }
    if (A1 == fullA) break;
  }
  auto baci = complete_base(ctx, Kind::BACI);
  long baci_total = 0, baci_bad = 0;
  for (Mask C1 = 0;; C1 = (C1 - fullC) & fullC) {
    for (Mask C2 = 0;; C2 = (C2 - fullC) & fullC) {
      for (Mask A = 0;; A = (A - fullA) & fullA) {
        Implication g{Kind::BACI, C1, C2, A};
        ++baci_total;
        if (is_valid(ctx, g) != entails(ctx, baci, g)) ++baci_bad;
        if (A == fullA) break;
      }
      if (C2 == fullC) break;
    }
    if (C1 == fullC) break;
  }
  report(7, bcai_bad == 0 && baci_bad == 0,
         "completeness sweep: " + std::to_string(bcai_bad) + " of " +
             std::to_string(bcai_total) + " BCAI and " +
             std::to_string(baci_bad) + " of " + std::to_string(baci_total) +
             " BACI triples where validity and entailment disagree");
  if (bcai_bad || baci_bad) {
    // every BCAI disagreement involves an implication that is only valid
    // because its premise has empty support
    long nonempty = 0;
    for (Mask A1 = 0;; A1 = (A1 - fullA) & fullA) {
      for (Mask A2 = 0;; A2 = (A2 - fullA) & fullA) {
        for (Mask C = 0;; C = (C - fullC) & fullC) {
          Implication g{Kind::BCAI, A1, A2, C};
          if (is_valid(ctx, g) != entails(ctx, bcai, g) &&
              ctx.ext_rect(A1, C) != 0)
            ++nonempty;
          if (C == fullC) break;
        }
        if (A2 == fullA) break;
      }
      if (A1 == fullA) break;
    }
    std::printf("  note: %ld of the BCAI disagreements have non-empty "
                "premise support\n", nonempty);
    // extending the base with the null-support rules closes the BCAI gap
    ImplicationBase extended = bcai;
    for (const auto& i : bcai.items)
      for (const auto& extra : null_support_closure(ctx, i))
        extended.items.push_back(extra);
    long still_bad = 0;
    for (Mask A1 = 0;; A1 = (A1 - fullA) & fullA) {
      for (Mask A2 = 0;; A2 = (A2 - fullA) & fullA) {
        for (Mask C = 0;; C = (C - fullC) & fullC) {
          Implication g{Kind::BCAI, A1, A2, C};
          if (is_valid(ctx, g) != entails(ctx, extended, g)) ++still_bad;
          if (C == fullC) break;
        }
        if (A2 == fullA) break;
      }
      if (A1 == fullA) break;
    }
    std::printf("  note: with the base extended by the null-support rules, "
                "%ld BCAI disagreements remain\n", still_bad);
  }
}

void criterion8(const TriadicContext& ctx) {
  auto bcai = complete_base(ctx, Kind::BCAI);
  Mask fullA = ctx.attributes().full();
  Mask fullC = ctx.conditions().full();
  long total = 0, bad = 0, bad_nonempty_support = 0;
  for (Mask A = 0;; A = (A - fullA) & fullA) {
    for (Mask C = 0;; C = (C - fullC) & fullC) {
      ++total;
      Mask syntactic = closure(ctx, bcai, A, C);
      Mask semantic = ctx.closure_12C(A, C);
      if (syntactic != semantic) {
        ++bad;
        if (ctx.ext_rect(A, C) != 0) ++bad_nonempty_support;
      }
      if (C == fullC) break;
    }
    if (A == fullA) break;
  }
  report(8, bad == 0,
         "closure agreement: syntactic vs derivation closure disagree on " +
             std::to_string(bad) + " of " + std::to_string(total) +
             " (A, C) pairs");
  if (bad)
    std::printf("  note: %ld disagreeing pairs have non-empty support; on "
                "every disagreeing pair the derivation closure is the full "
                "attribute set\n", bad_nonempty_support);
}

void criterion9() {
  std::mt19937 rng(2024);
  bool ok = true;
  for (int t = 0; t < 200; ++t) {
    auto ctx = random_context(rng, 3, 3, 3);
    for (Kind k : {Kind::BCAI, Kind::BACI})
      for (const auto& i : complete_base(ctx, k).items)
        ok = ok && is_valid(ctx, i);
    for (Kind k : {Kind::CAI, Kind::ACI})
      for (bool opt : {false, true})
        for (const auto& i : cai_base(ctx, k, opt).items)
          ok = ok && is_valid(ctx, i);
    PairList z, p;
    std::vector<std::string> o;
    for (const auto& m : ctx.attributes().names())
      for (const auto& c : ctx.conditions().names()) {
        if (rng() % 2) z.push_back({m, c});
        if (rng() % 2) p.push_back({m, c});
      }
    for (const auto& g : ctx.objects().names())
      if (rng() % 2) o.push_back(g);
    ok = ok && derivation_transfer_check(ctx, z, p, o).all();
    ok = ok && merged_features(ctx, features(ctx), z) ==
                   features(augment(ctx, z).context);
    if (!ok) break;
  }
  report(9, ok,
         "200 random 3x3x3 contexts: base soundness, derivation transfer "
         "clauses, incremental feature merge");
}

void criterion10(const TriadicContext& ctx) {
  auto aci = cai_base(ctx, Kind::ACI, false);
  auto goal = parse_implication(ctx, "{P} -[{a,b,c}]-> {K}");
  const std::set<std::string> allowed{
      "Assumption",     "Non-constraint", "Reflexivity",
      "Augmentation",   "Transitivity",   "Conditional composition",
      "Decomposition",  "Pseudotransitivity", "Additivity",
      "Accumulation",   "Simplification"};
  bool ok = false;
  std::size_t steps = 0;
  try {
    auto t = trace(ctx, aci, goal);
    steps = t.steps.size();
    ok = steps <= 6 && replay(ctx, aci, t, goal);
    for (const auto& s : t.steps) ok = ok && allowed.count(s.rule) > 0;
  } catch (const Error&) {
    ok = false;
  }
  report(10, ok,
         "trace of the reference goal replays in " + std::to_string(steps) +
             " steps (<= 6) using only the rule names");
}

}  // namespace

int main() {
  const auto& ctx = running();
  criterion1(ctx);
  criterion2(ctx);
  criterion3(ctx);
  criterion4(ctx);
  criterion5(ctx);
  criterion6(ctx);
  criterion7(ctx);
  criterion8(ctx);
  criterion9();
  criterion10(ctx);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
