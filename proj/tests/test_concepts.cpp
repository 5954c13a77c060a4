#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"
#include "triadic/augmentation.hpp"
#include "triadic/concepts.hpp"

using namespace triadic;
using namespace testutil;

TEST_CASE("is_concept reference checks") {
  const auto& ctx = running();
  CHECK(is_concept(ctx, objs(ctx, "12345"), attrs(ctx, "d"), conds(ctx, "PN")));
  CHECK_FALSE(
      is_concept(ctx, objs(ctx, "2"), attrs(ctx, "d"), conds(ctx, "PN")));
  CHECK(is_concept(ctx, ctx.objects().full(), 0, ctx.conditions().full()));
}

TEST_CASE("running context has 33 concepts, both enumerations agree") {
  const auto& ctx = running();
  auto e = enumerate_concepts(ctx);
  auto b = brute_force_concepts(ctx);
  CHECK(e.size() == 33);
  CHECK(e.concepts == b.concepts);
}

TEST_CASE("augmenting by d x {P} yields 34 concepts") {
  const auto& ctx = running();
  auto aug = augment(ctx, {{"d", "P"}});
  auto e = enumerate_concepts(aug.context);
  auto b = brute_force_concepts(aug.context);
  CHECK(e.size() == 34);
  CHECK(e.concepts == b.concepts);
}

TEST_CASE("non-rectangular augmentation: enumerations agree") {
  // Z = (d x PN) union (ac x PRS)
  const auto& ctx = running();
  PairList z;
  for (const char* c : {"P", "N"}) z.push_back({"d", c});
  for (const char* a : {"a", "c"})
    for (const char* c : {"P", "R", "S"}) z.push_back({a, c});
  auto aug = augment(ctx, z);
  auto e = enumerate_concepts(aug.context);
  auto b = brute_force_concepts(aug.context);
  CHECK(e.concepts == b.concepts);
}

TEST_CASE("empty incidence: the vacuous-axis concepts are present") {
  TriadicContext ctx(Universe({"g1", "g2"}), Universe({"m1", "m2"}),
                     Universe({"c1"}));
  auto cs = enumerate_concepts(ctx);
  auto has = [&](Mask O, Mask A, Mask C) {
    return std::find(cs.concepts.begin(), cs.concepts.end(),
                     TriadicConcept{O, A, C}) != cs.concepts.end();
  };
  CHECK(has(ctx.objects().full(), ctx.attributes().full(), 0));
  CHECK(has(ctx.objects().full(), 0, ctx.conditions().full()));
  CHECK(has(0, ctx.attributes().full(), ctx.conditions().full()));
  CHECK(cs.concepts == brute_force_concepts(ctx).concepts);
}

TEST_CASE("single-triple context") {
  TriadicContext ctx(Universe({"o"}), Universe({"m"}), Universe({"c"}));
  ctx.add_triple_indices(0, 0, 0);
  auto cs = brute_force_concepts(ctx);
  CHECK(std::find(cs.concepts.begin(), cs.concepts.end(),
                  TriadicConcept{1, 1, 1}) != cs.concepts.end());
  CHECK(enumerate_concepts(ctx).concepts == cs.concepts);
}

TEST_CASE("features: membership reference checks") {
  const auto& ctx = running();
  auto fs = features(ctx);
  auto has = [&](const Product& p) {
    return std::find(fs.begin(), fs.end(), p) != fs.end();
  };
  CHECK(has(prod(ctx, "d", "PN")));
  CHECK_FALSE(has(prod(ctx, "d", "P")));
  CHECK(fs.size() == 33);
}

TEST_CASE("every concept satisfies the three fixpoint equations") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    auto ctx = random_context(rng, 4, 3, 3);
    auto cs = enumerate_concepts(ctx);
    std::set<Product> feats;
    for (const auto& c : cs.concepts) {
      CHECK(ctx.ext_rect(c.intent, c.modus) == c.extent);
      CHECK(ctx.der_attrs(c.extent, c.modus) == c.intent);
      CHECK(ctx.der_conds(c.extent, c.intent) == c.modus);
      feats.insert(c.feature());
    }
    // the feature determines the concept
    CHECK(feats.size() == cs.size());
    CHECK(cs.concepts == brute_force_concepts(ctx).concepts);
  }
}

TEST_CASE("enumeration order is canonical and duplicate-free") {
  const auto& ctx = running();
  auto cs = enumerate_concepts(ctx);
  for (std::size_t i = 1; i < cs.concepts.size(); ++i)
    CHECK(cs.concepts[i - 1] != cs.concepts[i]);
  auto sorted = cs.concepts;
  std::sort(sorted.begin(), sorted.end(),
            [](const TriadicConcept& x, const TriadicConcept& y) {
              if (x.intent != y.intent) return seq_lex_less(x.intent, y.intent);
              return seq_lex_less(x.modus, y.modus);
            });
  CHECK(sorted == cs.concepts);
}

TEST_CASE("brute force guard rejects oversized scans") {
  auto mk = [](const char* p, int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(p + std::to_string(i));
    return Universe(v);
  };
  TriadicContext big(mk("g", 1), mk("m", 20), mk("c", 20));
  CHECK_THROWS_AS(brute_force_concepts(big), SizeGuardError);
}
