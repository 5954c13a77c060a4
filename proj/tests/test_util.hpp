#pragma once
// Shared helpers for the test suite: fixture loading, name-based set
// construction, and a seeded random-context generator.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "triadic/context.hpp"

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "."
#endif

namespace testutil {

using namespace triadic;

inline TriadicContext load_fixture(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture: " + name);
  return TriadicContext::parse_auto(in);
}

inline const TriadicContext& running() {
  static TriadicContext ctx = load_fixture("running.triples");
  return ctx;
}

// Mask from a compact string of single-character names, e.g. "abd".
inline Mask chars(const Universe& u, const std::string& s) {
  Mask m = 0;
  for (char ch : s) m |= bit(u.index_of(std::string(1, ch)));
  return m;
}

inline Mask attrs(const TriadicContext& ctx, const std::string& s) {
  return chars(ctx.attributes(), s);
}
inline Mask conds(const TriadicContext& ctx, const std::string& s) {
  return chars(ctx.conditions(), s);
}
inline Mask objs(const TriadicContext& ctx, const std::string& s) {
  return chars(ctx.objects(), s);
}

// Product from "attrs x conds" in compact form; "O" denotes the empty set.
inline Product prod(const TriadicContext& ctx, const std::string& a,
                    const std::string& c) {
  return Product{a == "O" ? 0 : attrs(ctx, a), c == "O" ? 0 : conds(ctx, c)};
}

// Random context with the given axis sizes and incidence density.
inline TriadicContext random_context(std::mt19937& rng, int ng, int nm, int nc,
                                     double density = 0.5) {
  auto mk = [](const char* prefix, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return Universe(names);
  };
  TriadicContext ctx(mk("g", ng), mk("m", nm), mk("c", nc));
  std::bernoulli_distribution coin(density);
  for (int g = 0; g < ng; ++g)
    for (int m = 0; m < nm; ++m)
      for (int c = 0; c < nc; ++c)
        if (coin(rng)) ctx.add_triple_indices(g, m, c);
  return ctx;
}

inline Mask random_subset(std::mt19937& rng, Mask full) {
  std::uniform_int_distribution<Mask> d(0, ~Mask{0});
  return d(rng) & full;
}

}  // namespace testutil
