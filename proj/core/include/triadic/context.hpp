#pragma once
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "triadic/errors.hpp"

namespace triadic {

// Subsets of a universe are bitmasks over the universe's element indices.
using Mask = std::uint64_t;

inline int set_size(Mask m) { return std::popcount(m); }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask bit(int i) { return Mask{1} << i; }

// Lexicographic order on the ascending index sequences of two masks
// (e.g. {0,2} < {1}, {0} < {0,1}).  Used for deterministic listings.
bool seq_lex_less(Mask a, Mask b);

// Shortlex order: first by cardinality, then by ascending index sequence.
bool shortlex_less(Mask a, Mask b);

// An ordered, duplicate-free universe of named elements.  Element order is
// first-appearance order; at most 64 elements.
class Universe {
 public:
  Universe() = default;
  explicit Universe(const std::vector<std::string>& names);

  // Appends the name if absent; returns its index either way.
  int add(const std::string& name);
  bool contains(const std::string& name) const;
  // Throws ReferenceError for unknown names.
  int index_of(const std::string& name) const;
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Mask full() const;
  Mask mask_of(const std::vector<std::string>& xs) const;
  std::vector<std::string> names_of(Mask m) const;
  bool operator==(const Universe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// A rectangle A×C with A a set of attributes and C a set of conditions.
struct Product {
  Mask attrs = 0;
  Mask conds = 0;
  auto operator<=>(const Product&) const = default;
};

// Canonical product order: (|attrs|, attrs, |conds|, conds) shortlex.
bool product_canonical_less(const Product& a, const Product& b);

enum class ContextFormat { Triples, Slices };

// A finite triadic context (G, M, C, I): objects, attributes, conditions and
// a ternary incidence relation.  Immutable once built; every operation is a
// pure function, safe for concurrent use.
class TriadicContext {
 public:
  TriadicContext() = default;
  TriadicContext(Universe objects, Universe attributes, Universe conditions);

  const Universe& objects() const { return objects_; }
  const Universe& attributes() const { return attributes_; }
  const Universe& conditions() const { return conditions_; }

  void add_triple_indices(int g, int m, int c);

  bool incident(int g, int m, int c) const;
  // Attribute mask of object g under condition c.
  Mask attrs_at(int g, int c) const;
  std::size_t triple_count() const;

  static TriadicContext parse(std::istream& in, ContextFormat format);
  static TriadicContext parse_string(const std::string& text,
                                     ContextFormat format);
  // Detects the format from the header line.
  static TriadicContext parse_auto(std::istream& in);
  std::string to_triples() const;
  std::string to_slices() const;

  // ---- derivations (mask level) ----
  // (A×C)^(1): objects incident to every attribute of A under every
  // condition of C.
  Mask ext_rect(Mask A, Mask C) const;
  // (O×C)^(2): attributes shared by every object of O under every c in C.
  Mask der_attrs(Mask O, Mask C) const;
  // (O×A)^(3): conditions under which every object of O has all of A.
  Mask der_conds(Mask O, Mask A) const;
  // A^{(1,2,C)(1,2,C)}
  Mask closure_12C(Mask A, Mask C) const;
  // C^{(1,3,A)(1,3,A)}
  Mask closure_13A(Mask C, Mask A) const;
  // O^(1): attribute-condition pairs common to every object of O, as a
  // per-condition family of attribute masks indexed by condition.
  std::vector<Mask> common_pairs(Mask O) const;
  // P^(1) for an arbitrary pair set given as per-condition attribute masks.
  Mask objects_of_pairs(const std::vector<Mask>& pairs) const;

  // ---- derivations (name level, axis-generic) ----
  // i-derivation: axis in {1,2,3}; returns the pairs on the remaining two
  // axes (in axis order) related to every element of the input.
  std::vector<std::pair<std::string, std::string>> derive_outer(
      int axis, const std::vector<std::string>& input) const;
  // (i,j,S)-derivation: fixes fixed_set on fixed_axis, maps input on
  // input_axis to the related elements of the third axis.
  std::vector<std::string> derive_conditional(
      int fixed_axis, const std::vector<std::string>& fixed_set,
      int input_axis, const std::vector<std::string>& input) const;

  // Name-level conveniences.
  Mask attr_mask(const std::vector<std::string>& xs) const;
  Mask cond_mask(const std::vector<std::string>& xs) const;

 private:
  Universe objects_, attributes_, conditions_;
  // cells_[g * |C| + c] = attribute mask of object g under condition c.
  std::vector<Mask> cells_;
  void ensure_cells();
  const Universe& universe_of(int axis) const;
};

}  // namespace triadic
