#pragma once
#include <optional>
#include <string>
#include <vector>

#include "triadic/context.hpp"

namespace triadic {

// BCAI/BACI: Biedermann implications, read at the constraint as a whole.
// CAI/ACI: implications quantified over the constraint's singletons.
// BCAI/CAI relate attribute sets under a condition constraint; BACI/ACI
// relate condition sets under an attribute constraint.
enum class Kind { BCAI, BACI, CAI, ACI };

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& s);
bool is_biedermann(Kind k);  // BCAI or BACI
bool premise_on_attributes(Kind k);  // BCAI or CAI

struct Implication {
  Kind kind = Kind::BCAI;
  Mask premise = 0;
  Mask conclusion = 0;
  Mask constraint = 0;
  auto operator<=>(const Implication&) const = default;
};

inline int implication_size(const Implication& i) {
  return set_size(i.premise) + set_size(i.conclusion) + set_size(i.constraint);
}

struct ImplicationBase {
  Kind kind = Kind::BCAI;
  std::vector<Implication> items;
  int size() const;  // Σ (|premise| + |conclusion| + |constraint|)
  int cardinality() const { return static_cast<int>(items.size()); }
};

// Universe holding an implication's premise/conclusion (resp. constraint).
const Universe& premise_universe(const TriadicContext& ctx, Kind k);
const Universe& constraint_universe(const TriadicContext& ctx, Kind k);

bool is_valid(const TriadicContext& ctx, const Implication& imp);

// Splits a CAI/ACI into one Biedermann implication per constraint element.
std::vector<Implication> decompose_cai(const Implication& imp);

// The further valid implications licensed by the null-support rules, chased
// to a fixpoint: (1) any empty-support subset of premise ∪ conclusion implies
// everything else; (2) an empty-support conclusion difference flips the
// implication; (3) the constraint restricts to any sub-constraint under which
// the premise has empty support.  The input itself is not returned.
std::vector<Implication> null_support_closure(const TriadicContext& ctx,
                                              const Implication& imp);

// ---- text form ----
// set      := "{}" | "{" name ("," name)* "}"
// BCAI/BACI: "(" set "->" set ")_" set
// CAI/ACI  : set "-[" set "]->" set
// The axis (attribute- vs condition-premise) is inferred from name
// membership unless a kind is supplied.
std::string format_implication(const TriadicContext& ctx,
                               const Implication& imp);
Implication parse_implication(const TriadicContext& ctx,
                              const std::string& text,
                              std::optional<Kind> kind = std::nullopt);

// ---- JSON form ----
// {"kind": "...", "items": [{"premise": [...], "conclusion": [...],
//  "constraint": [...]}, ...], "metrics": {"cardinality": n, "size": m}}
std::string base_to_json(const TriadicContext& ctx,
                         const ImplicationBase& base);
ImplicationBase base_from_json(const TriadicContext& ctx,
                               const std::string& text);

}  // namespace triadic
