#include "triadic/implication.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "json.hpp"

namespace triadic {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::BCAI: return "bcai";
    case Kind::BACI: return "baci";
    case Kind::CAI: return "cai";
    case Kind::ACI: return "aci";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& s) {
  if (s == "bcai" || s == "BCAI") return Kind::BCAI;
  if (s == "baci" || s == "BACI") return Kind::BACI;
  if (s == "cai" || s == "CAI") return Kind::CAI;
  if (s == "aci" || s == "ACI") return Kind::ACI;
  return std::nullopt;
}

bool is_biedermann(Kind k) { return k == Kind::BCAI || k == Kind::BACI; }
bool premise_on_attributes(Kind k) {
  return k == Kind::BCAI || k == Kind::CAI;
}

int ImplicationBase::size() const {
  int n = 0;
  for (const auto& i : items) n += implication_size(i);
  return n;
}

const Universe& premise_universe(const TriadicContext& ctx, Kind k) {
  return premise_on_attributes(k) ? ctx.attributes() : ctx.conditions();
}

const Universe& constraint_universe(const TriadicContext& ctx, Kind k) {
  return premise_on_attributes(k) ? ctx.conditions() : ctx.attributes();
}

namespace {

// Support of an attribute set X under condition set C (or the mirrored
// reading for condition-premise kinds).
Mask support(const TriadicContext& ctx, Kind k, Mask X, Mask C) {
  return premise_on_attributes(k) ? ctx.ext_rect(X, C) : ctx.ext_rect(C, X);
}

}  // namespace

bool is_valid(const TriadicContext& ctx, const Implication& imp) {
  if (is_biedermann(imp.kind))
    return subset(support(ctx, imp.kind, imp.premise, imp.constraint),
                  support(ctx, imp.kind, imp.conclusion, imp.constraint));
  for (Mask rest = imp.constraint; rest; rest &= rest - 1) {
    Mask c = bit(std::countr_zero(rest));
    if (!subset(support(ctx, imp.kind, imp.premise, c),
                support(ctx, imp.kind, imp.conclusion, c)))
      return false;
  }
  return true;
}

std::vector<Implication> decompose_cai(const Implication& imp) {
  if (is_biedermann(imp.kind))
    throw KindError("decompose_cai expects a CAI or ACI implication");
  Kind unit = imp.kind == Kind::CAI ? Kind::BCAI : Kind::BACI;
  std::vector<Implication> out;
  for (Mask rest = imp.constraint; rest; rest &= rest - 1)
    out.push_back(
        {unit, imp.premise, imp.conclusion, bit(std::countr_zero(rest))});
  return out;
}

std::vector<Implication> null_support_closure(const TriadicContext& ctx,
                                              const Implication& imp) {
  if (imp.kind != Kind::BCAI)
    throw KindError("null_support_closure expects a BCAI implication");
  Mask fullM = ctx.attributes().full();
  std::set<Implication> out{imp};
  std::deque<Implication> work{imp};
  while (!work.empty()) {
    Implication cur = work.front();
    work.pop_front();
    std::set<Implication> cands;
    Mask pu = cur.premise | cur.conclusion;
    if (cur.constraint) {
      // (1) any empty-support subset of premise ∪ conclusion implies the
      // rest of the attributes.
      for (Mask X = 0;; X = (X - pu) & pu) {
        if (ctx.ext_rect(X, cur.constraint) == 0)
          cands.insert({Kind::BCAI, X, fullM & ~X, cur.constraint});
        if (X == pu) break;
      }
      // (2) an empty-support conclusion difference flips the implication.
      Mask diff = cur.conclusion & ~cur.premise;
      if (diff && ctx.ext_rect(diff, cur.constraint) == 0)
        cands.insert({Kind::BCAI, cur.conclusion, cur.premise, cur.constraint});
    }
    // (3) the constraint restricts to any proper non-empty sub-constraint
    // under which the premise loses all support.
    Mask C = cur.constraint;
    for (Mask C1 = 0;; C1 = (C1 - C) & C) {
      if (C1 && C1 != C && ctx.ext_rect(cur.premise, C1) == 0)
        cands.insert({Kind::BCAI, cur.premise, cur.conclusion, C1});
      if (C1 == C) break;
    }
    for (const auto& c : cands)
      if (out.insert(c).second) work.push_back(c);
  }
  out.erase(imp);
  std::vector<Implication> res(out.begin(), out.end());
  std::sort(res.begin(), res.end(), [](const Implication& a,
                                       const Implication& b) {
    if (a.premise != b.premise) return shortlex_less(a.premise, b.premise);
    if (a.constraint != b.constraint)
      return shortlex_less(a.constraint, b.constraint);
    return shortlex_less(a.conclusion, b.conclusion);
  });
  return res;
}

// ---------- text form ----------
namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!eat(tok))
      throw ParseError("expected '" + tok + "' at position " +
                       std::to_string(i) + " in implication text");
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
};

std::vector<std::string> parse_set(Cursor& c) {
  c.expect("{");
  std::vector<std::string> names;
  c.skip_ws();
  if (c.eat("}")) return names;
  while (true) {
    c.skip_ws();
    std::string n;
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) ||
            c.s[c.i] == '_'))
      n += c.s[c.i++];
    if (n.empty())
      throw ParseError("expected a name at position " + std::to_string(c.i) +
                       " in implication text");
    names.push_back(n);
    c.skip_ws();
    if (c.eat("}")) return names;
    c.expect(",");
  }
}

std::string format_set(const Universe& u, Mask m) {
  std::string out = "{";
  bool first = true;
  for (Mask rest = m; rest; rest &= rest - 1) {
    if (!first) out += ",";
    out += u.name(std::countr_zero(rest));
    first = false;
  }
  return out + "}";
}

// Which side of the context do these names live on?  true = attributes.
std::optional<bool> side_of(const TriadicContext& ctx,
                            const std::vector<std::string>& names) {
  if (names.empty()) return std::nullopt;
  bool m = true, c = true;
  for (const auto& n : names) {
    m = m && ctx.attributes().contains(n);
    c = c && ctx.conditions().contains(n);
  }
  if (m && !c) return true;
  if (c && !m) return false;
  return std::nullopt;  // ambiguous (or unknown names: resolved later)
}

}  // namespace

std::string format_implication(const TriadicContext& ctx,
                               const Implication& imp) {
  const Universe& pu = premise_universe(ctx, imp.kind);
  const Universe& cu = constraint_universe(ctx, imp.kind);
  if (is_biedermann(imp.kind))
    return "(" + format_set(pu, imp.premise) + " -> " +
           format_set(pu, imp.conclusion) + ")_" +
           format_set(cu, imp.constraint);
  return format_set(pu, imp.premise) + " -[" +
         format_set(cu, imp.constraint) + "]-> " +
         format_set(pu, imp.conclusion);
}

Implication parse_implication(const TriadicContext& ctx,
                              const std::string& text,
                              std::optional<Kind> kind) {
  Cursor c{text};
  c.skip_ws();
  bool biedermann_syntax = c.s[c.i] == '(';
  std::vector<std::string> prem, concl, constr;
  if (biedermann_syntax) {
    c.expect("(");
    prem = parse_set(c);
    c.expect("->");
    concl = parse_set(c);
    c.expect(")");
    c.expect("_");
    constr = parse_set(c);
  } else {
    prem = parse_set(c);
    c.expect("-[");
    constr = parse_set(c);
    c.expect("]->");
    concl = parse_set(c);
  }
  if (!c.at_end())
    throw ParseError("trailing text in implication: '" + text + "'");

  Kind k;
  if (kind) {
    k = *kind;
    if (is_biedermann(k) != biedermann_syntax)
      throw ParseError("implication syntax does not match kind " +
                       kind_name(k));
  } else {
    // Infer the axis from name membership; default to the attribute side.
    std::optional<bool> on_attrs = side_of(ctx, prem);
    if (!on_attrs) on_attrs = side_of(ctx, concl);
    if (!on_attrs) {
      std::optional<bool> cs = side_of(ctx, constr);
      if (cs) on_attrs = !*cs;
    }
    bool attrs_side = on_attrs.value_or(true);
    k = biedermann_syntax ? (attrs_side ? Kind::BCAI : Kind::BACI)
                          : (attrs_side ? Kind::CAI : Kind::ACI);
  }
  const Universe& pu = premise_universe(ctx, k);
  const Universe& cu = constraint_universe(ctx, k);
  return Implication{k, pu.mask_of(prem), pu.mask_of(concl),
                     cu.mask_of(constr)};
}

// ---------- JSON form ----------
std::string base_to_json(const TriadicContext& ctx,
                         const ImplicationBase& base) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(base.kind);
  const Universe& pu = premise_universe(ctx, base.kind);
  const Universe& cu = constraint_universe(ctx, base.kind);
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& imp : base.items) {
    nlohmann::ordered_json ji;
    ji["premise"] = pu.names_of(imp.premise);
    ji["conclusion"] = pu.names_of(imp.conclusion);
    ji["constraint"] = cu.names_of(imp.constraint);
    j["items"].push_back(ji);
  }
  j["metrics"] = {{"cardinality", base.cardinality()}, {"size", base.size()}};
  return j.dump(2) + "\n";
}

ImplicationBase base_from_json(const TriadicContext& ctx,
                               const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid base JSON: ") + e.what());
  }
  auto k = kind_from_name(j.value("kind", ""));
  if (!k) throw ParseError("base JSON: unknown kind");
  ImplicationBase base;
  base.kind = *k;
  const Universe& pu = premise_universe(ctx, base.kind);
  const Universe& cu = constraint_universe(ctx, base.kind);
  if (!j.contains("items") || !j["items"].is_array())
    throw ParseError("base JSON: missing items array");
  for (const auto& ji : j["items"]) {
    Implication imp;
    imp.kind = base.kind;
    imp.premise = pu.mask_of(ji.value("premise", std::vector<std::string>{}));
    imp.conclusion =
        pu.mask_of(ji.value("conclusion", std::vector<std::string>{}));
    imp.constraint =
        cu.mask_of(ji.value("constraint", std::vector<std::string>{}));
    base.items.push_back(imp);
  }
  return base;
}

}  // namespace triadic
