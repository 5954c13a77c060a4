#include "triadic/context.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace triadic {

bool seq_lex_less(Mask a, Mask b) {
  while (a || b) {
    if (!a) return true;   // a is a proper prefix of b
    if (!b) return false;
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

bool shortlex_less(Mask a, Mask b) {
  if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
  return seq_lex_less(a, b);
}

bool product_canonical_less(const Product& a, const Product& b) {
  if (a.attrs != b.attrs) return shortlex_less(a.attrs, b.attrs);
  return shortlex_less(a.conds, b.conds);
}

Universe::Universe(const std::vector<std::string>& names) {
  for (const auto& n : names) add(n);
}

int Universe::add(const std::string& name) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  if (names_.size() >= 64)
    throw SizeGuardError("universe exceeds 64 elements");
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

bool Universe::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int Universe::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw ReferenceError("unknown name: " + name);
}

Mask Universe::full() const {
  return names_.empty() ? 0 : (~Mask{0} >> (64 - names_.size()));
}

Mask Universe::mask_of(const std::vector<std::string>& xs) const {
  Mask m = 0;
  for (const auto& x : xs) m |= bit(index_of(x));
  return m;
}

std::vector<std::string> Universe::names_of(Mask m) const {
  std::vector<std::string> out;
  for (Mask rest = m; rest; rest &= rest - 1)
    out.push_back(names_[std::countr_zero(rest)]);
  return out;
}

TriadicContext::TriadicContext(Universe objects, Universe attributes,
                               Universe conditions)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      conditions_(std::move(conditions)) {
  ensure_cells();
}

void TriadicContext::ensure_cells() {
  cells_.resize(static_cast<std::size_t>(objects_.size()) *
                    std::max(1, conditions_.size()),
                0);
}

void TriadicContext::add_triple_indices(int g, int m, int c) {
  cells_[static_cast<std::size_t>(g) * conditions_.size() + c] |= bit(m);
}

bool TriadicContext::incident(int g, int m, int c) const {
  return (attrs_at(g, c) >> m) & 1;
}

Mask TriadicContext::attrs_at(int g, int c) const {
  return cells_[static_cast<std::size_t>(g) * conditions_.size() + c];
}

std::size_t TriadicContext::triple_count() const {
  std::size_t n = 0;
  for (Mask m : cells_) n += static_cast<std::size_t>(set_size(m));
  return n;
}

Mask TriadicContext::ext_rect(Mask A, Mask C) const {
  Mask out = 0;
  for (int g = 0; g < objects_.size(); ++g) {
    bool ok = true;
    for (Mask rest = C; ok && rest; rest &= rest - 1)
      ok = subset(A, attrs_at(g, std::countr_zero(rest)));
    if (ok) out |= bit(g);
  }
  return out;
}

Mask TriadicContext::der_attrs(Mask O, Mask C) const {
  Mask out = attributes_.full();
  for (Mask go = O; go; go &= go - 1)
    for (Mask rest = C; rest; rest &= rest - 1)
      out &= attrs_at(std::countr_zero(go), std::countr_zero(rest));
  return out;
}

Mask TriadicContext::der_conds(Mask O, Mask A) const {
  Mask out = 0;
  for (int c = 0; c < conditions_.size(); ++c) {
    bool ok = true;
    for (Mask go = O; ok && go; go &= go - 1)
      ok = subset(A, attrs_at(std::countr_zero(go), c));
    if (ok) out |= bit(c);
  }
  return out;
}

Mask TriadicContext::closure_12C(Mask A, Mask C) const {
  return der_attrs(ext_rect(A, C), C);
}

Mask TriadicContext::closure_13A(Mask C, Mask A) const {
  return der_conds(ext_rect(A, C), A);
}

std::vector<Mask> TriadicContext::common_pairs(Mask O) const {
  std::vector<Mask> out(conditions_.size(), attributes_.full());
  for (int c = 0; c < conditions_.size(); ++c)
    for (Mask go = O; go; go &= go - 1)
      out[c] &= attrs_at(std::countr_zero(go), c);
  return out;
}

Mask TriadicContext::objects_of_pairs(const std::vector<Mask>& pairs) const {
  Mask out = 0;
  for (int g = 0; g < objects_.size(); ++g) {
    bool ok = true;
    for (int c = 0; ok && c < conditions_.size(); ++c)
      ok = subset(pairs[c], attrs_at(g, c));
    if (ok) out |= bit(g);
  }
  return out;
}

const Universe& TriadicContext::universe_of(int axis) const {
  switch (axis) {
    case 1: return objects_;
    case 2: return attributes_;
    case 3: return conditions_;
  }
  throw Error("axis must be 1, 2 or 3");
}

std::vector<std::pair<std::string, std::string>> TriadicContext::derive_outer(
    int axis, const std::vector<std::string>& input) const {
  const Universe& u = universe_of(axis);
  std::vector<int> in;
  for (const auto& x : input) in.push_back(u.index_of(x));
  // The two remaining axes in axis order.
  int a1 = axis == 1 ? 2 : 1;
  int a2 = axis == 3 ? 2 : 3;
  const Universe& u1 = universe_of(a1);
  const Universe& u2 = universe_of(a2);
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < u1.size(); ++i)
    for (int j = 0; j < u2.size(); ++j) {
      bool ok = true;
      for (int x : in) {
        int g, m, c;
        if (axis == 1) g = x, m = i, c = j;
        else if (axis == 2) g = i, m = x, c = j;
        else g = i, m = j, c = x;
        if (!incident(g, m, c)) { ok = false; break; }
      }
      if (ok) out.emplace_back(u1.name(i), u2.name(j));
    }
  return out;
}

std::vector<std::string> TriadicContext::derive_conditional(
    int fixed_axis, const std::vector<std::string>& fixed_set, int input_axis,
    const std::vector<std::string>& input) const {
  if (fixed_axis == input_axis) throw Error("fixed and input axes coincide");
  const Universe& uf = universe_of(fixed_axis);
  const Universe& ui = universe_of(input_axis);
  int out_axis = 6 - fixed_axis - input_axis;
  const Universe& uo = universe_of(out_axis);
  std::vector<int> fx, in;
  for (const auto& x : fixed_set) fx.push_back(uf.index_of(x));
  for (const auto& x : input) in.push_back(ui.index_of(x));
  std::vector<std::string> out;
  for (int t = 0; t < uo.size(); ++t) {
    bool ok = true;
    for (std::size_t a = 0; ok && a < fx.size(); ++a)
      for (std::size_t b = 0; ok && b < in.size(); ++b) {
        int coord[4] = {0, 0, 0, 0};
        coord[fixed_axis] = fx[a];
        coord[input_axis] = in[b];
        coord[out_axis] = t;
        ok = incident(coord[1], coord[2], coord[3]);
      }
    if (ok) out.push_back(uo.name(t));
  }
  return out;
}

Mask TriadicContext::attr_mask(const std::vector<std::string>& xs) const {
  return attributes_.mask_of(xs);
}

Mask TriadicContext::cond_mask(const std::vector<std::string>& xs) const {
  return conditions_.mask_of(xs);
}

// ---------- parsing ----------
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

std::vector<std::string> split_names(const std::string& s, int line_no) {
  std::vector<std::string> out;
  std::string body = trim(s);
  if (body.empty()) return out;
  for (const auto& piece : split(body, ',')) {
    std::string n = trim(piece);
    if (n.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty name");
    out.push_back(n);
  }
  return out;
}

struct RawTriple {
  std::string g, m, c;
};

}  // namespace

TriadicContext TriadicContext::parse(std::istream& in, ContextFormat format) {
  Universe G, M, C;
  bool gG = false, gM = false, gC = false;
  std::vector<RawTriple> triples;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  const std::string want_header =
      format == ContextFormat::Triples ? "#triadic v1" : "#triadic-slices v1";

  auto handle_universe_segment = [&](const std::string& seg, int no) -> bool {
    std::string s = trim(seg);
    if (s.size() < 2 || s[1] != ':') return false;
    char tag = s[0];
    std::vector<std::string> names = split_names(s.substr(2), no);
    if (tag == 'G') {
      for (auto& n : names) G.add(n);
      gG = true;
    } else if (tag == 'M') {
      for (auto& n : names) M.add(n);
      gM = true;
    } else if (tag == 'C') {
      for (auto& n : names) C.add(n);
      gC = true;
    } else {
      return false;
    }
    return true;
  };

  std::vector<std::vector<std::vector<std::string>>> slice_rows;  // per object
  std::vector<std::string> slice_objects;

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty()) continue;
    if (!header_seen) {
      if (s != want_header)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header '" + want_header + "'");
      header_seen = true;
      continue;
    }
    if (s[0] == '#') continue;  // comment
    // Universe line(s): one or more ';'-separated "X: ..." segments.
    if (s.size() >= 2 && s[1] == ':' &&
        (s[0] == 'G' || s[0] == 'M' || s[0] == 'C')) {
      for (const auto& seg : split(s, ';'))
        if (!trim(seg).empty() && !handle_universe_segment(seg, line_no))
          throw ParseError("line " + std::to_string(line_no) +
                           ": malformed universe segment '" + trim(seg) + "'");
      continue;
    }
    if (format == ContextFormat::Triples) {
      std::vector<std::string> parts = split(s, ',');
      if (parts.size() != 3)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'object,attribute,condition'");
      triples.push_back({trim(parts[0]), trim(parts[1]), trim(parts[2])});
      for (const auto* p : {&triples.back().g, &triples.back().m,
                            &triples.back().c})
        if (p->empty())
          throw ParseError("line " + std::to_string(line_no) + ": empty name");
    } else {
      // slices row: object | cell | cell | ...
      std::vector<std::string> parts = split(s, '|');
      if (parts.size() < 1)
        throw ParseError("line " + std::to_string(line_no) + ": empty row");
      std::string obj = trim(parts[0]);
      if (obj.empty())
        throw ParseError("line " + std::to_string(line_no) +
                         ": missing object name");
      std::vector<std::vector<std::string>> cells;
      for (std::size_t i = 1; i < parts.size(); ++i)
        cells.push_back(split_names(parts[i], line_no));
      slice_objects.push_back(obj);
      slice_rows.push_back(std::move(cells));
    }
  }
  if (!header_seen)
    throw ParseError("missing header '" + want_header + "'");

  if (format == ContextFormat::Slices) {
    if (!gC) throw ParseError("slices format requires a 'C:' line");
    for (std::size_t r = 0; r < slice_objects.size(); ++r) {
      if (static_cast<int>(slice_rows[r].size()) > C.size())
        throw ReferenceError("row for object '" + slice_objects[r] +
                             "' has more cells than declared conditions");
      for (std::size_t ci = 0; ci < slice_rows[r].size(); ++ci)
        for (const auto& a : slice_rows[r][ci]) {
          if (gM && !M.contains(a))
            throw ReferenceError("undeclared attribute '" + a + "'");
          triples.push_back({slice_objects[r], a, C.name(static_cast<int>(ci))});
        }
    }
    for (const auto& o : slice_objects) G.add(o);
  }

  // First-appearance order: declared universes first, then body order.
  for (const auto& t : triples) {
    G.add(t.g);
    M.add(t.m);
    C.add(t.c);
  }
  (void)gG;
  (void)gM;
  TriadicContext ctx(G, M, C);
  for (const auto& t : triples)
    ctx.add_triple_indices(G.index_of(t.g), M.index_of(t.m), C.index_of(t.c));
  return ctx;
}

TriadicContext TriadicContext::parse_string(const std::string& text,
                                            ContextFormat format) {
  std::istringstream in(text);
  return parse(in, format);
}

TriadicContext TriadicContext::parse_auto(std::istream& in) {
  std::ostringstream whole;
  whole << in.rdbuf();
  std::string text = whole.str();
  std::istringstream probe(text);
  std::string first;
  while (std::getline(probe, first)) {
    if (!trim(first).empty()) break;
  }
  ContextFormat f = trim(first) == "#triadic-slices v1" ? ContextFormat::Slices
                                                        : ContextFormat::Triples;
  return parse_string(text, f);
}

std::string TriadicContext::to_triples() const {
  std::ostringstream out;
  out << "#triadic v1\n";
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += xs[i];
    }
    return s;
  };
  out << "G: " << join(objects_.names()) << "\n";
  out << "M: " << join(attributes_.names()) << "\n";
  out << "C: " << join(conditions_.names()) << "\n";
  for (int g = 0; g < objects_.size(); ++g)
    for (int c = 0; c < conditions_.size(); ++c)
      for (Mask rest = attrs_at(g, c); rest; rest &= rest - 1)
        out << objects_.name(g) << ','
            << attributes_.name(std::countr_zero(rest)) << ','
            << conditions_.name(c) << "\n";
  return out.str();
}

std::string TriadicContext::to_slices() const {
  std::ostringstream out;
  out << "#triadic-slices v1\n";
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += xs[i];
    }
    return s;
  };
  out << "C: " << join(conditions_.names()) << "\n";
  out << "M: " << join(attributes_.names()) << "\n";
  for (int g = 0; g < objects_.size(); ++g) {
    out << objects_.name(g);
    for (int c = 0; c < conditions_.size(); ++c)
      out << " | " << join(attributes_.names_of(attrs_at(g, c)));
    out << "\n";
  }
  return out.str();
}

}  // namespace triadic
