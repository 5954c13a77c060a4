// Command-line front-end for the triadic implication library.
//
// Exit codes: 0 success (check: valid), 1 domain error (check: invalid,
// derive: goal not entailed), 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triadic/augmentation.hpp"
#include "triadic/bases.hpp"
#include "triadic/concepts.hpp"
#include "triadic/context.hpp"
#include "triadic/implication.hpp"
#include "triadic/logic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace triadic;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TriadicContext load_context(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open context file: " + path);
  return TriadicContext::parse_auto(in);
}

std::string join_names(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += xs[i];
  }
  return out + "}";
}

json names_json(const Universe& u, Mask m) { return json(u.names_of(m)); }

json concept_json(const TriadicContext& ctx, const TriadicConcept& c) {
  return json{{"extent", names_json(ctx.objects(), c.extent)},
              {"intent", names_json(ctx.attributes(), c.intent)},
              {"modus", names_json(ctx.conditions(), c.modus)}};
}

json product_json(const TriadicContext& ctx, const Product& p) {
  return json{{"attributes", names_json(ctx.attributes(), p.attrs)},
              {"conditions", names_json(ctx.conditions(), p.conds)}};
}

std::string product_text(const TriadicContext& ctx, const Product& p) {
  return join_names(ctx.attributes().names_of(p.attrs)) + " x " +
         join_names(ctx.conditions().names_of(p.conds));
}

void emit(std::ostream& out, const json& j, bool text_format,
          const std::function<void(std::ostream&)>& text_writer) {
  if (text_format)
    text_writer(out);
  else
    out << j.dump(2) << "\n";
}

Kind parse_kind(const std::string& s) {
  auto k = kind_from_name(s);
  if (!k) throw UsageError("unknown kind: " + s);
  return *k;
}

Axis parse_axis(const std::string& s) {
  if (s == "m") return Axis::M;
  if (s == "c") return Axis::C;
  throw UsageError("unknown axis: " + s + " (expected m or c)");
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Triadic concept analysis: concepts, quasi-features and "
               "bases of conditional implications"};
  app.require_subcommand(1);

  std::string context_path, axis_s = "m", kind_s, variant = "complete";
  std::string format = "json", impl_s, goal_s, sigma_path;
  bool unit = false, relevant = false, count_only = false;

  auto add_common = [&](CLI::App* cmd, bool needs_context = true) {
    if (needs_context)
      cmd->add_option("context", context_path, "context file (triples or slices)")
          ->required();
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* concepts_cmd = app.add_subcommand("concepts", "list triadic concepts");
  add_common(concepts_cmd);
  concepts_cmd->add_flag("--count", count_only, "print the count only");

  auto* features_cmd = app.add_subcommand("features", "list features (intent x modus)");
  add_common(features_cmd);
  features_cmd->add_flag("--count", count_only, "print the count only");

  auto* quasi_cmd = app.add_subcommand("quasi-features", "list quasi-features");
  add_common(quasi_cmd);
  quasi_cmd->add_option("--axis", axis_s, "premise axis: m (attributes) or c (conditions)")
      ->check(CLI::IsMember({"m", "c"}));
  quasi_cmd->add_flag("--unit", unit, "restrict to unit quasi-features");
  quasi_cmd->add_flag("--relevant", relevant, "restrict to relevant quasi-features");
  quasi_cmd->add_flag("--count", count_only, "print the count only");

  auto* base_cmd = app.add_subcommand("base", "construct an implication base");
  add_common(base_cmd);
  base_cmd->add_option("--kind", kind_s, "bcai, baci, cai or aci")->required()
      ->check(CLI::IsMember({"bcai", "baci", "cai", "aci"}));
  base_cmd->add_option("--variant", variant,
                       "complete or minimal (bcai/baci); complete or optimal (cai/aci)")
      ->check(CLI::IsMember({"complete", "minimal", "optimal"}));

  auto* closure_cmd = app.add_subcommand(
      "closure", "closure of an implication's premise at its constraint");
  add_common(closure_cmd);
  closure_cmd->add_option("--impl", impl_s,
                          "implication supplying premise and constraint")->required();
  closure_cmd->add_option("--sigma", sigma_path,
                          "base JSON file (default: the context itself)");

  auto* check_cmd = app.add_subcommand("check", "validity of an implication");
  add_common(check_cmd);
  check_cmd->add_option("--impl", impl_s, "implication to check")->required();

  auto* derive_cmd = app.add_subcommand("derive", "derivation trace for a goal");
  add_common(derive_cmd);
  derive_cmd->add_option("--goal", goal_s, "goal implication")->required();
  derive_cmd->add_option("--sigma", sigma_path,
                         "base JSON file (default: the complete base of the goal's kind)");

  auto* stats_cmd = app.add_subcommand("stats", "metrics of a base JSON document");
  stats_cmd->add_option("base", context_path, "base JSON file (default: stdin)");
  stats_cmd->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  bool text = format == "text";

  if (stats_cmd->parsed()) {
    std::string doc;
    if (context_path.empty()) {
      doc = read_all(std::cin);
    } else {
      std::ifstream in(context_path);
      if (!in) throw UsageError("cannot open base file: " + context_path);
      doc = read_all(in);
    }
    json j = json::parse(doc);
    int cardinality = 0, size = 0;
    if (j.contains("metrics")) {
      cardinality = j["metrics"]["cardinality"].get<int>();
      size = j["metrics"]["size"].get<int>();
    } else {
      for (const auto& item : j["items"]) {
        ++cardinality;
        size += static_cast<int>(item["premise"].size() +
                                 item["conclusion"].size() +
                                 item["constraint"].size());
      }
    }
    json out{{"cardinality", cardinality}, {"size", size}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      o << "cardinality " << cardinality << "\nsize " << size << "\n";
    });
    return kOk;
  }

  TriadicContext ctx = load_context(context_path);

  if (concepts_cmd->parsed()) {
    ConceptSet cs = enumerate_concepts(ctx);
    if (count_only) {
      std::cout << cs.size() << "\n";
      return kOk;
    }
    json arr = json::array();
    for (const auto& c : cs.concepts) arr.push_back(concept_json(ctx, c));
    json out{{"count", cs.size()}, {"concepts", arr}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      for (const auto& c : cs.concepts)
        o << join_names(ctx.objects().names_of(c.extent)) << " | "
          << join_names(ctx.attributes().names_of(c.intent)) << " | "
          << join_names(ctx.conditions().names_of(c.modus)) << "\n";
    });
    return kOk;
  }

  if (features_cmd->parsed()) {
    std::vector<Product> fs = features(ctx);
    if (count_only) {
      std::cout << fs.size() << "\n";
      return kOk;
    }
    json arr = json::array();
    for (const auto& p : fs) arr.push_back(product_json(ctx, p));
    json out{{"count", fs.size()}, {"features", arr}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      for (const auto& p : fs) o << product_text(ctx, p) << "\n";
    });
    return kOk;
  }

  if (quasi_cmd->parsed()) {
    Axis axis = parse_axis(axis_s);
    std::vector<Product> qs;
    if (relevant) {
      qs = relevant_quasi_features(ctx, axis, unit);
    } else {
      // full scan over all rectangles, canonical order
      if (ctx.attributes().size() + ctx.conditions().size() > 24)
        throw SizeGuardError("quasi-feature scan requires |M|+|C| <= 24");
      std::vector<Product> feats = features(ctx);
      Mask fullA = ctx.attributes().full(), fullC = ctx.conditions().full();
      for (Mask A = 0;; A = (A - fullA) & fullA) {
        for (Mask C = 0;; C = (C - fullC) & fullC) {
          Product p{A, C};
          int constraint_card =
              axis == Axis::M ? set_size(p.conds) : set_size(p.attrs);
          if ((!unit || constraint_card <= 1) && is_quasi_feature(ctx, p, feats))
            qs.push_back(p);
          if (C == fullC) break;
        }
        if (A == fullA) break;
      }
      std::sort(qs.begin(), qs.end(), product_canonical_less);
    }
    if (count_only) {
      std::cout << qs.size() << "\n";
      return kOk;
    }
    json arr = json::array();
    for (const auto& p : qs) arr.push_back(product_json(ctx, p));
    json out{{"count", qs.size()}, {"quasi_features", arr}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      for (const auto& p : qs) o << product_text(ctx, p) << "\n";
    });
    return kOk;
  }

  if (base_cmd->parsed()) {
    Kind kind = parse_kind(kind_s);
    ImplicationBase base;
    if (is_biedermann(kind)) {
      if (variant == "optimal")
        throw UsageError("variant optimal applies to cai/aci only");
      base = variant == "minimal" ? minimal_base(ctx, kind)
                                  : complete_base(ctx, kind);
    } else {
      if (variant == "minimal")
        throw UsageError("variant minimal applies to bcai/baci only");
      base = cai_base(ctx, kind, variant == "optimal");
    }
    if (text) {
      for (const auto& i : base.items)
        std::cout << format_implication(ctx, i) << "\n";
      std::cout << "cardinality " << base.cardinality() << " size "
                << base.size() << "\n";
    } else {
      std::cout << base_to_json(ctx, base) << "\n";
    }
    return kOk;
  }

  if (closure_cmd->parsed()) {
    Implication imp = parse_implication(ctx, impl_s);
    const Universe& pu = premise_universe(ctx, imp.kind);
    Mask result;
    if (!sigma_path.empty()) {
      std::ifstream in(sigma_path);
      if (!in) throw UsageError("cannot open base file: " + sigma_path);
      ImplicationBase sigma = base_from_json(ctx, read_all(in));
      ImplicationBase flat{sigma.kind, {}};
      if (is_biedermann(sigma.kind)) {
        flat = sigma;
      } else {
        flat.kind = sigma.kind == Kind::CAI ? Kind::BCAI : Kind::BACI;
        for (const auto& i : sigma.items)
          for (const auto& d : decompose_cai(i)) flat.items.push_back(d);
      }
      result = closure(ctx, flat, imp.premise, imp.constraint);
    } else {
      result = premise_on_attributes(imp.kind)
                   ? ctx.closure_12C(imp.premise, imp.constraint)
                   : ctx.closure_13A(imp.premise, imp.constraint);
    }
    const Universe& cu = constraint_universe(ctx, imp.kind);
    json out{{"premise", names_json(pu, imp.premise)},
             {"constraint", names_json(cu, imp.constraint)},
             {"closure", names_json(pu, result)}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      o << join_names(pu.names_of(result)) << "\n";
    });
    return kOk;
  }

  if (check_cmd->parsed()) {
    Implication imp = parse_implication(ctx, impl_s);
    bool valid = is_valid(ctx, imp);
    json out{{"implication", format_implication(ctx, imp)}, {"valid", valid}};
    emit(std::cout, out, text, [&](std::ostream& o) {
      o << (valid ? "valid" : "invalid") << "\n";
    });
    return valid ? kOk : kDomainError;
  }

  if (derive_cmd->parsed()) {
    Implication goal = parse_implication(ctx, goal_s);
    ImplicationBase sigma;
    if (!sigma_path.empty()) {
      std::ifstream in(sigma_path);
      if (!in) throw UsageError("cannot open base file: " + sigma_path);
      sigma = base_from_json(ctx, read_all(in));
    } else if (is_biedermann(goal.kind)) {
      sigma = complete_base(ctx, goal.kind);
    } else {
      sigma = cai_base(ctx, goal.kind, false);
    }
    DerivationTrace t = trace(ctx, sigma, goal);
    if (text) {
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        std::cout << i + 1 << ". " << s.rule;
        if (!s.uses.empty()) {
          std::cout << " [";
          for (std::size_t j = 0; j < s.uses.size(); ++j)
            std::cout << (j ? "," : "") << s.uses[j] + 1;
          std::cout << "]";
        }
        std::cout << ": " << format_implication(ctx, s.produced) << "\n";
      }
    } else {
      std::cout << trace_to_json(ctx, t) << "\n";
    }
    return kOk;
  }

  throw UsageError("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const triadic::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const triadic::ReferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const triadic::NotEntailedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const triadic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
}
