// qcs: command-line front end for the q-cycle set library.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcycle/analysis.hpp"
#include "qcycle/congruence.hpp"
#include "qcycle/enumeration.hpp"
#include "qcycle/error.hpp"
#include "qcycle/extension.hpp"
#include "qcycle/fixtures.hpp"
#include "qcycle/io.hpp"
#include "qcycle/report.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qcs;

bool g_structured = false;

void print(const ordered_json& report) {
  if (g_structured) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << render_text(report);
  }
}

std::string kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_structure:
      return "invalid structure";
    case ErrorKind::precondition:
      return "precondition";
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::bound_exceeded:
      return "bound exceeded";
  }
  return "error";
}

int diagnose(ErrorKind kind, const std::string& message) {
  const int code = static_cast<int>(kind);
  if (g_structured) {
    ordered_json d;
    d["error"] = {{"kind", kind_name(kind)}, {"exit_code", code}, {"message", message}};
    std::cerr << d.dump() << '\n';
  } else {
    std::cerr << "qcs: " << kind_name(kind) << " error: " << message << '\n';
  }
  return code;
}

Format output_format(bool json) { return json ? Format::json : Format::text; }

QCycleSet as_qcycle_set(const TableDocument& doc) {
  if (doc.kind == DocumentKind::solution) return from_solution(to_solution_value(doc));
  return to_qcycle_set(doc);
}

std::pair<std::string, std::size_t> split_family(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) return {name, 0};
  std::size_t param = 0;
  try {
    param = std::stoul(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw PreconditionError("bad parameter in '" + name + "'");
  }
  return {name.substr(0, colon), param};
}

int run_verify(const std::string& path) {
  auto report = verify_report(parse_document(read_input(path)));
  print(report);
  return report["valid"].get<bool>() ? 0 : 1;
}

int run_analyze(const std::string& path, const std::string& field) {
  auto doc = parse_document(read_input(path));
  ordered_json report;
  if (doc.kind == DocumentKind::solution) {
    report = analysis_report(to_solution_value(doc));
  } else {
    report = analysis_report(to_qcycle_set(doc));
  }
  if (!field.empty()) {
    const ordered_json& scope =
        report.contains(field) || report["kind"] != "solution" ? report : report["q_cycle_set"];
    if (!scope.is_object() || !scope.contains(field)) {
      throw PreconditionError("the report has no field '" + field + "'");
    }
    const auto& value = scope[field];
    if (value.is_null() || value == "undefined") {
      std::string why = "field '" + field + "' is undefined for this input";
      if (scope["valid"] == false) {
        why += " (the axioms fail)";
      } else if (scope["regular"] == false) {
        why += " (not regular)";
      } else if (scope["indecomposable"] == false) {
        why += " (decomposable)";
      } else if (scope["n"] == 1) {
        why += " (a single point)";
      }
      throw PreconditionError(why);
    }
    ordered_json out;
    out[field] = value;
    print(out);
    return 0;
  }
  print(report);
  const auto& set_report = report["kind"] == "solution" ? report["q_cycle_set"] : report;
  if (report["kind"] == "solution") {
    return report["braid_relation"] == true && report["bijective"] == true ? 0 : 1;
  }
  return set_report["valid"] == true ? 0 : 1;
}

int run_convert(const std::string& path, const std::string& to, bool json) {
  auto doc = parse_document(read_input(path));
  const bool to_solution_kind =
      to == "solution" || (to == "auto" && doc.kind == DocumentKind::q_cycle_set);
  if (to_solution_kind) {
    if (doc.kind == DocumentKind::solution) {
      std::cout << serialize(to_solution_value(doc), output_format(json));
    } else {
      auto X = to_qcycle_set(doc);
      if (!check_q_axioms(X, 1).ok()) throw InvalidStructure("the tables fail the q-cycle set axioms");
      std::cout << serialize(to_solution(X), output_format(json));
    }
  } else {
    std::cout << serialize(as_qcycle_set(doc), output_format(json));
  }
  return 0;
}

int run_extend(const std::string& base_path, const std::string& pair_path,
               const std::string& family, bool summary, bool json) {
  ExtensionData data;
  if (!family.empty()) {
    auto [name, param] = split_family(family);
    data = paper_extension(name, param);
  } else {
    if (base_path.empty() || pair_path.empty()) {
      throw ParseError("extend needs a base file and a pair file, or --family");
    }
    if (base_path == "-" && pair_path == "-") throw ParseError("only one input may be stdin");
    data.base = as_qcycle_set(parse_document(read_input(base_path)));
    data.pair = parse_pair(read_input(pair_path));
  }
  auto E = build_extension(data.base, data.pair);
  if (!summary) {
    std::cout << serialize(E, output_format(json));
    return 0;
  }
  ordered_json r;
  r["base_size"] = data.base.size();
  r["fiber_size"] = data.pair.fiber_size();
  r["n"] = E.size();
  r["cocycle_identities"] = true;
  r["alpha_prime_bijective"] = data.pair.alpha_prime_bijective();
  const bool regular = is_regular(data.base) && is_regular(E);
  r["regular"] = regular;
  if (regular) {
    const bool indecomposable = is_indecomposable(E);
    r["indecomposable"] = indecomposable;
    r["stabilizer_criterion"] = extension_indecomposability_criterion(data.base, data.pair);
    if (indecomposable) {
      r["fiber_blocks"] = extension_blocks(data.base, data.pair).one_based();
    } else {
      r["fiber_blocks"] = nullptr;
    }
  } else {
    r["indecomposable"] = nullptr;
    r["stabilizer_criterion"] = nullptr;
    r["fiber_blocks"] = nullptr;
  }
  print(r);
  return 0;
}

int run_quotients(const std::string& path) {
  auto X = as_qcycle_set(parse_document(read_input(path)));
  if (!check_q_axioms(X, 1).ok()) throw InvalidStructure("the tables fail the q-cycle set axioms");
  auto report = quotients_report(X);
  if (!g_structured) {
    for (auto& entry : report["congruences"]) entry.erase("image");
  }
  print(report);
  return 0;
}

int run_isomorphic(const std::string& a, const std::string& b) {
  if (a == "-" && b == "-") throw ParseError("only one input may be stdin");
  auto X = as_qcycle_set(parse_document(read_input(a)));
  auto Y = as_qcycle_set(parse_document(read_input(b)));
  ordered_json r;
  auto f = X.size() == Y.size() ? is_isomorphic(X, Y) : std::nullopt;
  r["isomorphic"] = f.has_value();
  if (f) {
    ordered_json images = ordered_json::array();
    for (Point x = 0; x < X.size(); ++x) images.push_back((*f)(x) + 1);
    r["map"] = std::move(images);
  } else {
    r["map"] = nullptr;
  }
  print(r);
  return 0;
}

struct EnumerateArgs {
  std::size_t order = 0;
  std::string kind = "qcs";
  std::vector<std::string> require, forbid, ignore;
  std::string out;
  bool count_only = false;
  bool override_bounds = false;
  bool labelled = false;
  bool json = false;
  std::size_t workers = 1;
};

int run_enumerate(const EnumerateArgs& args) {
  EnumerationQuery query;
  query.order = args.order;
  query.kind = parse_kind(args.kind);
  query.override_bounds = args.override_bounds;
  query.canonicalize = !args.labelled;
  query.workers = args.workers;
  auto add = [&](const std::vector<std::string>& names, Filter filter) {
    for (const auto& name : names) {
      auto p = parse_property(name);
      if (query.filters.count(p) && query.filters[p] != filter) {
        throw ParseError("property '" + name + "' given conflicting filters");
      }
      query.filters[p] = filter;
    }
  };
  add(args.require, Filter::require);
  add(args.forbid, Filter::forbid);
  add(args.ignore, Filter::ignore);

  std::ofstream file;
  if (!args.out.empty() && args.out != "-") {
    file.open(args.out);
    if (!file) throw ParseError("cannot write '" + args.out + "'");
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  if (args.count_only) {
    std::size_t count = 0;
    const bool profiled = query.filter(Property::regular) == Filter::require;
    std::map<Profile, std::size_t> profiles;
    enumerate(query, [&](const QCycleSet& X) {
      ++count;
      if (profiled) ++profiles[profile_of(X)];
    });
    ordered_json r;
    r["order"] = query.order;
    r["kind"] = to_string(query.kind);
    ordered_json filters = ordered_json::object();
    for (int i = 0; i <= static_cast<int>(Property::primitive); ++i) {
      const auto p = static_cast<Property>(i);
      if (query.filter(p) != Filter::ignore) {
        filters[to_string(p)] = query.filter(p) == Filter::require ? "require" : "forbid";
      }
    }
    r["filters"] = std::move(filters);
    r["isomorphism_classes"] = !args.labelled;
    r["count"] = count;
    if (profiled) {
      ordered_json rows = ordered_json::array();
      for (const auto& [profile, k] : profiles) {
        ordered_json row;
        row["indecomposable"] = profile.indecomposable;
        row["primitive"] = profile.primitive;
        row["square_free"] = profile.square_free;
        row["simple"] = profile.simple;
        row["multipermutation_level"] = profile.mpl ? ordered_json(*profile.mpl) : ordered_json();
        row["count"] = k;
        rows.push_back(std::move(row));
      }
      r["profiles"] = std::move(rows);
    } else {
      r["profiles"] = nullptr;
    }
    os << r.dump(2) << '\n';
    return 0;
  }

  if (args.json) {
    std::vector<QCycleSet> all;
    enumerate(query, [&](const QCycleSet& X) { all.push_back(X); });
    os << serialize(all, Format::json);
    return 0;
  }
  bool first = true;
  enumerate(query, [&](const QCycleSet& X) {
    if (!first) os << '\n';
    first = false;
    os << serialize(X);
  });
  return 0;
}

int run_fixture(const std::string& name, const std::string& part, bool json, bool list) {
  if (list) {
    for (const auto& n : fixture_names()) std::cout << n << '\n';
    return 0;
  }
  if (name.empty()) throw ParseError("fixture needs a name (see --list)");
  if (part == "base" || part == "pair") {
    auto [family, param] = split_family(name == "example_1" ? std::string("SF:1") : name);
    auto data = paper_extension(family, param);
    if (part == "base") {
      std::cout << serialize(data.base, output_format(json));
    } else {
      std::cout << serialize(data.pair);
    }
    return 0;
  }
  auto fx = fixture(name);
  if (part == "solution" || (part == "auto" && fx.solution)) {
    if (fx.solution) {
      std::cout << serialize(*fx.solution, output_format(json));
    } else {
      std::cout << serialize(to_solution(fx.set), output_format(json));
    }
  } else {
    std::cout << serialize(fx.set, output_format(json));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analysis of finite q-cycle sets and set-theoretic solutions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  std::string input, second;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "Check axioms, regularity and non-degeneracy");
  verify->add_option("file", input, "Input document ('-' for stdin)")->required();
  add_format(verify);

  std::string field;
  auto* analyze = app.add_subcommand("analyze", "Full invariant report");
  analyze->add_option("file", input, "Input document ('-' for stdin)")->required();
  analyze->add_option("--field", field, "Print one report field; exit 2 when it is undefined");
  add_format(analyze);

  std::string to = "auto";
  auto* convert = app.add_subcommand("convert", "Convert between solutions and q-cycle sets");
  convert->add_option("file", input, "Input document ('-' for stdin)")->required();
  convert->add_option("--to", to, "Target kind (auto flips the input kind)")
      ->check(CLI::IsMember({"auto", "qcs", "solution"}));
  convert->add_flag("--json", json, "Write JSON instead of the text format");

  std::string family;
  bool summary = false;
  auto* extend = app.add_subcommand("extend", "Build the extension of a base by a dynamical pair");
  extend->add_option("base", input, "Base q-cycle set document");
  extend->add_option("pair", second, "Dynamical pair document");
  extend->add_option("--family", family, "Built-in pair instead of files: D1, D2:k, D3:p, SF:m");
  extend->add_flag("--summary", summary, "Report on the extension instead of printing it");
  extend->add_flag("--json", json, "Write JSON instead of the text format");
  add_format(extend);

  auto* quotients = app.add_subcommand("quotients", "Congruences and epimorphic images");
  quotients->add_option("file", input, "Input document ('-' for stdin)")->required();
  add_format(quotients);

  auto* isomorphic = app.add_subcommand("isomorphic", "Decide isomorphism of two q-cycle sets");
  isomorphic->add_option("first", input, "First document")->required();
  isomorphic->add_option("second", second, "Second document")->required();
  add_format(isomorphic);

  EnumerateArgs en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List structures of a given order");
  enumerate_cmd->add_option("--order", en.order, "Order")->required()->check(CLI::Range(1, 16));
  enumerate_cmd->add_option("--kind", en.kind, "qcs or cs")->check(CLI::IsMember({"qcs", "cs"}));
  enumerate_cmd->add_option("--require", en.require, "Required property (repeatable)");
  enumerate_cmd->add_option("--forbid", en.forbid, "Forbidden property (repeatable)");
  enumerate_cmd->add_option("--ignore", en.ignore, "Property to ignore, e.g. regular");
  enumerate_cmd->add_option("--out", en.out, "Output file");
  enumerate_cmd->add_flag("--count-only", en.count_only, "Print a count table as JSON");
  enumerate_cmd->add_flag("--override-bounds", en.override_bounds, "Allow orders above the bounds");
  enumerate_cmd->add_flag("--labelled", en.labelled, "Every labelled structure, not one per class");
  enumerate_cmd->add_flag("--json", en.json, "Write one JSON array");
  enumerate_cmd->add_option("--workers", en.workers, "Worker threads")->check(CLI::Range(1, 256));

  std::string part = "auto";
  bool list = false;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in example");
  fixture_cmd->add_option("name", input, "Fixture name, e.g. simple4 or D2:3");
  fixture_cmd->add_option("--part", part, "What to print")
      ->check(CLI::IsMember({"auto", "set", "solution", "base", "pair"}));
  fixture_cmd->add_flag("--list", list, "List fixture names");
  fixture_cmd->add_flag("--json", json, "Write JSON instead of the text format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::parse);
  }
  g_structured = format == "structured";

  try {
    if (*verify) return run_verify(input);
    if (*analyze) return run_analyze(input, field);
    if (*convert) return run_convert(input, to, json);
    if (*extend) return run_extend(input, second, family, summary, json);
    if (*quotients) return run_quotients(input);
    if (*isomorphic) return run_isomorphic(input, second);
    if (*enumerate_cmd) return run_enumerate(en);
    if (*fixture_cmd) return run_fixture(input, part, json, list);
  } catch (const qcs::Error& e) {
    return diagnose(e.kind(), e.what());
  } catch (const std::bad_alloc&) {
    std::cerr << "qcs: out of memory\n";
    return 70;
  }
  return 0;
}
