#include "qcycle/report.hpp"

#include <limits>
#include <sstream>

#include "qcycle/analysis.hpp"
#include "qcycle/blocks.hpp"
#include "qcycle/congruence.hpp"

namespace qcs {

namespace {

using nlohmann::ordered_json;

ordered_json one_based(const std::vector<Point>& points) {
  ordered_json out = ordered_json::array();
  for (Point p : points) out.push_back(p + 1);
  return out;
}

ordered_json partition_json(const std::vector<std::vector<Point>>& parts) {
  ordered_json out = ordered_json::array();
  for (const auto& part : parts) out.push_back(one_based(part));
  return out;
}

ordered_json order_json(const GroupOrder& order) {
  if (order <= GroupOrder(std::numeric_limits<std::uint64_t>::max())) {
    return order.convert_to<std::uint64_t>();
  }
  return order.str();
}

ordered_json group_json(const GroupHandle& G) {
  ordered_json out;
  out["order"] = order_json(G.order());
  out["abelian"] = G.is_abelian();
  out["regular_action"] = G.is_regular_action();
  ordered_json gens = ordered_json::array();
  for (const auto& g : G.generators()) {
    if (!g.is_identity()) gens.push_back(g.to_cycles());
  }
  out["generators"] = std::move(gens);
  out["orbits"] = partition_json(G.orbits());
  return out;
}

ordered_json violation_json(const AxiomViolation& v) {
  return {{"axiom", "q" + std::to_string(static_cast<int>(v.axiom))},
          {"x", v.x + 1},
          {"y", v.y + 1},
          {"z", v.z + 1}};
}

ordered_json block_systems_json(const std::vector<BlockSystem>& systems) {
  ordered_json out = ordered_json::array();
  for (const auto& B : systems) out.push_back(B.one_based());
  return out;
}

void add_invariants(ordered_json& r, const QCycleSet& X) {
  const std::size_t n = X.size();
  auto G = permutation_group(X);
  r["group"] = group_json(G);
  const bool indecomposable = G.is_transitive();
  r["indecomposable"] = indecomposable;

  const auto series = retraction_series(X);
  r["retractable"] = series.size() > 1;
  ordered_json sizes = ordered_json::array();
  for (const auto& Y : series) sizes.push_back(Y.size());
  r["retraction_sizes"] = std::move(sizes);
  if (auto mpl = multipermutation_level(X)) {
    r["multipermutation_level"] = *mpl;
  } else {
    r["multipermutation_level"] = "not multipermutational";
  }
  r["displacement_generators_agree"] = check_dis_equality(X);

  auto witness = n > 1 ? non_simplicity_witness(X) : std::nullopt;
  r["simple"] = n > 1 && !witness;
  r["simple_by_blocks"] = n > 1 ? ordered_json(is_simple_blocks(X)) : ordered_json();
  r["non_simplicity_witness"] = witness ? partition_json(witness->classes()) : ordered_json();

  if (!indecomposable || n < 2) {
    r["primitive"] = false;
    r["block_systems"] = nullptr;
    r["maximal_block_systems"] = nullptr;
    r["finite_level_criterion"] = nullptr;
    r["primitive_level"] = "undefined";
    r["primitive_level_chain"] = nullptr;
    return;
  }
  r["primitive"] = is_primitive(G);
  r["block_systems"] = block_systems_json(all_block_systems(G));
  r["maximal_block_systems"] = block_systems_json(maximal_block_systems(G));
  r["finite_level_criterion"] = has_finite_primitive_level(X);
  auto level = primitive_level(X);
  if (level.level) {
    r["primitive_level"] = *level.level;
  } else {
    r["primitive_level"] = "infinite";
  }
  ordered_json chain = ordered_json::array();
  for (const auto& theta : level.chain) {
    chain.push_back({{"image_size", theta.class_count()}, {"classes", partition_json(theta.classes())}});
  }
  r["primitive_level_chain"] = std::move(chain);
}

}  // namespace

ordered_json analysis_report(const QCycleSet& X) {
  ordered_json r;
  r["schema_version"] = kReportSchemaVersion;
  r["kind"] = "q-cycle set";
  r["n"] = X.size();
  auto axioms = check_q_axioms(X, 1);
  r["valid"] = axioms.ok();
  r["axiom_violation"] =
      axioms.violations.empty() ? ordered_json() : violation_json(axioms.violations.front());
  r["cycle_set"] = X.is_cycle_set();
  r["regular"] = is_regular(X);
  r["nondegenerate"] = is_nondegenerate(X);
  r["square_free"] = is_square_free(X);
  r["left_self_distributive"] = is_left_self_distributive(X);
  r["right_self_distributive"] = is_right_self_distributive(X);
  if (axioms.ok() && is_regular(X)) {
    add_invariants(r, X);
  } else {
    for (const char* key :
         {"group", "indecomposable", "retractable", "retraction_sizes", "multipermutation_level",
          "displacement_generators_agree", "simple", "simple_by_blocks", "non_simplicity_witness",
          "primitive", "block_systems", "maximal_block_systems", "finite_level_criterion"}) {
      r[key] = nullptr;
    }
    r["primitive_level"] = "undefined";
    r["primitive_level_chain"] = nullptr;
  }
  return r;
}

ordered_json analysis_report(const Solution& s) {
  ordered_json r;
  r["schema_version"] = kReportSchemaVersion;
  r["kind"] = "solution";
  r["n"] = s.size();
  const auto braid = yang_baxter_violation(s);
  r["braid_relation"] = !braid;
  r["braid_violation"] =
      braid ? ordered_json(one_based({(*braid)[0], (*braid)[1], (*braid)[2]})) : ordered_json();
  r["bijective"] = is_bijective_map(s);
  r["involutive"] = is_involutive(s);
  auto groups = solution_groups(s);
  r["group"] = group_json(groups.g);
  r["group_lambda_rho"] = group_json(groups.f);
  r["orbits_coincide"] = groups.g.orbits() == groups.f.orbits();
  if (!braid && is_bijective_map(s)) {
    r["q_cycle_set"] = analysis_report(from_solution(s));
  } else {
    r["q_cycle_set"] = nullptr;
  }
  return r;
}

ordered_json verify_report(const TableDocument& doc) {
  ordered_json r;
  r["n"] = doc.n;
  if (doc.kind == DocumentKind::solution) {
    r["kind"] = "solution";
    const bool nondegenerate = is_nondegenerate_solution(doc.first, doc.second);
    r["nondegenerate"] = nondegenerate;
    if (!nondegenerate) {
      r["bijective"] = nullptr;
      r["braid_relation"] = nullptr;
      r["involutive"] = nullptr;
      r["valid"] = false;
      return r;
    }
    auto s = Solution::from_rows(doc.first, doc.second);
    const auto braid = yang_baxter_violation(s);
    r["bijective"] = is_bijective_map(s);
    r["braid_relation"] = !braid;
    r["braid_violation"] =
        braid ? ordered_json(one_based({(*braid)[0], (*braid)[1], (*braid)[2]})) : ordered_json();
    r["involutive"] = is_involutive(s);
    r["valid"] = !braid && is_bijective_map(s);
    return r;
  }
  r["kind"] = "q-cycle set";
  auto axioms = check_q_axioms(doc.first, doc.second, 10);
  r["malformed"] = axioms.malformed;
  ordered_json violations = ordered_json::array();
  for (const auto& v : axioms.violations) violations.push_back(violation_json(v));
  r["axiom_violations"] = std::move(violations);
  if (axioms.malformed.empty()) {
    auto X = QCycleSet::from_rows(doc.first, doc.second);
    r["cycle_set"] = X.is_cycle_set();
    r["regular"] = is_regular(X);
    r["nondegenerate"] = is_nondegenerate(X);
  } else {
    r["cycle_set"] = nullptr;
    r["regular"] = nullptr;
    r["nondegenerate"] = nullptr;
  }
  r["valid"] = axioms.ok();
  return r;
}

ordered_json quotients_report(const QCycleSet& X) {
  ordered_json r;
  r["n"] = X.size();
  ordered_json list = ordered_json::array();
  std::vector<QCycleSet> images;
  for (const auto& theta : all_congruences(X)) {
    ordered_json entry;
    entry["classes"] = partition_json(theta.classes());
    entry["image_size"] = theta.class_count();
    auto Y = quotient(X, theta).set;
    ordered_json same = nullptr;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].size() == Y.size() && is_isomorphic(images[i], Y)) {
        same = i + 1;
        break;
      }
    }
    entry["isomorphic_to"] = same;
    if (Y.size() > 1 && is_regular(Y)) {
      auto H = permutation_group(Y);
      entry["primitive"] = H.is_transitive() && is_primitive(H);
    } else {
      entry["primitive"] = false;
    }
    entry["image"] = to_json(Y);
    images.push_back(std::move(Y));
    list.push_back(std::move(entry));
  }
  r["congruence_count"] = list.size();
  r["congruences"] = std::move(list);
  return r;
}

namespace {

bool is_scalar_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const auto& f : e) {
        if (f.is_structured()) return false;
      }
    }
  }
  return true;
}

std::string inline_value(const ordered_json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "none";
    const bool nested = v.front().is_array();
    std::string out = nested ? "{" : "";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += nested ? "," : ", ";
      if (nested) {
        out += "{";
        for (std::size_t j = 0; j < v[i].size(); ++j) out += (j ? "," : "") + inline_value(v[i][j]);
        out += "}";
      } else {
        out += inline_value(v[i]);
      }
    }
    return nested ? out + "}" : out;
  }
  return v.dump();
}

void render(std::ostringstream& os, const ordered_json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& [key, value] : v.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(os, value, depth + 1);
    } else if (value.is_array() && !is_scalar_array(value)) {
      os << pad << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << pad << "  [" << i + 1 << "]\n";
        if (value[i].is_object()) {
          render(os, value[i], depth + 2);
        } else {
          os << pad << "    " << inline_value(value[i]) << '\n';
        }
      }
    } else {
      os << pad << key << ": " << inline_value(value) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace qcs
