#include "arboreal/emit.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace arboreal {

namespace {

using json = nlohmann::json;
using u64 = std::uint64_t;

// Shares are exact count/total fractions; decimal only happens here.
std::string share_str(u64 count, u64 total) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f",
                total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total));
  return buf;
}

json status_json(const TreeStatus& status) {
  return {{"kind", to_string(status.kind)}, {"height", status.height}};
}

json tree_obj(const TotientTree& tree) {
  json levels = json::array();
  for (const auto& level : tree.levels) levels.push_back(level.size());
  json obj{
      {"root", tree.root},
      {"status", status_json(tree.status)},
      {"fruit_heights", tree.fruit_heights},
      {"level_counts", levels},
      {"node_count", tree.node_count},
  };
  if (tree.survival_witness) obj["survival_witness"] = *tree.survival_witness;
  return obj;
}

json evidence_obj(const ValidationEvidence& ev) {
  json checks = json::array();
  for (const InequalityCheck& c : ev.checks) {
    checks.push_back({
        {"name", c.name},
        {"ok", c.ok()},
        {"pointwise_ok", c.pointwise_ok},
        {"scanned_from", c.scanned_from},
        {"scanned_to", c.scanned_to},
        {"first_failure", c.first_failure},
        {"tail_ok", c.tail_ok},
        {"tail_note", c.tail_note},
    });
  }
  return {
      {"increments", ev.increments.to_string("j")},
      {"odd_bound", ev.odd_bound.to_string("k")},
      {"odd_coefficients", ev.odd_bound.coefficients()},
      {"even_bound", ev.even_bound.to_string("l")},
      {"even_coefficients", ev.even_bound.coefficients()},
      {"horizon", ev.horizon},
      {"all_ok", ev.all_ok()},
      {"checks", checks},
  };
}

json bound_obj(const BoundProvider& bound) {
  json obj{{"spec", bound.describe()}};
  if (bound.evidence() != nullptr) obj["evidence"] = evidence_obj(*bound.evidence());
  return obj;
}

}  // namespace

void write_trace_csv(std::ostream& os, const PartialEvaluationTrace& trace) {
  os << "n,k,value\n";
  for (u64 k = trace.n + 1; k-- > 0;)
    os << trace.n << ',' << k << ',' << trace.values[k] << '\n';
}

void write_sequence_csv(std::ostream& os, const std::vector<u64>& values) {
  os << "n,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    os << i + 1 << ',' << values[i] << '\n';
}

void write_canopy_csv(std::ostream& os, const std::vector<CanopyLevel>& levels) {
  os << "height,root,count,share\n";
  for (const CanopyLevel& level : levels) {
    for (const auto& [root, count] : level.root_counts)
      os << level.height << ',' << root << ',' << count << ','
         << share_str(count, level.total) << '\n';
  }
}

void write_rolling_csv(std::ostream& os, const std::vector<RollingShareRow>& rows) {
  os << "n,value,share\n";
  for (const RollingShareRow& row : rows)
    os << row.n << ',' << row.value << ',' << share_str(row.count, row.window)
       << '\n';
}

void write_frequency_csv(std::ostream& os, const FrequencyTable& table) {
  os << "value,count,share\n";
  for (const FrequencyTable::Row& row : table.rows)
    os << row.value << ',' << row.count << ',' << share_str(row.count, table.n_max)
       << '\n';
}

void write_levels_csv(std::ostream& os, const TotientTree& tree) {
  os << "height,value\n";
  for (std::size_t k = 0; k < tree.levels.size(); ++k)
    for (u64 v : tree.levels[k]) os << k << ',' << v << '\n';
}

void write_violations_csv(std::ostream& os,
                          const std::vector<BoundViolation>& violations) {
  os << "n,k,value,bound\n";
  for (const BoundViolation& v : violations)
    os << v.n << ',' << v.k << ',' << v.value << ',' << v.bound << '\n';
}

void write_fiber_line(std::ostream& os, const TotientFiber& fiber) {
  for (std::size_t i = 0; i < fiber.members.size(); ++i) {
    if (i) os << ' ';
    os << fiber.members[i];
  }
  os << '\n';
}

std::string tree_json(const TotientTree& tree) {
  json obj = tree_obj(tree);
  obj["schema_version"] = kSchemaVersion;
  return obj.dump(2) + "\n";
}

std::string forest_json(const ForestReport& forest) {
  json trees = json::array();
  for (const TotientTree& tree : forest.trees) trees.push_back(tree_obj(tree));
  json obj{
      {"schema_version", kSchemaVersion},
      {"sequence", forest.sequence.spec_string()},
      {"bound", bound_obj(forest.bound)},
      {"caps", {{"height_cap", forest.caps.height_cap}, {"node_cap", forest.caps.node_cap}}},
      {"trees", trees},
  };
  return obj.dump(2) + "\n";
}

std::string case_equation_json(const CaseEquation& eq) {
  json cases = json::array();
  for (const CaseEquation::Case& c : eq.cases)
    cases.push_back({{"value", c.value}, {"heights", c.heights}});
  json obj{
      {"schema_version", kSchemaVersion},
      {"conclusive", eq.conclusive},
      {"cases", cases},
  };
  if (eq.otherwise) obj["otherwise"] = *eq.otherwise;
  if (!eq.detail.empty()) obj["detail"] = eq.detail;
  return obj.dump(2) + "\n";
}

std::string evidence_json(const ValidationEvidence& evidence) {
  json obj = evidence_obj(evidence);
  obj["schema_version"] = kSchemaVersion;
  return obj.dump(2) + "\n";
}

std::string fiber_json(const TotientFiber& fiber) {
  json obj{
      {"schema_version", kSchemaVersion},
      {"m", fiber.m},
      {"members", fiber.members},
  };
  return obj.dump(2) + "\n";
}

std::string violations_json(const std::vector<BoundViolation>& violations,
                            const std::string& sequence_spec,
                            const std::string& bound_spec,
                            const ValidationEvidence* evidence) {
  json rows = json::array();
  for (const BoundViolation& v : violations)
    rows.push_back({{"n", v.n}, {"k", v.k}, {"value", v.value}, {"bound", v.bound}});
  json obj{
      {"schema_version", kSchemaVersion},
      {"sequence", sequence_spec},
      {"bound", bound_spec},
      {"violations", rows},
  };
  if (evidence != nullptr) obj["evidence"] = evidence_obj(*evidence);
  return obj.dump(2) + "\n";
}

std::string case_equation_text(const CaseEquation& eq) {
  if (!eq.conclusive) return "inconclusive: " + eq.detail + "\n";
  std::string out = "A^phi(n) =\n";
  auto height_list = [](const std::vector<u64>& hs) {
    std::string s;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(hs[i]);
    }
    return s;
  };
  for (const CaseEquation::Case& c : eq.cases)
    out += "  " + std::to_string(c.value) + "\tn = " + height_list(c.heights) + "\n";
  if (eq.otherwise)
    out += "  " + std::to_string(*eq.otherwise) + "\totherwise\n";
  return out;
}

}  // namespace arboreal
