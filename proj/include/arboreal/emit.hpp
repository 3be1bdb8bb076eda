#pragma once

#include <iosfwd>
#include <string>

#include "arboreal/arboreal.hpp"
#include "arboreal/bounds.hpp"
#include "arboreal/inverse_totient.hpp"
#include "arboreal/scoreboard.hpp"
#include "arboreal/stats.hpp"

namespace arboreal {

inline constexpr int kSchemaVersion = 1;

// CSV emitters. Column layouts are part of the tool's contract:
//   trace:      n,k,value        (k descending from n to 0)
//   sequence:   n,value
//   canopy:     height,root,count,share
//   rolling:    n,value,share
//   frequency:  value,count,share
//   levels:     height,value
//   violations: n,k,value,bound
void write_trace_csv(std::ostream& os, const PartialEvaluationTrace& trace);
void write_sequence_csv(std::ostream& os, const std::vector<std::uint64_t>& values);
void write_canopy_csv(std::ostream& os, const std::vector<CanopyLevel>& levels);
void write_rolling_csv(std::ostream& os, const std::vector<RollingShareRow>& rows);
void write_frequency_csv(std::ostream& os, const FrequencyTable& table);
void write_levels_csv(std::ostream& os, const TotientTree& tree);
void write_violations_csv(std::ostream& os, const std::vector<BoundViolation>& violations);

void write_fiber_line(std::ostream& os, const TotientFiber& fiber);

// JSON emitters, all carrying schema_version at top level.
std::string tree_json(const TotientTree& tree);
std::string forest_json(const ForestReport& forest);
std::string case_equation_json(const CaseEquation& eq);
std::string evidence_json(const ValidationEvidence& evidence);
std::string fiber_json(const TotientFiber& fiber);
std::string violations_json(const std::vector<BoundViolation>& violations,
                            const std::string& sequence_spec,
                            const std::string& bound_spec,
                            const ValidationEvidence* evidence);

std::string case_equation_text(const CaseEquation& eq);

}  // namespace arboreal
