#pragma once

#include "relalg/algebra.hpp"
#include "relalg/detectors.hpp"
#include "relalg/network.hpp"
#include "relalg/oracle.hpp"
#include "relalg/probe.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relalg {

/// Schema tag written into every structured report.
inline constexpr std::string_view report_schema = "relalg-report/v1";

/// Structured reports are JSON objects with a `schema` and a `command`
/// field. Readers ignore fields they do not know.

std::string structured_check(const RelationAlgebra &ra, const ValidationReport &report);
std::string text_check(const RelationAlgebra &ra, const ValidationReport &report);

std::string structured_hardness(const RelationAlgebra &ra, const HardnessReport &report);
std::string text_hardness(const RelationAlgebra &ra, const HardnessReport &report);
/// Inverse of structured_hardness for the same algebra.
HardnessReport parse_structured_hardness(const RelationAlgebra &ra, std::string_view json);

std::string structured_solve(const RelationAlgebra &ra, const SolveResult &result, std::string_view network_name);
std::string text_solve(const RelationAlgebra &ra, const SolveResult &result, std::string_view network_name,
                       bool with_witness);

std::string structured_oracle(const RelationAlgebra &ra, const OracleResult &result, std::string_view network_name);
std::string text_oracle(const RelationAlgebra &ra, const OracleResult &result, std::string_view network_name);

/// Outcome of `ra probe`: each probe that applied, with its verdict.
struct ProbeRun {
    std::string theorem;
    std::string detail;
    bool reproduced = false;
};

struct ProbeSummary {
    std::string algebra;
    std::vector<ProbeRun> runs;
    std::vector<std::string> skipped;
};

std::string structured_probe(const ProbeSummary &summary);
std::string text_probe(const ProbeSummary &summary);

}  // namespace relalg
