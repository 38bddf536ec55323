#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gapsym/semigroup.h"

namespace gapsym {

enum class SurveyCheck {
    Partition,
    Reconstruct,
    Equifix,
    Red,
    Uff,
    Cardinality,
    ConductorSym,
};

/// Check names as used on the command line, in run order.
const std::vector<SurveyCheck> &all_survey_checks();
std::string_view survey_check_name(SurveyCheck check);
/// Accepts the check names and "all". Throws InvalidArgument otherwise.
std::set<SurveyCheck> parse_survey_checks(std::string_view comma_separated);

struct SurveyOptions {
    Int max_beta = 40;
    std::set<SurveyCheck> checks;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SurveyViolation {
    SurveyCheck check = SurveyCheck::Partition;
    Int alpha = 0;
    Int beta = 0;
    std::optional<Int> gap;
    std::string message;
};

struct SurveyNote {
    SurveyCheck check = SurveyCheck::Partition;
    Int alpha = 0;
    Int beta = 0;
    std::string message;
};

struct CheckSummary {
    SurveyCheck check = SurveyCheck::Partition;
    Int pairs = 0;
    /// Individual assertions evaluated (per pair or per gap).
    Int cases = 0;
    Int passed = 0;
    Int violations = 0;
    Int excluded = 0;
    Int warnings = 0;
};

struct SurveyReport {
    Int max_beta = 0;
    Int pairs_checked = 0;
    std::vector<CheckSummary> summaries;
    /// Sorted by (check, alpha, beta, gap).
    std::vector<SurveyViolation> violations;
    /// Documented exclusions such as the alpha = 2 rows of the count comparison.
    std::vector<SurveyNote> excluded;
    /// Known formula discrepancies; never failures.
    std::vector<SurveyNote> warnings;

    bool ok() const {
        return violations.empty();
    }
};

/// Coprime 2 <= alpha < beta <= max_beta, ordered by beta then alpha.
std::vector<std::pair<Int, Int>> coprime_pairs(Int max_beta);

SurveyReport run_survey(const SurveyOptions &options);

}  // namespace gapsym
