#pragma once
// The two verification pipelines and their reports. Formal mode compares
// the pushed CSM class of the generic fiber against the specialization
// class degree by degree over a formal base; numeric mode integrates both
// sides over P^n into an Euler-characteristic ledger, solving singular
// strata from smooth models along the way; cross mode requires the formal
// pipeline, the native numeric one, and the stratum ledger to meet on the
// same numbers.

#include "csm/catalog.hpp"

namespace csm {

enum class CheckMode { Formal, Numeric, Cross };

struct DegreeRow {
    int k = 0;
    ChowClass lhs, rhs, diff;
};

struct VerificationReport {
    std::string family;
    std::string base_desc;
    CheckMode mode = CheckMode::Formal;
    bool pass = false;
    std::vector<DegreeRow> degrees;                       // formal mode
    std::vector<std::pair<std::string, Rational>> ledger; // numeric and cross modes
};

// Runs the scenario's solve plan, returning a registry where every
// unknown stratum carries a solved CSM class.
StratumRegistry solve_strata(const FamilyScenario& sc);

VerificationReport check_identity_formal(const FamilyData& fam, int d);
VerificationReport check_identity_formal(const std::string& family, int d);

VerificationReport check_tadpole_numeric(const FamilyData& fam, int n, const std::vector<int>& line_values);
VerificationReport check_tadpole_numeric(const std::string& family, int n, const std::vector<int>& line_values);

VerificationReport cross_check_modes(const FamilyData& fam, int n, const std::vector<int>& line_values);
VerificationReport cross_check_modes(const std::string& family, int n, const std::vector<int>& line_values);

// Deterministic serialization: same input, same bytes.
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);
std::string to_markdown(const VerificationReport& r);
std::string to_markdown(const std::vector<VerificationReport>& rs);

} // namespace csm
