// SPDX-License-Identifier: MIT
//
// The lemma and table verification suite behind `verify`: each scope runs
// exact checks of one family of divisor computations, enumerations or
// catalog entries and returns records with a status, a count of checked
// cases and the first counterexample found.

#ifndef DVDP_VERIFICATION_HPP
#define DVDP_VERIFICATION_HPP

#include "dvdp/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dvdp {

struct VerificationRecord {
    /// Scope id, for example "A-1" or "divD".
    std::string scope;
    /// Check name within the scope.
    std::string id;
    bool passed = false;
    std::uint64_t checked = 0;
    std::string detail;
    std::optional<std::string> counterexample;
    /// Per-case log lines (for example one per catalog entry).
    std::vector<std::string> log;
    double seconds = 0.0;
};

struct VerificationOptions {
    /// Denominator bound of the Corti witness search.
    int denominator_bound = 8;
    /// Directory holding the fixture catalog; the catalog scope needs it.
    std::string fixtures_dir = "fixtures";
};

/// Scope ids accepted by run_verification besides "all".
const std::vector<std::string>& verification_scopes();

/// Runs one scope, or every scope for "all". Throws InputError for an
/// unknown scope id.
std::vector<VerificationRecord> run_verification(const std::string& scope, const VerificationOptions& options = {});

/// Report document: { "passed": bool, "model_note": str, "records": [...] }.
Json verification_report(const std::vector<VerificationRecord>& records);

bool all_passed(const std::vector<VerificationRecord>& records);

}  // namespace dvdp

#endif  // DVDP_VERIFICATION_HPP
