#pragma once

#include <rainbowsat/sat_numbers.hpp>

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbowsat {

inline constexpr std::string_view verify_schema = "rainbowsat.verify/1";

struct VerifyOptions {
    RunOptions run;
    /// Adds the slower checks (K4 lower bound at n = 6, K4 audit at n = 7).
    bool extended = true;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// A search ran out of budget; counts as a failure.
    bool indeterminate = false;
    nlohmann::json detail = nlohmann::json::object();
};

struct ClaimResult {
    std::string id;
    std::string summary;
    std::vector<CheckResult> checks;

    [[nodiscard]] auto passed() const -> bool;
};

struct VerifyReport {
    std::vector<ClaimResult> claims;

    [[nodiscard]] auto passed() const -> bool;
};

/// ehm, p4-classical, c4-classical, p3-footnote, c4-wheel, c4-degree-one, p4, k4-ratio, ladder.
auto claim_ids() -> std::vector<std::string>;

/// Throws std::invalid_argument for an unknown id.
auto verify_claim(std::string_view id, const VerifyOptions &options = {}) -> ClaimResult;

/// Runs the selected claims in claim_ids() order; an empty selection runs all.
auto verify_claims(std::span<const std::string> selection, const VerifyOptions &options = {}) -> VerifyReport;

/// Byte-stable for fixed options: no timings and no thread count.
auto report_to_json(const VerifyReport &report, const VerifyOptions &options) -> nlohmann::json;

} // namespace rainbowsat
