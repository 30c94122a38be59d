#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fslab/claims.hpp"

namespace fslab {

struct SuiteClaimRequest {
    std::string id;
    int n_min = 0;  // 0 = inherit the suite-wide range
    int n_max = 0;
};

// JSON config: {"claims": ["Thm1.6", {"id": "Lem3.8", "nRange": [8, 8]}],
//               "nRange": [4, 5], "parallelism": 0,
//               "haltOnCounterexample": true, "seed": 20240}
struct SuiteConfig {
    std::vector<SuiteClaimRequest> claims;
    int n_min = 4;
    int n_max = 5;
    int parallelism = 0;
    bool halt_on_counterexample = true;
    std::uint64_t seed = 20240;

    static SuiteConfig from_json(const std::string& text);
};

struct SuiteReport {
    std::vector<ClaimResult> results;
    // 0: all pass or vacuous; 1: some counterexample. (Config errors throw
    // before a report exists; the CLI maps those to exit code 2.)
    int exit_code = 0;

    std::string to_json(bool with_timings) const;
    std::string to_csv() const;
    std::string to_text() const;
};

// Claims run in config order, each over its n range clamped to the claim's
// own supported range; results ordered by (config position, n).
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace fslab
