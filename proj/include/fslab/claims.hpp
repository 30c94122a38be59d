#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fslab {

struct ClaimContext {
    int parallelism = 0;  // 0 = FS_LAB_THREADS env var, else hardware
    bool halt_on_counterexample = true;
    std::uint64_t seed = 20240; // drives the sampled / synthetic instances
};

enum class Verdict { AllPass, Counterexample, VacuousAtThisN };

const char* verdict_name(Verdict v);

// One theorem/lemma instance batch checked at a fixed n. A Counterexample
// witness is a self-contained JSON blob replayable via replay_witness().
struct ClaimResult {
    std::string id;
    int n = 0;
    long long instances_checked = 0;     // candidates scanned
    long long hypothesis_satisfied = 0;  // candidates meeting the hypothesis
    Verdict verdict = Verdict::VacuousAtThisN;
    std::string witness_json;
    double runtime_seconds = 0.0;
};

std::vector<std::string> claim_ids();
bool claim_known(const std::string& id);
// One-line description of what a claim checks.
std::string claim_description(const std::string& id);
// n range at which a claim produces non-vacuous work.
std::pair<int, int> claim_n_range(const std::string& id);
// Throws std::invalid_argument on unknown ids; out-of-range n yields Vacuous.
ClaimResult run_claim(const std::string& id, int n, const ClaimContext& ctx);

// True if the recorded violation still reproduces from the witness alone.
bool replay_witness(const std::string& witness_json);

// Grouped front doors over the per-claim scans.
ClaimResult check_main_sconnectivity(int n, int s, const ClaimContext& ctx = {});
ClaimResult check_bipartite_two_components(int n, int s, const ClaimContext& ctx = {});
std::vector<ClaimResult> check_degree_theorems(int n, const ClaimContext& ctx = {});
std::vector<ClaimResult> check_section4(int n, const ClaimContext& ctx = {});
std::vector<ClaimResult> check_structural_lemmas(int n, const ClaimContext& ctx = {});

}  // namespace fslab
