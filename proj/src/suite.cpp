#include "fslab/suite.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fslab {

SuiteConfig SuiteConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("suite config: ") + e.what());
    }
    SuiteConfig cfg;
    if (j.contains("nRange")) {
        cfg.n_min = j["nRange"].at(0);
        cfg.n_max = j["nRange"].at(1);
    }
    cfg.parallelism = j.value("parallelism", 0);
    cfg.halt_on_counterexample = j.value("haltOnCounterexample", true);
    cfg.seed = j.value("seed", std::uint64_t{20240});
    if (!j.contains("claims") || !j["claims"].is_array())
        throw std::invalid_argument("suite config: missing claims array");
    for (const auto& entry : j["claims"]) {
        SuiteClaimRequest req;
        if (entry.is_string()) {
            req.id = entry;
        } else {
            req.id = entry.at("id");
            if (entry.contains("nRange")) {
                req.n_min = entry["nRange"].at(0);
                req.n_max = entry["nRange"].at(1);
            }
        }
        if (!claim_known(req.id))
            throw std::invalid_argument("suite config: unknown claim id: " + req.id);
        cfg.claims.push_back(std::move(req));
    }
    return cfg;
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport report;
    ClaimContext ctx;
    ctx.parallelism = config.parallelism;
    ctx.halt_on_counterexample = config.halt_on_counterexample;
    ctx.seed = config.seed;
    for (const SuiteClaimRequest& req : config.claims) {
        auto [lo, hi] = claim_n_range(req.id);
        int n_min = req.n_min > 0 ? req.n_min : config.n_min;
        int n_max = req.n_max > 0 ? req.n_max : config.n_max;
        n_min = std::max(n_min, lo);
        n_max = std::min(n_max, hi);
        if (n_min > n_max) {
            // Entirely outside the claim's range: record one vacuous row.
            ClaimResult r;
            r.id = req.id;
            r.n = n_min;
            r.verdict = Verdict::VacuousAtThisN;
            report.results.push_back(std::move(r));
            continue;
        }
        for (int n = n_min; n <= n_max; ++n) {
            report.results.push_back(run_claim(req.id, n, ctx));
            if (report.results.back().verdict == Verdict::Counterexample) {
                report.exit_code = 1;
                if (config.halt_on_counterexample) return report;
            }
        }
    }
    return report;
}

std::string SuiteReport::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    auto rows = nlohmann::ordered_json::array();
    for (const ClaimResult& r : results) {
        nlohmann::ordered_json row;
        row["id"] = r.id;
        row["n"] = r.n;
        row["instancesChecked"] = r.instances_checked;
        row["hypothesisSatisfied"] = r.hypothesis_satisfied;
        row["verdict"] = verdict_name(r.verdict);
        if (!r.witness_json.empty())
            row["witness"] = nlohmann::ordered_json::parse(r.witness_json);
        if (with_timings) row["runtimeMs"] = static_cast<long long>(r.runtime_seconds * 1000.0);
        rows.push_back(std::move(row));
    }
    j["claims"] = std::move(rows);
    j["allPass"] = exit_code == 0;
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_csv() const {
    std::ostringstream out;
    out << "claim,n,instancesChecked,hypothesisSatisfied,verdict\n";
    for (const ClaimResult& r : results)
        out << r.id << ',' << r.n << ',' << r.instances_checked << ',' << r.hypothesis_satisfied
            << ',' << verdict_name(r.verdict) << '\n';
    return out.str();
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    for (const ClaimResult& r : results) {
        out << r.id << " n=" << r.n << "  " << verdict_name(r.verdict) << "  (checked "
            << r.instances_checked << ", hypothesis " << r.hypothesis_satisfied << ")";
        std::string what = claim_description(r.id);
        if (!what.empty()) out << "  -- " << what;
        out << '\n';
        if (!r.witness_json.empty()) out << "  witness: " << r.witness_json << '\n';
    }
    out << (exit_code == 0 ? "suite: all claims pass\n" : "suite: counterexample found\n");
    return out.str();
}

}  // namespace fslab
