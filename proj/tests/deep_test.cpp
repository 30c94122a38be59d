#include <doctest.h>

#include "fslab/canonical.hpp"
#include "fslab/claims.hpp"
#include "fslab/families.hpp"
#include "fslab/graph.hpp"

using namespace fslab;

// Order-7 sweeps: a couple of seconds each, kept out of the fast suite.

TEST_CASE("connected class count at n = 7") {
    CHECK(enumerate_connected(7).size() == 853);
}

TEST_CASE("dense-graph connectivity lower bound at n = 7") {
    ClaimResult r = run_claim("Lem2.9", 7, {});
    CHECK(r.verdict == Verdict::AllPass);
    CHECK(r.hypothesis_satisfied == 852);  // every connected class except K_7
}

TEST_CASE("vertex-deletion-critical characterization at n = 7") {
    ClaimResult r = run_claim("Lem3.9", 7, {});
    CHECK(r.verdict == Verdict::AllPass);
    CHECK(r.hypothesis_satisfied >= 1);  // C_7 itself qualifies
}

TEST_CASE("the 7-vertex exceptional pair separates into six components") {
    ClaimResult r = run_claim("Thm1.1", 7, {});
    CHECK(r.verdict == Verdict::AllPass);
}

TEST_CASE("star reachability holds around the exceptional graph") {
    ClaimResult r = run_claim("Lem3.4", 7, {});
    CHECK(r.verdict == Verdict::AllPass);
    CHECK(r.hypothesis_satisfied == 1);
}

TEST_CASE("the whole claim catalog stays green at n = 6") {
    ClaimContext ctx;
    for (const auto& id : claim_ids()) {
        if (id == "SelfTest.AlwaysFails") continue;
        ClaimResult r = run_claim(id, 6, ctx);
        INFO(id, " -> ", verdict_name(r.verdict), " ", r.witness_json);
        CHECK(r.verdict != Verdict::Counterexample);
    }
}
