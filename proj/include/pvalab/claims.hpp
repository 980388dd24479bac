#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pvalab/exprio.hpp"

namespace pvalab {

// One reproducible claim. run() fills status, witness and (optionally)
// prolongation_bound; the runner stamps claim_id, anchor and runtime.
struct Claim {
    std::string id;
    std::string anchor; // plain-language statement being verified
    bool optional = false;
    std::function<ClaimResult()> run;
};

struct ClaimOptions {
    // Prolongation bound used by the optional obstruction-prolongation
    // claim; higher bounds are more conclusive and much slower.
    int prolong_order = 1;
};

const std::vector<Claim>& claim_registry(const ClaimOptions& opts = {});

// Worker count: PVA_LAB_THREADS when set, hardware concurrency otherwise.
int thread_count_hint();

// Run the claims with the given ids (all when empty) on a task pool;
// results come back in registry order.
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids = {},
                                    const ClaimOptions& opts = {});

// Seed-pinned randomized property suites, shared between the acceptance
// claim and the unit tests. Returns descriptions of failing cases.
std::vector<std::string> property_suite_names();
std::vector<std::string> run_property_suite(const std::string& name, std::uint64_t seed,
                                            int cases);

} // namespace pvalab
