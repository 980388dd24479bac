#include <cstdio>

#include "pvalab/claims.hpp"

// Runs every recorded claim and prints one line per criterion. The optional
// prolongation claim reports "inconclusive" at a low bound without failing
// the suite; raise PVA_LAB_PROLONG to chase the full certificate.
int main() {
    using namespace pvalab;
    setvbuf(stdout, nullptr, _IONBF, 0);
    ClaimOptions opts;
    if (const char* env = std::getenv("PVA_LAB_PROLONG")) {
        int n = std::atoi(env);
        if (n > 0) opts.prolong_order = n;
    }
    const auto& reg = claim_registry(opts);
    auto results = run_claims({}, opts);
    bool ok = true;
    for (auto& r : results) {
        bool optional = false;
        for (auto& c : reg)
            if (c.id == r.claim_id) optional = c.optional;
        const char* tag = r.status == "pass"           ? "PASS"
                          : r.status == "inconclusive" ? "INCONCLUSIVE"
                                                       : "FAIL";
        std::printf("[%s] %s%s (%lld ms): %s\n", tag, r.claim_id.c_str(),
                    optional ? " (optional)" : "", static_cast<long long>(r.runtime_ms),
                    r.witness.c_str());
        if (!optional && r.status != "pass") ok = false;
    }
    std::printf("%s\n", ok ? "ACCEPTANCE: all gating criteria pass"
                           : "ACCEPTANCE: FAILURES PRESENT");
    return ok ? 0 : 1;
}
