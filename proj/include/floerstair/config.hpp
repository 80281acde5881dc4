#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace floerstair {

// Resource caps for tensor-sized computations.  Overridable from the
// environment: FLOERSTAIR_MAX_GENERATORS, FLOERSTAIR_DOMINATION_N,
// FLOERSTAIR_TIME_BUDGET_S.
struct caps {
    std::int64_t max_generators = 50'000;
    std::int64_t domination_depth = 3;
    double per_claim_seconds = 600.0;

    static caps from_env() {
        caps c;
        if (const char* v = std::getenv("FLOERSTAIR_MAX_GENERATORS"))
            c.max_generators = std::strtoll(v, nullptr, 10);
        if (const char* v = std::getenv("FLOERSTAIR_DOMINATION_N"))
            c.domination_depth = std::strtoll(v, nullptr, 10);
        if (const char* v = std::getenv("FLOERSTAIR_TIME_BUDGET_S"))
            c.per_claim_seconds = std::strtod(v, nullptr);
        return c;
    }
};

}  // namespace floerstair
