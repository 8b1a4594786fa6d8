#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lopsa {

// One release-gate check: an end-to-end property of the library verified
// exactly, most by fixed-seed random suites. The catalogue is stable; ids
// are 1-based and never reused.
struct GateResult {
    int id = 0;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

int gate_count();

// Runs check `id` (1..gate_count()). seed_base perturbs the random suites;
// 0 is the published fixed seeding. Exceptions are caught and reported as
// failures.
GateResult run_gate_check(int id, std::uint64_t seed_base = 0);

// All checks, or only `only` when nonzero.
std::vector<GateResult> run_gate(int only = 0, std::uint64_t seed_base = 0);

} // namespace lopsa
