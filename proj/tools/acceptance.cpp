// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include "lopsa/gate.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (int id = 1; id <= lopsa::gate_count(); ++id) {
        if (only != 0 && id != only) continue;
        lopsa::GateResult r = lopsa::run_gate_check(id);
        std::cout << "criterion " << std::setw(2) << r.id << "  "
                  << (r.pass ? "PASS" : "[FAIL]") << "  " << std::fixed << std::setprecision(2)
                  << std::setw(7) << r.seconds << "s  " << r.detail << "\n";
        std::cout.flush();
        if (!r.pass) ++failures;
    }
    if (failures) {
        std::cout << failures << " criteria failing\n";
        return 1;
    }
    std::cout << "all criteria pass\n";
    return 0;
}
