#pragma once

#include "lopsa/formulas.hpp"
#include "lopsa/sa_proof.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lopsa {

// A falsifying point for one weakening entry: the source axiom holds there
// and the weakened DNF does not. Only mentioned variables are listed; the
// rest are irrelevant.
struct ImplicationWitness {
    std::size_t entry = 0;
    std::vector<std::pair<VarId, bool>> assignment;

    std::string str() const;
};

struct WeakeningCheck {
    bool ok = true;
    std::optional<ImplicationWitness> witness; // first failure found
};

// Checks each entry's claim "source axiom implies entry DNF" as a boolean
// implication, exhausting all assignments of the mentioned variables.
// Throws InvalidInputError for unknown source labels or variables outside
// the family universe, EnumerationBoundError past the exhaustion cap.
WeakeningCheck check_weakening(const AxiomFamily& f, const std::vector<WeakeningEntry>& entries);

struct SACheck {
    bool ok = false;           // weakening_ok && identity_ok
    bool weakening_ok = false;
    std::optional<ImplicationWitness> witness;
    bool identity_ok = false;
    Polynomial residual;       // sum_i D'_i J_i + J + 1; zero iff the identity holds
    SAMetrics metrics;
};

// Verifies a refutation of the family: every entry must weaken its source
// axiom and the combination sum_i D'_i * J_i + J must equal -1 exactly.
// Metrics are computed either way; unary size needs integral multiplicities.
SACheck check_sa_proof(const AxiomFamily& f, const SAProof& p);

// Metrics alone, without any verification.
SAMetrics sa_metrics(const AxiomFamily& f, const SAProof& p);

} // namespace lopsa
