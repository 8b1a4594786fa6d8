#pragma once

#include "lopsa/dnf.hpp"

#include <string>
#include <vector>

namespace lopsa {

// One weakened axiom: a DNF implied (as a boolean formula) by the axiom it
// names. Several entries may share a source.
struct WeakeningEntry {
    std::string source; // label of the source axiom
    Dnf dnf;

    bool operator==(const WeakeningEntry&) const = default;
};

// Certificate for  sum_i D'_i * J_i + J = -1  in multilinear arithmetic,
// where D'_i is the i-th weakening entry read as a polynomial, J_i the
// matching junta, and J the slack junta. juntas.size() == weakening.size().
struct SAProof {
    std::vector<WeakeningEntry> weakening;
    std::vector<ConicalJunta> juntas;
    ConicalJunta slack;

    bool operator==(const SAProof&) const = default;
};

// degree: max over the family axioms D_i, the products D'_i * J_i (conjunct
// by conjunct, zero products skipped), and the slack junta.
// unary_size: monomials counted with multiplicity in exactly those objects
// (each family axiom D_i, each product D'_i * J_i, and J), a conjunct with
// e negations contributing 2^e monomials and each DNF one more for its
// constant. Defined when every multiplicity is integral; complexity =
// degree + log2(unary_size) in that case.
struct SAMetrics {
    int degree = 0;
    bool unary = false;
    Int unary_size = 0;
    double complexity = 0.0;
};

} // namespace lopsa
