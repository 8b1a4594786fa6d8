#pragma once

#include "lopsa/dnf.hpp"
#include "lopsa/sa_proof.hpp"
#include "lopsa/varid.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lopsa {

// A labeled family of DNF axioms over a declared variable universe. The
// family is read as the claim "all axioms hold"; refuting it in the
// Sherali-Adams sense means deriving -1 from nonnegative combinations.
struct AxiomFamily {
    std::string name;
    VarUniverse universe;
    std::vector<std::pair<std::string, Dnf>> axioms; // labels unique

    const Dnf& axiom(const std::string& label) const;
    bool has_axiom(const std::string& label) const;
    int max_degree() const;

    void validate() const; // unique labels, variables inside the universe
};

// Linear ordering principle over order variables x(i,j), n >= 3:
//   M_i : some j != i precedes i           (OR_j x(j,i))
//   R_i : not x(i,i)
//   A_{i,j} : !x(i,j) | !x(j,i)            (unordered pairs i < j)
//   T_{i,j,k} : x(i,k) | !x(i,j) | !x(j,k) (ordered distinct triples)
//   O_{i,j} : x(i,j) | !x(i,j)             (ordered distinct pairs)
// Every axiom is a degree-1 DNF. O axioms read as the zero polynomial but
// stay in the family: they are legitimate weakening sources.
AxiomFamily lop(int n);

// Axiom labels used by lop(): "M1", "R2", "A1,2", "T1,2,3", "O2,1".
std::string lop_m_label(int i);
std::string lop_r_label(int i);
std::string lop_a_label(int i, int j);
std::string lop_t_label(int i, int j, int k);
std::string lop_o_label(int i, int j);

// Least-number principle over plain booleans x1..xn: "L0" says some variable
// is true, "Li" says xi is false or some earlier xj is true. Unsatisfiable,
// with a constant-degree refutation of exponential unary size.
AxiomFamily least_number(int n);

// The explicit refutation: identity weakening, junta 1 on L0 and 2^{n-i} on
// Li, empty slack. Verifies to -1 at degree 1.
SAProof least_number_refutation(int n);

// Families registered for the CLI: "lop", "least-number".
AxiomFamily family_by_name(const std::string& family, int n);

} // namespace lopsa
