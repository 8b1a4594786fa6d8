#pragma once

#include "lopsa/decision_tree.hpp"
#include "lopsa/formulas.hpp"
#include "lopsa/sa.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lopsa {

// Total search problem in verifier form: on input x (plain bits 1..input_bits),
// output b is a solution iff relation[b][c] accepts x for every witness c.
// The relation trees are boolean decision trees over the input bits.
struct SearchProblem {
    int input_bits = 0;
    std::vector<std::string> outputs; // labels, unique
    int witnesses = 1;
    std::vector<std::vector<DecisionTree>> relation; // [output][witness]

    bool solves(const std::vector<bool>& x, int output) const;
    std::optional<int> solution(const std::vector<bool>& x) const; // least solving output
    bool is_total() const; // exhausts the inputs (exhaustion cap applies)
    void validate() const;
};

// Assignment reading plain variable k as x[k-1].
Assignment plain_assignment(const std::vector<bool>& x);

// The family claiming "x has no solution": one axiom per output b, the OR
// over witnesses c of the rejecting paths of relation[b][c]. Unsatisfiable
// iff the problem is total.
AxiomFamily false_family(const SearchProblem& r, const std::string& name);

// Wraps an unsatisfiable plain-variable family as a search problem: output o
// solves x iff axiom D_o evaluates false, witness c pointing at the term of
// D_o that must fail. false_family() inverts this up to dropped zero terms.
SearchProblem ff_problem(const AxiomFamily& f);

// Reduction data: f computes the target input bit by bit, g[b] maps a target
// solution b back to a source output (leaves index the source outputs).
struct Formulation {
    std::vector<DecisionTree> f;
    std::vector<DecisionTree> g; // aligned with the target's outputs

    int size() const { return static_cast<int>(f.size()); }
    int depth() const; // max tree depth over f and g
};

struct FormulationFailure {
    std::vector<bool> x;
    std::string target_output; // b solving f(x)
    std::string mapped_output; // y = g_b(x) failing on x
    int witness = 0;           // witness c with relation[y][c](x) = 0

    std::string str() const;
};

struct FormulationCheck {
    bool ok = true;
    std::optional<FormulationFailure> failure;
};

// Checks "b solves f(x) implies g_b(x) solves x" by exhausting the source
// inputs. Throws InvalidInputError on shape mismatches.
FormulationCheck check_formulation(const SearchProblem& q, const SearchProblem& r,
                                   const Formulation& phi);

// Counter-example extension: h[b][z] maps a failed source witness z back to
// a target witness (leaves index the target's witnesses).
struct CounterExampleFormulation {
    Formulation base;
    std::vector<std::vector<DecisionTree>> h; // [target output][source witness]
};

// Checks "relation_R[b][h_bz(x)] accepts f(x) implies relation_Q[g_b(x)][z]
// accepts x" by exhausting the source inputs.
FormulationCheck check_ce_formulation(const SearchProblem& q, const SearchProblem& r,
                                      const CounterExampleFormulation& ce);

// Composition through the reduction's input trees: every literal of t
// expands into the matching accepting or rejecting paths of f, combined by
// conjunction with contradictions dropped. The results partition t's
// composed support, so DNF and junta composition preserve values exactly.
std::vector<Conjunct> compose_conjunct(const Conjunct& t, const std::vector<DecisionTree>& f);
Dnf compose_dnf(const Dnf& d, const std::vector<DecisionTree>& f);
ConicalJunta compose_junta(const ConicalJunta& j, const std::vector<DecisionTree>& f);

std::string reduced_output_label(const std::string& target_output,
                                 const std::string& source_output);

// The problem R(f,g) over the source inputs: output (y,b) solves x iff
// g_b(x) = y and b solves f(x). Its axiom family is kept in indicator form,
// axiom (y,b) = "g_b(x) != y" paths plus the composed rejecting paths of b's
// relation trees; that shape is what proof transformation multiplies out.
struct ReducedProblem {
    SearchProblem problem;
    AxiomFamily axioms;
    std::vector<std::pair<int, int>> output_pairs; // (source output, target output) per reduced output
};

// y ranges over the source outputs labeling at least one g leaf, so every
// g_b path is caught by some (y,b) and the indicator identities hold.
ReducedProblem reduced_problem(const SearchProblem& q, const SearchProblem& r,
                               const Formulation& phi);

// Splits a formulation Q -> R into a weakening step Q -> R(f,g) (identity f,
// constant g, validated as boolean weakenings of Q's false family) and a
// counter-example step R(f,g) -> R (same f, g tagged with b, constant h;
// valid by construction and rechecked).
struct Factorization {
    ReducedProblem mid;
    std::vector<WeakeningEntry> weakening; // source = Q output, dnf = mid axiom
    Formulation wk_formulation;            // Q -> mid
    CounterExampleFormulation ce;          // mid -> R
    bool weakening_ok = false;
    std::optional<ImplicationWitness> weakening_witness;
    bool ce_ok = false;
    std::optional<FormulationFailure> ce_failure;
};

Factorization factorize(const SearchProblem& q, const SearchProblem& r, const Formulation& phi);

// Pulls a refutation of R's false family back through the reduction: each
// entry (D', J) becomes, per reduced output (y,b), the weakening
// "g_b != y or D' composed with f" with junta (J composed with f) * G_{b,y},
// and the slack composes through f. The result refutes mid.axioms with
// degree at most depth(phi) * (degree(input) + 2).
struct TransformResult {
    SAProof proof;
    SACheck check;       // verification against mid.axioms
    int degree_bound = 0;
    bool degree_ok = false;
};

TransformResult transform_sa_proof(const SAProof& r_proof, const SearchProblem& r,
                                   const ReducedProblem& mid, const Formulation& phi);

} // namespace lopsa
