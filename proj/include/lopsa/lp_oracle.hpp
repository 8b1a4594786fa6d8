#pragma once

#include "lopsa/formulas.hpp"
#include "lopsa/sa.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lopsa {

// Junta basis of the degree-d LP: conjuncts over the universe, order
// variables positive only, plain variables in both polarities.
std::vector<Conjunct> junta_basis(const VarUniverse& u, int degree);

// Multilinear monomials of degree <= d over the universe.
std::vector<Monomial> monomial_basis(const VarUniverse& u, int degree);

// Degree of the product D * u before cancellation: max of deg(u) and the
// degree of every nonzero conjunction t & u over terms t of D.
int product_degree(const Dnf& d, const Conjunct& u);

struct DegreeOracleResult {
    bool feasible = false;
    std::optional<SAProof> refutation;  // verified before returning
    std::map<Monomial, Rat> dual;       // pe values normalized to 1 on the empty monomial
    long long pivots = 0;
    std::size_t lp_rows = 0;
    std::size_t lp_cols = 0;
};

// Decides whether the family has a degree-d refutation: a nonnegative
// combination of axiom * basis-conjunct products (product degree <= d) plus
// slack basis conjuncts summing to -1. Feasible solves return a verified
// refutation with identity weakenings and rational multiplicities.
// Infeasible solves return the Farkas dual, rescaled so the empty monomial
// reads 1; it then values every slack column and every product column
// nonnegatively, which is rechecked before returning.
DegreeOracleResult lp_degree_oracle(const AxiomFamily& f, int d);

// The family extended by a pool of weakenings as extra axioms labeled
// "W<i>(<source>)". Every pool entry must check out as a boolean weakening
// of its source axiom.
AxiomFamily extend_with_pool(const AxiomFamily& f, const std::vector<WeakeningEntry>& pool);

// lp_degree_oracle over the extended family. Extension only adds columns,
// so a refutable base family stays refutable.
DegreeOracleResult sigma2_lp_oracle(const AxiomFamily& f, int d,
                                    const std::vector<WeakeningEntry>& pool);

// Independent check of a dual point: 1 on the empty monomial, nonnegative
// on every basis conjunct and every admitted product column.
bool validate_dual(const AxiomFamily& f, int d, const std::map<Monomial, Rat>& dual);

} // namespace lopsa
