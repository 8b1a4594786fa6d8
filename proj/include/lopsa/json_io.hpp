#pragma once

#include "lopsa/covering.hpp"
#include "lopsa/lp_oracle.hpp"
#include "lopsa/normalization.hpp"
#include "lopsa/pe.hpp"
#include "lopsa/reductions.hpp"
#include "lopsa/sa.hpp"

#include <json.hpp>

// Canonical JSON forms for every value the command line reads or writes.
// Rationals and big integers are decimal strings ("p" or "p/q", reduced,
// q > 0); variables are their text tokens ("x(i,j)" order, "xk" plain);
// orders and chain terms are integer arrays, first element first. Object
// keys are emitted sorted, so equal values serialize byte-identically.
// The full schema catalogue lives in docs/formats.md.

namespace lopsa {

using Json = nlohmann::json;

std::string var_to_token(const VarId& v);
VarId var_from_token(const std::string& s);

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

void to_json(Json& j, const VarId& v);
void from_json(const Json& j, VarId& v);

void to_json(Json& j, const Conjunct& t);
void from_json(const Json& j, Conjunct& t);

void to_json(Json& j, const Dnf& d);
void from_json(const Json& j, Dnf& d);

void to_json(Json& j, const Polynomial& p);
void from_json(const Json& j, Polynomial& p);

void to_json(Json& j, const ConicalJunta& jn);
void from_json(const Json& j, ConicalJunta& jn);

void to_json(Json& j, const TotalOrder& z);
void from_json(const Json& j, TotalOrder& z);

void to_json(Json& j, const CanonicalTerm& t);
void from_json(const Json& j, CanonicalTerm& t);

void to_json(Json& j, const NormalizedDnf& nd);
void from_json(const Json& j, NormalizedDnf& nd);

void to_json(Json& j, const VarUniverse& u);
void from_json(const Json& j, VarUniverse& u);

void to_json(Json& j, const AxiomFamily& f);
void from_json(const Json& j, AxiomFamily& f);

void to_json(Json& j, const WeakeningEntry& w);
void from_json(const Json& j, WeakeningEntry& w);

void to_json(Json& j, const SAProof& p);
void from_json(const Json& j, SAProof& p);

void to_json(Json& j, const SAMetrics& m);

void to_json(Json& j, const DecisionTree& t);
void from_json(const Json& j, DecisionTree& t);

void to_json(Json& j, const SearchProblem& p);
void from_json(const Json& j, SearchProblem& p);

void to_json(Json& j, const Formulation& f);
void from_json(const Json& j, Formulation& f);

void to_json(Json& j, const CounterExampleFormulation& f);
void from_json(const Json& j, CounterExampleFormulation& f);

// Report emission (one direction: these are outputs, not inputs).
void to_json(Json& j, const PeReport& r);
void to_json(Json& j, const ConditionViolation& v);
void to_json(Json& j, const ConditionsReport& r);
void to_json(Json& j, const KfactReport& r);
void to_json(Json& j, const OvercountReport& r);
void to_json(Json& j, const HitMatrix& m);
void to_json(Json& j, const HitReport& r);
void to_json(Json& j, const M1Report& r);
void to_json(Json& j, const ImplicationWitness& w);
void to_json(Json& j, const SACheck& c);
void to_json(Json& j, const FormulationFailure& f);
void to_json(Json& j, const FormulationCheck& c);
void to_json(Json& j, const DegreeOracleResult& r);
void to_json(Json& j, const CoverSet& s);
void to_json(Json& j, const CoverResult& r);
void to_json(Json& j, const Factorization& f);
void to_json(Json& j, const TransformResult& r);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

} // namespace lopsa
