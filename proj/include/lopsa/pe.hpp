#pragma once

#include "lopsa/dnf.hpp"
#include "lopsa/formulas.hpp"
#include "lopsa/normalization.hpp"
#include "lopsa/orders.hpp"
#include "lopsa/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lopsa {

// Expectation over the uniform distribution on total orders of [n], extended
// linearly to polynomials over the order variables. Exact throughout: the
// value of a monomial is (#satisfying orders)/n!, computed as L/m! where L
// counts the linear extensions of the constraint digraph on the m mentioned
// elements (bitmask DP, cached per monomial).
class PeEngine {
public:
    explicit PeEngine(int n);

    int n() const { return n_; }

    Rat of_monomial(const Monomial& m);
    Rat of_poly(const Polynomial& p);
    Rat of_conjunct(const Conjunct& t);
    Rat of_dnf(const Dnf& d); // DNF polynomial: sum of terms - 1
    Rat of_junta(const ConicalJunta& j);
    Rat of_term(const CanonicalTerm& t);        // 1/k! closed form
    Rat of_normalized(const NormalizedDnf& nd); // #terms/k! - 1 closed form

    // pe[(sum_t t - 1) * J], by polynomial expansion.
    Rat of_product(const Dnf& d, const ConicalJunta& j);

private:
    int n_;
    std::map<Monomial, Rat> cache_;
};

// Expectation with its bookkeeping: every breakdown entry is a contribution
// in units of orders, so value * n! = sum of contributions.
struct PeReport {
    Rat value;
    Int universe; // n!
    std::vector<std::pair<std::string, Rat>> breakdown;
};

PeReport pe_report(const Dnf& d, int n);
PeReport pe_report(const Polynomial& p, int n);
PeReport pe_report(const Dnf& d, const ConicalJunta& j, int n);

struct ConditionViolation {
    int condition = 0;  // 1, 2 or 3
    std::string axiom;  // label; empty unless condition 3
    Conjunct junta;     // witnessing conjunct (conditions 2 and 3)
    Rat value;
};

struct ConditionsReport {
    bool ok = false;
    int degree = 0;
    long conjuncts = 0;      // negation-free conjuncts enumerated
    long products_checked = 0; // (axiom, conjunct) pairs within the degree
    std::optional<ConditionViolation> violation;
};

// Verifies the three degree-d pseudo-expectation conditions for the uniform
// order distribution against the axioms: pe[1] = 1; pe[J] >= 0 for juntas of
// degree <= d; pe[D_i * J] >= 0 whenever deg(D_i * J) <= d. By linearity it
// is enough to range over single conjuncts, and negation-free ones suffice
// (negations rewrite away without changing satisfying orders). Diagonal
// variables stay in the enumeration universe; their conjuncts vanish on
// every order. Throws EnumerationBoundError when the conjunct pool would
// exceed the cap.
ConditionsReport check_conditions(const AxiomFamily& f, int d, int n,
                                  long conjunct_cap = 2000000);

struct KfactReport {
    Rat pe_value;     // #terms/k! - 1
    Int term_count;
    Int k_factorial;
    bool nonneg = false;
    // When pe < 0 and such an order exists: an order not starting with 1
    // that N rejects, exhibiting that N is not a weakening of the
    // order-minimality axiom. Absent iff N is a weakening; a weakening with
    // pe < 0 is exactly a sub-factorial covering of the orders not starting
    // with 1. Requires enumeration.
    std::optional<TotalOrder> rejected_not_starting_1;
};

KfactReport kfact_criterion(const NormalizedDnf& nd, int n);

struct OvercountReport {
    Int rejected;                            // |R|
    std::map<long, Int> accepted_by_exactly; // i -> |S_i|, i >= 1
    Int universe;                            // orders scanned
    Rat pe_value;                            // closed form (see below)
    Int overcount;                           // sum (i-1)|S_i| - |R|
    bool identity_holds = false;             // n! * pe_value == overcount
};

// Scans all orders and buckets them by acceptance multiplicity, verifying
//   n! * pe[N] = sum_{i>=2} (i-1)|S_i| - |R|
// with pe[N] from the closed form. With a restriction term t (1 first), the
// scan covers only orders consistent with t, every term of N must accept
// consistent orders only, and the identity becomes
//   n! * pe[N + 1 - t] = sum (i-1)|S_i| - |R|.
OvercountReport overcount_identity(const NormalizedDnf& nd, int n,
                                   const std::optional<CanonicalTerm>& restriction = {});

enum class HitMode { Pairs, Triples };

// For a fixed order z on the non-excluded elements, entry (i,j) (or (i,j,k))
// records that some term of N is z-good for i (first i, then 1, consistent
// with i1(z minus i) on its support) while omitting j (and k) from its
// support. Triple entries satisfy at(i,j,k) == at(i,k,j); diagonals stay 0.
struct HitMatrix {
    HitMode mode = HitMode::Pairs;
    std::vector<int> index; // elements indexing each axis, sorted
    std::vector<char> entries;

    bool at(int i, int j) const;
    bool at(int i, int j, int k) const;
    int side() const { return static_cast<int>(index.size()); }
};

// 1-entries in the matrix.
Int count_ones(const HitMatrix& m);

// Hitting pairs (both mirror entries 1) or hitting triples (all six
// permuted entries 1).
Int count_hitting(const HitMatrix& m);

// The counting floor on hitting structures for a side-s matrix with q ones:
// q - C(s,2) for pairs, (q - 4 C(s,3))/2 for triples. Every matrix whose
// 1-entries avoid the diagonal (and mirror-pair for triples) has at least
// this many hits.
Rat hitting_floor(const HitMatrix& m);

struct HitReport {
    HitMatrix matrix;
    Int ones;        // q: 1-entries in the matrix
    Int hits;        // hitting pairs (both mirror entries 1) or triples (all six)
    Rat floor_bound; // q - C(n-1,2), or (q - 4 C(n-l,3))/2
    bool floor_ok = false;
};

// Pairs mode: z orders [n] minus {1} and 1z must be rejected by N.
// Triples mode: tstar (1 first) is required, z orders [n] minus {1}, and 1z
// must be consistent with tstar and rejected by N. Elements of tstar's
// support are excluded from the triple index set.
HitReport hit_structures(const NormalizedDnf& nd,
                         const std::optional<CanonicalTerm>& tstar,
                         const std::vector<int>& z, HitMode mode, int n);

struct M1Report {
    bool is_weakening = false;
    std::optional<TotalOrder> violating_order; // set when the check fails
    Rat pe_value;        // pe[N * t]
    bool nonneg = false;
    NormalizedDnf merged;         // N' with pe[N*t] = pe[N'+1-t]
    Rat merged_pe;                // pe[N'+1-t], must equal pe_value
    OvercountReport certificate;  // over-count accounting for N' given t
};

// Checks semantically (over total orders consistent with tstar) that N
// accepts every order not starting with 1, then evaluates pe[N * tstar]
// directly and through the merged form, with the over-count certificate.
// A failed weakening check reports the violating order and skips the
// certificate.
M1Report verify_m1_nonneg(const NormalizedDnf& nd, const CanonicalTerm& tstar, int n);

} // namespace lopsa
