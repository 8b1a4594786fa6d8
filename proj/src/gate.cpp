// Release-gate checks. Every check is exact; the random suites use fixed
// seeds (perturbable via seed_base), so runs are reproducible bit for bit.

#include "lopsa/gate.hpp"

#include "lopsa/config.hpp"
#include "lopsa/covering.hpp"
#include "lopsa/lp_oracle.hpp"
#include "lopsa/normalization.hpp"
#include "lopsa/pe.hpp"
#include "lopsa/reductions.hpp"
#include "lopsa/sa.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace lopsa {
namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// pe of a DNF by brute force: average of (satisfied-term count - 1) over all
// orders, multiplicities included.
Rat enum_pe_dnf(const Dnf& d, int n) {
    Int total = 0;
    for_each_order(n, [&](const TotalOrder& z) {
        total += d.satisfied_terms(z.assignment());
    });
    Int fact = factorial(n);
    Rat r(Int(total - fact), fact);
    r.canonicalize();
    return r;
}

std::vector<int> random_subset(Rng& rng, std::vector<int> pool, int k) {
    for (int i = 0; i < k; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(pick(rng, i, static_cast<int>(pool.size()) - 1))]);
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

CanonicalTerm random_term_with_1(Rng& rng, int k, int n, bool one_first) {
    std::vector<int> rest;
    for (int e = 2; e <= n; ++e) rest.push_back(e);
    std::vector<int> sup = random_subset(rng, rest, k - 1);
    sup.push_back(1);
    for (int i = static_cast<int>(sup.size()) - 1; i > 0; --i)
        std::swap(sup[static_cast<std::size_t>(i)],
                  sup[static_cast<std::size_t>(pick(rng, 0, i))]);
    if (one_first)
        for (std::size_t i = 0; i < sup.size(); ++i)
            if (sup[i] == 1) std::swap(sup[0], sup[i]);
    return CanonicalTerm::of(sup);
}

// ------------------------------------------------------------------- check 1

Outcome check1(std::uint64_t) {
    for (int n = 3; n <= 8; ++n) {
        PeEngine eng(n);
        AxiomFamily f = lop(n);
        Rat expected(n - 3, 2);
        expected.canonicalize();
        for (int i = 1; i <= n; ++i) {
            const Dnf& mi = f.axiom("M" + std::to_string(i));
            Rat closed = eng.of_dnf(mi);
            Rat brute = enum_pe_dnf(mi, n);
            if (closed != expected || brute != expected)
                return {false, "pe[M" + std::to_string(i) + "] at n=" + std::to_string(n) +
                                   ": closed " + rat_to_string(closed) + ", enumerated " +
                                   rat_to_string(brute) + ", expected " + rat_to_string(expected)};
        }
    }
    return {true, "pe of every non-minimality axiom equals (n-3)/2, n=3..8, both routes"};
}

// ------------------------------------------------------------------- check 2

Outcome check2(std::uint64_t seed) {
    Rng rng(0x5eed0002 ^ seed);
    long checked = 0;
    for (int n = 2; n <= 8; ++n) {
        PeEngine eng(n);
        Int fact = factorial(n);
        for (int k = 2; k <= n; ++k) {
            Rat expected(Int(1), factorial(k));
            expected.canonicalize();
            Int orders_expected = fact / factorial(k);
            for (int s = 0; s < 40; ++s) {
                CanonicalTerm t = random_term_with_1(rng, k, n, false);
                if (eng.of_term(t) != expected)
                    return {false, "closed form pe[" + t.str() + "] != 1/" + std::to_string(k) +
                                       "! at n=" + std::to_string(n)};
                if (count_satisfying(t.conjunct(), n) != orders_expected)
                    return {false, "enumerated order count for " + t.str() + " misses n!/k! at n=" +
                                       std::to_string(n)};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " chain terms, 2 <= k <= n <= 8, closed form = 1/k! = enumeration"};
}

// ------------------------------------------------------------------- check 3

Outcome check3(std::uint64_t seed) {
    Rng rng(0x5eed0003 ^ seed);
    int negative_witnesses = 0;
    for (int round = 0; round < 1000; ++round) {
        int n = pick(rng, 3, 6);
        int k = pick(rng, 2, n);
        Int kf = factorial(k);
        int cap = static_cast<int>(std::min<long>(2 * kf.get_si(), 20));
        int m = pick(rng, 1, cap);
        std::vector<CanonicalTerm> terms;
        for (int i = 0; i < m; ++i) terms.push_back(random_term_with_1(rng, k, n, false));
        NormalizedDnf nd = NormalizedDnf::make(k, terms);

        KfactReport kr = kfact_criterion(nd, n);
        Rat expected(Int(m) - kf, kf);
        expected.canonicalize();
        if (kr.pe_value != expected)
            return {false, "k!-criterion value off: got " + rat_to_string(kr.pe_value) +
                               ", want " + rat_to_string(expected)};
        if (enum_pe_dnf(nd.to_dnf(), n) != expected)
            return {false, "enumerated pe disagrees with #terms/k! - 1 (round " +
                               std::to_string(round) + ")"};
        if (kr.nonneg != (kr.pe_value >= 0)) return {false, "nonneg flag contradicts the value"};
        if (!kr.nonneg) {
            bool is_weakening = true;
            for_each_order(n, [&](const TotalOrder& z) {
                if (z.first() != 1 && !nd.accepts(z)) is_weakening = false;
            });
            if (kr.rejected_not_starting_1) {
                const TotalOrder& z = *kr.rejected_not_starting_1;
                if (z.first() == 1 || nd.accepts(z))
                    return {false, "exhibited order is not a counterexample: " + z.str()};
                if (is_weakening) return {false, "witness produced for a weakening"};
                ++negative_witnesses;
            } else if (!is_weakening) {
                // The only way pe < 0 comes without a witness is the
                // sub-factorial weakening phenomenon.
                return {false, "negative non-weakening without a rejected order"};
            }
        }

        OvercountReport oc = overcount_identity(nd, n);
        if (!oc.identity_holds)
            return {false, "over-count identity failed at round " + std::to_string(round)};
    }
    return {true, "1000 normalized DNFs, n <= 6: value, witness and over-count identity all exact (" +
                      std::to_string(negative_witnesses) + " negative cases exhibited orders)"};
}

// ------------------------------------------------------------------- check 4

Conjunct random_order_conjunct(Rng& rng, int n, int max_deg) {
    int deg = pick(rng, 0, max_deg);
    std::vector<VarId> pos, neg;
    for (int l = 0; l < deg; ++l) {
        int i = pick(rng, 1, n);
        int j = pick(rng, 1, n);
        if (i == j && pick(rng, 0, 9) != 0) j = 1 + (j % n); // diagonals rare, not absent
        VarId v = VarId::order(i, j);
        if (pick(rng, 0, 9) < 7)
            pos.push_back(v);
        else
            neg.push_back(v);
    }
    return Conjunct::make(std::move(pos), std::move(neg));
}

Outcome check4(std::uint64_t seed) {
    Rng rng(0x5eed0004 ^ seed);
    for (int round = 0; round < 500; ++round) {
        int n = pick(rng, 3, 6);
        Dnf w;
        int terms = pick(rng, 1, 4);
        for (int t = 0; t < terms; ++t) w.add(random_order_conjunct(rng, n, 3));

        NormalizedDnf nd = normalize_dnf(w, n);
        if (nd.support_size > 2 * w.degree() + 1)
            return {false, "support size " + std::to_string(nd.support_size) + " exceeds 2d+1"};

        bool orders_ok = true;
        for_each_order(n, [&](const TotalOrder& z) {
            if (w.eval(z.assignment()) != nd.accepts(z)) orders_ok = false;
        });
        if (!orders_ok) return {false, "normalization changed the accepted orders (round " +
                                           std::to_string(round) + ")"};

        PeEngine eng(n);
        if (enum_pe_dnf(w, n) != eng.of_normalized(nd))
            return {false, "normalization changed pe (round " + std::to_string(round) + ")"};

        int kt = std::min(pick(rng, 1, 3), n - nd.support_size + 1);
        if (kt >= 1) {
            CanonicalTerm t = random_term_with_1(rng, kt, n, true);
            NormalizedDnf merged = merge(nd, t, n);
            ConicalJunta jt;
            jt.add(t.conjunct(), Rat(1));
            Rat lhs = eng.of_product(nd.to_dnf(), jt);
            Rat rhs = eng.of_normalized(merged) + Rat(1) - eng.of_term(t);
            if (lhs != rhs)
                return {false, "merge identity pe[N*t] = pe[N'+1-t] failed (round " +
                                   std::to_string(round) + "): " + rat_to_string(lhs) + " vs " +
                                   rat_to_string(rhs)};
        }
    }
    return {true, "500 random DNFs, degree <= 3, n <= 6: orders, pe, support bound and merge identity exact"};
}

// ------------------------------------------------------------------- check 5

Outcome check5(std::uint64_t seed) {
    Rng rng(0x5eed0005 ^ seed);
    for (int round = 0; round < 500; ++round) {
        int n = pick(rng, 3, 6);
        AxiomFamily f = lop(n);
        std::vector<const Dnf*> pool;
        std::vector<std::string> labels;
        for (const auto& [label, d] : f.axioms)
            if (label[0] != 'M') {
                pool.push_back(&d);
                labels.push_back(label);
            }
        std::size_t at = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1));
        const Dnf& d = *pool[at];

        // Sigma_2 weakening: weaken every term by dropping literals, then
        // adjoin junk terms. Both steps preserve implication by d.
        Dnf w;
        for (const Conjunct& t : d.terms()) {
            std::vector<VarId> pos, neg;
            for (const VarId& v : t.positives())
                if (pick(rng, 0, 3) != 0) pos.push_back(v);
            for (const VarId& v : t.negatives())
                if (pick(rng, 0, 3) != 0) neg.push_back(v);
            w.add(Conjunct::make(std::move(pos), std::move(neg)));
        }
        int extra = pick(rng, 0, 3);
        for (int e = 0; e < extra; ++e) w.add(random_order_conjunct(rng, n, 3));

        ConicalJunta j;
        int entries = pick(rng, 1, 4);
        for (int e = 0; e < entries; ++e)
            j.add(random_order_conjunct(rng, n, 3), Rat(pick(rng, 1, 5), pick(rng, 1, 3)));

        PeEngine eng(n);
        Rat v = eng.of_product(w, j);
        if (v < 0)
            return {false, "pe[W*J] = " + rat_to_string(v) + " < 0 for a weakening of " +
                               labels[at] + " at n=" + std::to_string(n)};
    }
    return {true, "500 weakenings of irreflexivity/asymmetry/transitivity/totality axioms: pe[W*J] >= 0"};
}

// ------------------------------------------------------------------- check 6

Outcome check6(std::uint64_t seed) {
    Rng rng(0x5eed0006 ^ seed);
    for (int round = 0; round < 500; ++round) {
        int s = pick(rng, 3, 7);
        HitMatrix m;
        m.mode = HitMode::Pairs;
        for (int e = 2; e <= s + 1; ++e) m.index.push_back(e);
        m.entries.assign(static_cast<std::size_t>(s) * s, 0);
        int density = pick(rng, 2, 8);
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (a != b && pick(rng, 0, 9) < density)
                    m.entries[static_cast<std::size_t>(a) * s + b] = 1;
        if (Rat(count_hitting(m)) < hitting_floor(m))
            return {false, "pair floor violated at round " + std::to_string(round)};
    }
    for (int round = 0; round < 500; ++round) {
        int s = pick(rng, 3, 6);
        HitMatrix m;
        m.mode = HitMode::Triples;
        for (int e = 2; e <= s + 1; ++e) m.index.push_back(e);
        m.entries.assign(static_cast<std::size_t>(s) * s * s, 0);
        int density = pick(rng, 3, 9);
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                for (int c = b + 1; c < s; ++c) {
                    if (a == b || a == c) continue;
                    if (pick(rng, 0, 9) < density) {
                        m.entries[(static_cast<std::size_t>(a) * s + b) * s + c] = 1;
                        m.entries[(static_cast<std::size_t>(a) * s + c) * s + b] = 1;
                    }
                }
        if (Rat(count_hitting(m)) < hitting_floor(m))
            return {false, "triple floor violated at round " + std::to_string(round)};
    }
    return {true, "1000 random hit structures: pairs >= q - C(s,2), triples >= (q - 4 C(s,3))/2"};
}

// ------------------------------------------------------------------- check 7

Outcome check7(std::uint64_t) {
    for (int n = 1; n <= 16; ++n) {
        AxiomFamily f = least_number(n);
        SAProof p = least_number_refutation(n);
        SACheck c = check_sa_proof(f, p);
        if (!c.ok)
            return {false, "built-in refutation fails to verify at n=" + std::to_string(n)};
        if (c.metrics.degree > 1)
            return {false, "refutation degree " + std::to_string(c.metrics.degree) + " > 1 at n=" +
                               std::to_string(n)};
    }
    return {true, "built-in refutations sum to -1 with degree <= 1 for n=1..16"};
}

// ------------------------------------------------------------------- check 8

AxiomFamily random_unsat_family(Rng& rng, int bits, bool xor_core) {
    AxiomFamily f;
    f.name = "toy";
    f.universe = VarUniverse::plains(bits);
    if (xor_core && bits >= 2) {
        int a = pick(rng, 1, bits);
        int b = a;
        while (b == a) b = pick(rng, 1, bits);
        VarId va = VarId::plain(a), vb = VarId::plain(b);
        Dnf eq, ne;
        eq.add(Conjunct::make({va, vb}));
        eq.add(Conjunct::make({}, {va, vb}));
        ne.add(Conjunct::make({va}, {vb}));
        ne.add(Conjunct::make({vb}, {va}));
        f.axioms.emplace_back("E", eq);
        f.axioms.emplace_back("N", ne);
    } else {
        int v = pick(rng, 1, bits);
        Dnf dp, dn;
        dp.add(Conjunct::make({VarId::plain(v)}));
        dn.add(Conjunct::make({}, {VarId::plain(v)}));
        f.axioms.emplace_back("P", dp);
        f.axioms.emplace_back("N", dn);
    }
    int extra = pick(rng, 0, 2);
    for (int e = 0; e < extra; ++e) {
        Dnf d;
        int terms = pick(rng, 1, 3);
        for (int t = 0; t < terms; ++t) {
            std::vector<VarId> pos, neg;
            int deg = pick(rng, 0, 2);
            for (int l = 0; l < deg; ++l) {
                VarId v = VarId::plain(pick(rng, 1, bits));
                (pick(rng, 0, 1) ? pos : neg).push_back(v);
            }
            d.add(Conjunct::make(std::move(pos), std::move(neg)));
        }
        f.axioms.emplace_back("D" + std::to_string(e + 1), d);
    }
    f.validate();
    return f;
}

DecisionTree random_tree(Rng& rng, int bits, int depth, int labels) {
    if (depth == 0 || pick(rng, 0, 3) == 0) return DecisionTree::leaf(pick(rng, 0, labels - 1));
    VarId v = VarId::plain(pick(rng, 1, bits));
    DecisionTree lo = random_tree(rng, bits, depth - 1, labels);
    DecisionTree hi = random_tree(rng, bits, depth - 1, labels);
    // A tree may not query one variable twice on a path; regenerating the
    // clashing side keeps the distribution simple.
    for (int guard = 0; guard < 32; ++guard) {
        bool clash = false;
        for (const VarId& u : lo.vars())
            if (u == v) clash = true;
        for (const VarId& u : hi.vars())
            if (u == v) clash = true;
        if (!clash) break;
        lo = random_tree(rng, bits, depth - 1, labels);
        hi = random_tree(rng, bits, depth - 1, labels);
    }
    return DecisionTree::query(v, lo, hi);
}

SAProof refutation_of(const AxiomFamily& f) {
    for (int d = 1; d <= 3; ++d) {
        DegreeOracleResult r = lp_degree_oracle(f, d);
        if (r.feasible) return *r.refutation;
    }
    throw Error("internal: no low-degree refutation for a toy family");
}

Outcome check8(std::uint64_t seed) {
    Rng rng(0x5eed0008 ^ seed);
    for (int round = 0; round < 100; ++round) {
        int r_bits = pick(rng, 2, 3);
        AxiomFamily f = random_unsat_family(rng, r_bits, pick(rng, 0, 1) == 1);
        SearchProblem r = ff_problem(f);
        SAProof rproof = refutation_of(f);
        int dprime = sa_metrics(f, rproof).degree;

        int q_bits = pick(rng, 2, 4);
        int y_count = pick(rng, 2, 3);
        SearchProblem dummy;
        dummy.input_bits = q_bits;
        dummy.witnesses = 1;
        for (int y = 0; y < y_count; ++y) {
            dummy.outputs.push_back("q" + std::to_string(y));
            dummy.relation.push_back({DecisionTree::leaf(1)});
        }

        Formulation raw;
        for (int b = 0; b < r.input_bits; ++b) raw.f.push_back(random_tree(rng, q_bits, 2, 2));
        for (std::size_t b = 0; b < r.outputs.size(); ++b)
            raw.g.push_back(random_tree(rng, q_bits, 2, y_count));

        ReducedProblem mid = reduced_problem(dummy, r, raw);
        SearchProblem q = mid.problem;

        std::map<std::pair<int, int>, int> idx;
        for (std::size_t i = 0; i < mid.output_pairs.size(); ++i)
            idx[mid.output_pairs[i]] = static_cast<int>(i);
        Formulation phi;
        phi.f = raw.f;
        for (std::size_t b = 0; b < r.outputs.size(); ++b) {
            int bi = static_cast<int>(b);
            phi.g.push_back(tree_graft(
                raw.g[b], [&idx, bi](int y) { return DecisionTree::leaf(idx.at({y, bi})); }));
        }

        FormulationCheck fc = check_formulation(q, r, phi);
        if (!fc.ok)
            return {false, "constructed formulation invalid at round " + std::to_string(round) +
                               (fc.failure ? ": " + fc.failure->str() : "")};

        Factorization fac = factorize(q, r, phi);
        if (!fac.weakening_ok)
            return {false, "weakening step rejected at round " + std::to_string(round) +
                               (fac.weakening_witness ? ": " + fac.weakening_witness->str() : "")};
        if (!fac.ce_ok)
            return {false, "counter-example step rejected at round " + std::to_string(round) +
                               (fac.ce_failure ? ": " + fac.ce_failure->str() : "")};

        TransformResult tr = transform_sa_proof(rproof, r, fac.mid, phi);
        if (!tr.check.ok)
            return {false, "transformed refutation fails to verify at round " +
                               std::to_string(round)};
        int bound = phi.depth() * (dprime + 2);
        if (tr.check.metrics.degree > bound)
            return {false, "transformed degree " + std::to_string(tr.check.metrics.degree) +
                               " exceeds d(d'+2) = " + std::to_string(bound)};
        if (!tr.degree_ok) return {false, "degree bound flag false at round " + std::to_string(round)};
    }
    return {true, "100 random valid formulations factor and transform; degree <= d(d'+2) throughout"};
}

// ------------------------------------------------------------------- check 9

Outcome check9(std::uint64_t seed) {
    std::ostringstream note;
    // Random small unsatisfiable families: the oracle must land on exactly
    // one verified side every time.
    Rng rng(0x5eed0009 ^ seed);
    for (int round = 0; round < 20; ++round) {
        AxiomFamily f = random_unsat_family(rng, pick(rng, 2, 4), pick(rng, 0, 1) == 1);
        for (int d = 1; d <= 2; ++d) {
            DegreeOracleResult r = lp_degree_oracle(f, d);
            if (r.feasible) {
                if (!r.refutation || !check_sa_proof(f, *r.refutation).ok)
                    return {false, "feasible without a verifying refutation (round " +
                                       std::to_string(round) + ")"};
                if (!r.dual.empty())
                    return {false, "oracle returned both sides (round " + std::to_string(round) + ")"};
            } else {
                if (r.refutation)
                    return {false, "oracle returned both sides (round " + std::to_string(round) + ")"};
                if (!validate_dual(f, d, r.dual))
                    return {false, "dual fails Conditions 1-3 (round " + std::to_string(round) + ")"};
            }
        }
    }
    // Exactly-one semantics on the linear-ordering families and the uniform
    // pseudo-expectation as the dual whenever the LP is infeasible.
    for (int n = 3; n <= 4; ++n) {
        AxiomFamily f = lop(n);
        for (int d = 1; d <= 2; ++d) {
            DegreeOracleResult r = lp_degree_oracle(f, d);
            if (r.feasible) {
                SACheck c = check_sa_proof(f, *r.refutation);
                if (!c.ok || c.metrics.degree > d)
                    return {false, "returned refutation fails for lop(" + std::to_string(n) +
                                       ") at degree " + std::to_string(d)};
            } else {
                if (!validate_dual(f, d, r.dual))
                    return {false, "returned dual violates Conditions 1-3 for lop(" +
                                       std::to_string(n) + ") at degree " + std::to_string(d)};
                ConditionsReport cr = check_conditions(f, d, n);
                if (!cr.ok) {
                    std::ostringstream out;
                    out << "lop(" << n << ") is infeasible at degree " << d
                        << " but the uniform-order dual fails";
                    if (cr.violation) {
                        out << ": Condition " << cr.violation->condition;
                        if (!cr.violation->axiom.empty()) out << ", axiom " << cr.violation->axiom;
                        out << ", junta " << cr.violation->junta.str() << ", value "
                            << rat_to_string(cr.violation->value);
                    }
                    return {false, out.str()};
                }
                note << " lop(" << n << ")/d=" << d << " infeasible, uniform dual ok;";
            }
        }
    }
    return {true, "oracle lands on exactly one verified side everywhere;" + note.str()};
}

// ------------------------------------------------------------------ check 10

// Exhaustive scan: does any set of fewer than `bound` chain terms from the
// 1-containing support-3 pool cover every order avoiding first place for 1?
// Masks make the scan independent of the branch-and-bound code path.
bool smaller_weakening_exists(int n, int bound) {
    std::vector<TotalOrder> universe = orders_where(n, [](const TotalOrder& z) {
        return z.first() != 1;
    });
    std::vector<std::vector<std::uint64_t>> masks;
    std::size_t words = (universe.size() + 63) / 64;
    std::vector<int> rest;
    for (int e = 2; e <= n; ++e) rest.push_back(e);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
            std::vector<int> sup = {1, rest[a], rest[b]};
            for (const std::vector<int>& ord : orderings_of(sup)) {
                Conjunct chain = CanonicalTerm::of(ord).conjunct();
                std::vector<std::uint64_t> mask(words, 0);
                for (std::size_t u = 0; u < universe.size(); ++u)
                    if (satisfies(universe[u], chain)) mask[u / 64] |= std::uint64_t{1} << (u % 64);
                masks.push_back(std::move(mask));
            }
        }
    std::vector<std::uint64_t> target(words, 0);
    for (std::size_t u = 0; u < universe.size(); ++u) target[u / 64] |= std::uint64_t{1} << (u % 64);

    std::vector<std::vector<std::uint64_t>> stack(static_cast<std::size_t>(bound),
                                                  std::vector<std::uint64_t>(words, 0));
    // Depth-first over index-increasing subsets of size < bound.
    std::function<bool(std::size_t, int, const std::vector<std::uint64_t>&)> walk =
        [&](std::size_t from, int depth, const std::vector<std::uint64_t>& acc) -> bool {
        if (acc == target) return true;
        if (depth == bound - 1) return false;
        for (std::size_t i = from; i < masks.size(); ++i) {
            std::vector<std::uint64_t>& next = stack[static_cast<std::size_t>(depth)];
            bool grew = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = acc[w] | masks[i][w];
                if (next[w] != acc[w]) grew = true;
            }
            if (!grew) continue;
            if (walk(i + 1, depth + 1, next)) return true;
        }
        return false;
    };
    std::vector<std::uint64_t> empty(words, 0);
    return universe.empty() ? false : walk(0, 0, empty);
}

Outcome check10(std::uint64_t) {
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d <= n; ++d) {
            CoverResult r = min_cover({n, d, CoverUniverse::Ord, std::nullopt, false});
            if (!r.exact || Int(r.size) != factorial(d))
                return {false, "full-universe cover at n=" + std::to_string(n) +
                                   ", d=" + std::to_string(d) + " is " + std::to_string(r.size) +
                                   ", want d!"};
        }
    for (int n = 3; n <= 7; ++n) {
        CoverResult r = min_cover({n, 2, CoverUniverse::OrdStar1, std::nullopt, false});
        if (!r.exact || r.size < 2)
            return {false, "degree-2 cover of the restricted universe dips below 2 at n=" +
                               std::to_string(n)};
    }

    std::ostringstream note;
    for (int n = 5; n <= 6; ++n) {
        CoverResult any = min_cover({n, 3, CoverUniverse::OrdStar1, std::nullopt, false});
        CoverResult one = min_cover({n, 3, CoverUniverse::OrdStar1, std::nullopt, true});
        if (!any.exact || !one.exact || any.size != one.size)
            return {false, "restricted-universe d=3 covers disagree at n=" + std::to_string(n)};

        // Cover -> weakening: the minimum cover really is a weakening with
        // exactly that many terms and nonnegative pe.
        std::vector<CanonicalTerm> terms;
        for (const CoverSet& cs : one.cover) terms.push_back(CanonicalTerm::of(cs.ordering));
        NormalizedDnf nd = NormalizedDnf::make(3, terms);
        M1Report rep = verify_m1_nonneg(nd, CanonicalTerm::of({1}), n);
        if (!rep.is_weakening)
            return {false, "minimum cover fails the weakening check at n=" + std::to_string(n)};
        Rat expected(Int(one.size) - factorial(3), factorial(3));
        expected.canonicalize();
        if (rep.pe_value != expected || rep.merged_pe != expected)
            return {false, "cover-derived weakening has unexpected pe at n=" + std::to_string(n)};

        // Weakening -> cover: no smaller term set covers, by direct scan.
        if (smaller_weakening_exists(n, one.size))
            return {false, "scan found a weakening smaller than the cover minimum at n=" +
                               std::to_string(n)};
        note << " n=" << n << " d=3 min=" << one.size << ";";
    }
    return {true, "cover minimums match d!, stay >= 2 at degree 2 through n=7, and the d=3 scans agree:" +
                      note.str()};
}

using Check = Outcome (*)(std::uint64_t);

constexpr Check kChecks[] = {check1, check2, check3, check4, check5,
                             check6, check7, check8, check9, check10};

} // namespace

int gate_count() { return static_cast<int>(std::size(kChecks)); }

GateResult run_gate_check(int id, std::uint64_t seed_base) {
    if (id < 1 || id > gate_count()) throw InvalidInputError("no such gate check: " + std::to_string(id));
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = kChecks[id - 1](seed_base);
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {id, out.pass, out.detail, secs};
}

std::vector<GateResult> run_gate(int only, std::uint64_t seed_base) {
    std::vector<GateResult> results;
    for (int id = 1; id <= gate_count(); ++id) {
        if (only != 0 && id != only) continue;
        results.push_back(run_gate_check(id, seed_base));
    }
    return results;
}

} // namespace lopsa
