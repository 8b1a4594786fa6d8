#include "lopsa/pe.hpp"

#include "lopsa/config.hpp"

#include <algorithm>

namespace lopsa {

namespace {

constexpr int kMaxMonomialElements = 20; // 20! still fits in 63 bits

} // namespace

PeEngine::PeEngine(int n) : n_(n) {
    if (n < 1) throw InvalidInputError("pe engine needs n >= 1");
}

Rat PeEngine::of_monomial(const Monomial& m) {
    if (m.empty()) return 1;
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;

    std::vector<int> elems;
    for (const VarId& v : m) {
        if (!v.is_order())
            throw InvalidInputError("pe is defined over order variables only, got " + v.str());
        if (v.i > n_ || v.j > n_)
            throw InvalidInputError("variable " + v.str() + " outside the order universe [" +
                                    std::to_string(n_) + "]");
        if (v.is_diagonal()) {
            cache_.emplace(m, 0);
            return 0;
        }
        elems.push_back(v.i);
        elems.push_back(v.j);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    int sz = static_cast<int>(elems.size());
    if (sz > kMaxMonomialElements)
        throw EnumerationBoundError("monomial mentions " + std::to_string(sz) +
                                    " elements; linear extension count capped at " +
                                    std::to_string(kMaxMonomialElements));

    // pred[b] = elements constrained to appear before b.
    std::vector<unsigned> pred(sz, 0);
    auto pos_of = [&elems](int e) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), e) - elems.begin());
    };
    for (const VarId& v : m) pred[pos_of(v.j)] |= 1u << pos_of(v.i);

    // f[U] = orderings of the element set U forming a valid prefix: each
    // element may close the prefix once all its predecessors are inside.
    std::vector<unsigned long long> f(std::size_t{1} << sz, 0);
    f[0] = 1;
    for (unsigned u = 1; u < (1u << sz); ++u) {
        unsigned long long acc = 0;
        for (int v = 0; v < sz; ++v) {
            unsigned bit = 1u << v;
            if (!(u & bit)) continue;
            if ((pred[v] & (u & ~bit)) != pred[v]) continue;
            acc += f[u & ~bit];
        }
        f[u] = acc;
    }
    Rat r(Int(static_cast<unsigned long>(f[(1u << sz) - 1])), factorial(sz));
    r.canonicalize();
    cache_.emplace(m, r);
    return r;
}

Rat PeEngine::of_poly(const Polynomial& p) {
    Rat acc = 0;
    for (const auto& [mono, coeff] : p.terms()) acc += coeff * of_monomial(mono);
    return acc;
}

Rat PeEngine::of_conjunct(const Conjunct& t) { return of_poly(conjunct_to_poly(t)); }

Rat PeEngine::of_dnf(const Dnf& d) {
    Rat acc = -1;
    for (const Conjunct& t : d.terms()) acc += of_conjunct(t);
    return acc;
}

Rat PeEngine::of_junta(const ConicalJunta& j) {
    Rat acc = 0;
    for (const auto& [t, mult] : j.entries()) acc += mult * of_conjunct(t);
    return acc;
}

Rat PeEngine::of_term(const CanonicalTerm& t) {
    for (int e : t.order)
        if (e > n_)
            throw InvalidInputError("term " + t.str() + " mentions element above n");
    Rat r(1, factorial(t.k()));
    r.canonicalize();
    return r;
}

Rat PeEngine::of_normalized(const NormalizedDnf& nd) {
    Rat r(Int(nd.terms.size()), factorial(nd.support_size));
    r.canonicalize();
    return r - 1;
}

Rat PeEngine::of_product(const Dnf& d, const ConicalJunta& j) {
    return of_poly(poly_mul(dnf_to_poly(d), j.to_poly()));
}

PeReport pe_report(const Dnf& d, int n) {
    PeEngine eng(n);
    PeReport rep;
    rep.universe = factorial(n);
    rep.value = eng.of_dnf(d);
    int idx = 0;
    for (const Conjunct& t : d.terms())
        rep.breakdown.emplace_back("t" + std::to_string(idx++) + " " + t.str(),
                                   eng.of_conjunct(t) * rep.universe);
    rep.breakdown.emplace_back("-1", -Rat(rep.universe));
    return rep;
}

PeReport pe_report(const Polynomial& p, int n) {
    PeEngine eng(n);
    PeReport rep;
    rep.universe = factorial(n);
    rep.value = eng.of_poly(p);
    for (const auto& [mono, coeff] : p.terms())
        rep.breakdown.emplace_back(rat_to_string(coeff) + " * " + monomial_str(mono),
                                   coeff * eng.of_monomial(mono) * rep.universe);
    return rep;
}

PeReport pe_report(const Dnf& d, const ConicalJunta& j, int n) {
    PeEngine eng(n);
    PeReport rep;
    rep.universe = factorial(n);
    rep.value = eng.of_product(d, j);
    for (const auto& [t, mult] : j.entries()) {
        Rat part = eng.of_product(d, ConicalJunta::of(t, mult));
        rep.breakdown.emplace_back("D * " + rat_to_string(mult) + "*" + t.str(),
                                   part * rep.universe);
    }
    return rep;
}

namespace {

// Upper bound on deg(D * u) as a polynomial: every product term t & u plus
// the -u part.
int product_degree(const Dnf& d, const Conjunct& u) {
    int deg = u.degree();
    for (const Conjunct& t : d.terms()) {
        Conjunct c = Conjunct::conjoin(t, u);
        if (!c.is_zero()) deg = std::max(deg, c.degree());
    }
    return deg;
}

// All negation-free conjuncts of degree <= d over the n*n order variables,
// in increasing size then lexicographic order.
std::vector<Conjunct> conjunct_pool(int n, int d, long cap) {
    std::vector<VarId> universe;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) universe.push_back(VarId::order(i, j));
    int v = static_cast<int>(universe.size());

    Int total = 0;
    for (int s = 0; s <= d && s <= v; ++s) total += binomial(v, s);
    if (total > cap)
        throw EnumerationBoundError("conjunct pool of " + total.get_str() +
                                    " exceeds the cap " + std::to_string(cap));

    std::vector<Conjunct> pool;
    pool.push_back(Conjunct::unit());
    for (int s = 1; s <= d && s <= v; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<VarId> vars;
            vars.reserve(s);
            for (int i : idx) vars.push_back(universe[i]);
            pool.push_back(Conjunct::positive(std::move(vars)));
            int p = s - 1;
            while (p >= 0 && idx[p] == v - s + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < s; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    return pool;
}

} // namespace

ConditionsReport check_conditions(const AxiomFamily& f, int d, int n, long conjunct_cap) {
    if (f.universe.order_n != n)
        throw InvalidInputError("axiom family is over n=" + std::to_string(f.universe.order_n) +
                                ", got n=" + std::to_string(n));
    ConditionsReport rep;
    rep.degree = d;
    PeEngine eng(n);

    if (eng.of_conjunct(Conjunct::unit()) != 1) {
        rep.violation = ConditionViolation{1, "", Conjunct::unit(),
                                           eng.of_conjunct(Conjunct::unit())};
        return rep;
    }

    std::vector<Conjunct> pool = conjunct_pool(n, d, conjunct_cap);
    rep.conjuncts = static_cast<long>(pool.size());

    for (const Conjunct& u : pool) {
        Rat v = eng.of_conjunct(u);
        if (v < 0) {
            rep.violation = ConditionViolation{2, "", u, v};
            return rep;
        }
    }

    for (const auto& [label, dnf] : f.axioms) {
        for (const Conjunct& u : pool) {
            if (product_degree(dnf, u) > d) continue;
            ++rep.products_checked;
            Rat v = eng.of_product(dnf, ConicalJunta::of(u, 1));
            if (v < 0) {
                rep.violation = ConditionViolation{3, label, u, v};
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

KfactReport kfact_criterion(const NormalizedDnf& nd, int n) {
    KfactReport rep;
    rep.term_count = Int(nd.terms.size());
    rep.k_factorial = factorial(nd.support_size);
    Rat v(rep.term_count, rep.k_factorial);
    v.canonicalize();
    rep.pe_value = v - 1;
    rep.nonneg = rep.pe_value >= 0;
    if (!rep.nonneg) {
        require_enumerable(n);
        std::vector<int> seq(n);
        for (int i = 0; i < n; ++i) seq[i] = i + 1;
        do {
            if (seq.front() == 1) continue;
            TotalOrder z{seq};
            if (!nd.accepts(z)) {
                rep.rejected_not_starting_1 = z;
                break;
            }
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
    return rep;
}

OvercountReport overcount_identity(const NormalizedDnf& nd, int n,
                                   const std::optional<CanonicalTerm>& restriction) {
    require_enumerable(n);
    PeEngine eng(n);
    OvercountReport rep;
    rep.rejected = 0;
    rep.universe = 0;

    Conjunct guard = Conjunct::unit();
    if (restriction) {
        if (restriction->order.front() != 1)
            throw InvalidInputError("restriction term must put 1 first");
        guard = restriction->conjunct();
        rep.pe_value = eng.of_normalized(nd) + 1 - eng.of_term(*restriction);
    } else {
        rep.pe_value = eng.of_normalized(nd);
    }

    for_each_order(n, [&](const TotalOrder& z) {
        long mult = nd.accepting_terms(z);
        if (restriction && !satisfies(z, guard)) {
            if (mult != 0)
                throw InvalidInputError(
                    "a term of N accepts " + z.str() +
                    ", which is inconsistent with the restriction " + restriction->str());
            return;
        }
        rep.universe += 1;
        if (mult == 0)
            rep.rejected += 1;
        else
            rep.accepted_by_exactly[mult] += 1;
    });

    rep.overcount = -rep.rejected;
    for (const auto& [i, count] : rep.accepted_by_exactly)
        if (i >= 2) rep.overcount += Int(i - 1) * count;
    rep.identity_holds = (rep.pe_value * factorial(n) == rep.overcount);
    return rep;
}

bool HitMatrix::at(int i, int j) const {
    auto pos = [this](int e) {
        auto it = std::lower_bound(index.begin(), index.end(), e);
        if (it == index.end() || *it != e)
            throw InvalidInputError("element " + std::to_string(e) + " not in the hit index");
        return static_cast<int>(it - index.begin());
    };
    int s = side();
    return entries[static_cast<std::size_t>(pos(i)) * s + pos(j)] != 0;
}

bool HitMatrix::at(int i, int j, int k) const {
    auto pos = [this](int e) {
        auto it = std::lower_bound(index.begin(), index.end(), e);
        if (it == index.end() || *it != e)
            throw InvalidInputError("element " + std::to_string(e) + " not in the hit index");
        return static_cast<std::size_t>(it - index.begin());
    };
    std::size_t s = static_cast<std::size_t>(side());
    return entries[(pos(i) * s + pos(j)) * s + pos(k)] != 0;
}

Int count_ones(const HitMatrix& m) {
    Int q = 0;
    for (char e : m.entries)
        if (e) q += 1;
    return q;
}

Int count_hitting(const HitMatrix& m) {
    int s = m.side();
    Int hits = 0;
    if (m.mode == HitMode::Pairs) {
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                if (m.entries[static_cast<std::size_t>(a) * s + b] &&
                    m.entries[static_cast<std::size_t>(b) * s + a])
                    hits += 1;
    } else {
        auto e = [&](int x, int y, int w) {
            return m.entries[(static_cast<std::size_t>(x) * s + y) * s + w];
        };
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b)
                for (int c = b + 1; c < s; ++c)
                    if (e(a, b, c) && e(a, c, b) && e(b, a, c) && e(b, c, a) && e(c, a, b) &&
                        e(c, b, a))
                        hits += 1;
    }
    return hits;
}

Rat hitting_floor(const HitMatrix& m) {
    int s = m.side();
    Int q = count_ones(m);
    if (m.mode == HitMode::Pairs) {
        Int fl = q - binomial(s, 2);
        return Rat(fl);
    }
    Int fl = q - 4 * binomial(s, 3);
    Rat fb(fl, Int(2));
    fb.canonicalize();
    return fb;
}

HitReport hit_structures(const NormalizedDnf& nd,
                         const std::optional<CanonicalTerm>& tstar,
                         const std::vector<int>& z, HitMode mode, int n) {
    if (static_cast<int>(z.size()) != n - 1)
        throw InvalidInputError("z must order the n-1 elements other than 1");
    {
        std::vector<int> check = z;
        check.push_back(1);
        std::sort(check.begin(), check.end());
        for (int i = 0; i < n; ++i)
            if (check[static_cast<std::size_t>(i)] != i + 1)
                throw InvalidInputError("z must order [n] minus {1}");
    }
    TotalOrder full = prepend({1}, z);

    std::vector<int> excluded{1};
    if (mode == HitMode::Triples) {
        if (!tstar) throw InvalidInputError("triples mode needs the witness term");
        if (tstar->order.front() != 1)
            throw InvalidInputError("witness term must put 1 first");
        if (!satisfies(full, tstar->conjunct()))
            throw InvalidInputError("1z is not consistent with the witness term");
        excluded = tstar->support();
    } else if (tstar && tstar->k() > 1) {
        throw InvalidInputError("pairs mode takes no witness term (or only the trivial stub)");
    }
    if (nd.accepts(full))
        throw InvalidInputError("1z is accepted by N; hitting structures count rejected orders");

    HitReport rep;
    rep.matrix.mode = mode;
    for (int e = 1; e <= n; ++e)
        if (!std::binary_search(excluded.begin(), excluded.end(), e))
            rep.matrix.index.push_back(e);
    int s = rep.matrix.side();

    // Supports of the z-good terms per first element i: term chains starting
    // (i, 1, ...) whose support reads off i1(z minus i) in the chain's order.
    std::map<int, std::vector<std::vector<int>>> good;
    for (int i : rep.matrix.index) {
        TotalOrder shifted = prepend({i, 1}, drop_element(z, i));
        for (const CanonicalTerm& t : nd.terms) {
            if (t.k() < 2 || t.order[0] != i || t.order[1] != 1) continue;
            if (restrict_to(shifted, t.support()) == t.order) good[i].push_back(t.support());
        }
    }

    auto omits = [](const std::vector<int>& sup, int e) {
        return !std::binary_search(sup.begin(), sup.end(), e);
    };

    if (mode == HitMode::Pairs) {
        rep.matrix.entries.assign(static_cast<std::size_t>(s) * s, 0);
        for (int a = 0; a < s; ++a) {
            int i = rep.matrix.index[a];
            for (int b = 0; b < s; ++b) {
                if (a == b) continue;
                int j = rep.matrix.index[b];
                for (const auto& sup : good[i])
                    if (omits(sup, j)) {
                        rep.matrix.entries[static_cast<std::size_t>(a) * s + b] = 1;
                        break;
                    }
            }
        }
    } else {
        rep.matrix.entries.assign(static_cast<std::size_t>(s) * s * s, 0);
        for (int a = 0; a < s; ++a) {
            int i = rep.matrix.index[a];
            for (int b = 0; b < s; ++b) {
                if (b == a) continue;
                int j = rep.matrix.index[b];
                for (int c = 0; c < s; ++c) {
                    if (c == a || c == b) continue;
                    int k = rep.matrix.index[c];
                    for (const auto& sup : good[i])
                        if (omits(sup, j) && omits(sup, k)) {
                            rep.matrix.entries[(static_cast<std::size_t>(a) * s + b) * s + c] = 1;
                            break;
                        }
                }
            }
        }
    }
    rep.ones = count_ones(rep.matrix);
    rep.hits = count_hitting(rep.matrix);
    rep.floor_bound = hitting_floor(rep.matrix);
    rep.floor_ok = Rat(rep.hits) >= rep.floor_bound;
    return rep;
}

M1Report verify_m1_nonneg(const NormalizedDnf& nd, const CanonicalTerm& tstar, int n) {
    require_enumerable(n);
    if (tstar.order.front() != 1)
        throw InvalidInputError("witness term must put 1 first");
    PeEngine eng(n);
    M1Report rep;
    rep.pe_value = eng.of_product(nd.to_dnf(), ConicalJunta::of(tstar.conjunct(), 1));
    rep.nonneg = rep.pe_value >= 0;

    Conjunct guard = tstar.conjunct();
    rep.is_weakening = true;
    for_each_order(n, [&](const TotalOrder& zo) {
        if (!rep.is_weakening) return;
        if (zo.first() == 1 || !satisfies(zo, guard)) return;
        if (!nd.accepts(zo)) {
            rep.is_weakening = false;
            rep.violating_order = zo;
        }
    });
    if (!rep.is_weakening) return rep;

    rep.merged = merge(nd, tstar, n);
    rep.merged_pe = eng.of_normalized(rep.merged) + 1 - eng.of_term(tstar);
    if (rep.merged_pe != rep.pe_value)
        throw Error("merge identity violated: pe[N*t] = " + rat_to_string(rep.pe_value) +
                    " but pe[N'+1-t] = " + rat_to_string(rep.merged_pe));
    rep.certificate = overcount_identity(rep.merged, n, tstar);
    return rep;
}

} // namespace lopsa
