#include "lopsa/normalization.hpp"

#include "lopsa/config.hpp"
#include "lopsa/pe.hpp"

#include <algorithm>

namespace lopsa {

NormalizedDnf NormalizedDnf::make(int support_size, std::vector<CanonicalTerm> terms) {
    if (support_size < 1) throw InvalidInputError("support size must be >= 1");
    for (const CanonicalTerm& t : terms) {
        if (t.k() != support_size)
            throw InvalidInputError("term " + t.str() + " has support size " +
                                    std::to_string(t.k()) + ", expected " +
                                    std::to_string(support_size));
        if (!t.contains(1))
            throw InvalidInputError("normalized term " + t.str() + " must contain element 1");
    }
    std::sort(terms.begin(), terms.end());
    return NormalizedDnf{support_size, std::move(terms)};
}

Dnf NormalizedDnf::to_dnf() const {
    Dnf d;
    for (const CanonicalTerm& t : terms) d.add(t.conjunct());
    return d;
}

bool NormalizedDnf::accepts(const TotalOrder& z) const {
    return std::any_of(terms.begin(), terms.end(),
                       [&z](const CanonicalTerm& t) { return satisfies(z, t.conjunct()); });
}

long NormalizedDnf::accepting_terms(const TotalOrder& z) const {
    long c = 0;
    for (const CanonicalTerm& t : terms)
        if (satisfies(z, t.conjunct())) ++c;
    return c;
}

Conjunct eliminate_negations(const Conjunct& t) {
    if (t.is_zero()) return t;
    std::vector<VarId> pos;
    for (const VarId& v : t.positives()) {
        if (!v.is_order())
            throw InvalidInputError("negation elimination is defined over order variables");
        if (v.is_diagonal()) return Conjunct::zero(); // no order puts i before i
        pos.push_back(v);
    }
    for (const VarId& v : t.negatives()) {
        if (!v.is_order())
            throw InvalidInputError("negation elimination is defined over order variables");
        if (v.is_diagonal()) continue; // !x(i,i) holds on every order
        pos.push_back(VarId::order(v.j, v.i));
    }
    return Conjunct::make(std::move(pos));
}

namespace {

std::vector<int> padded_support(std::vector<int> base, int k, int n) {
    std::sort(base.begin(), base.end());
    if (!base.empty() && base.back() > n)
        throw InvalidInputError("support element exceeds n");
    if (static_cast<int>(base.size()) > k)
        throw InvalidInputError("support larger than requested size k=" + std::to_string(k));
    if (k > n)
        throw InvalidInputError("cannot pad support to k=" + std::to_string(k) +
                                " inside [n], n=" + std::to_string(n));
    for (int e = 1; e <= n && static_cast<int>(base.size()) < k; ++e)
        if (!std::binary_search(base.begin(), base.end(), e)) {
            base.insert(std::upper_bound(base.begin(), base.end(), e), e);
        }
    return base;
}

} // namespace

std::vector<CanonicalTerm> normalize_term(const Conjunct& t, int k, int n) {
    if (!t.negation_free())
        throw InvalidInputError("normalize_term expects a negation-free conjunct");
    if (t.is_zero()) return {};
    std::vector<int> support = t.elements();
    support.push_back(1);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<int> s = padded_support(std::move(support), k, n);

    std::vector<CanonicalTerm> out;
    for (const std::vector<int>& ord : orderings_of(s))
        if (seq_satisfies(ord, t)) out.push_back(CanonicalTerm::of(ord));
    return out;
}

NormalizedDnf normalize_dnf(const Dnf& w, int n, const NormalizeOptions& opts) {
    int d = w.degree();
    int cap = 2 * d + 1;

    std::vector<Conjunct> eliminated;
    int needed = 1;
    for (const Conjunct& t : w.terms()) {
        Conjunct e = eliminate_negations(t);
        if (e.is_zero()) continue;
        std::vector<int> sup = e.elements();
        sup.push_back(1);
        std::sort(sup.begin(), sup.end());
        sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
        needed = std::max(needed, static_cast<int>(sup.size()));
        eliminated.push_back(std::move(e));
    }

    int k = needed;
    if (opts.full_padding) k = cap;
    if (opts.support_size) k = *opts.support_size;
    if (k < needed)
        throw InvalidInputError("requested support size " + std::to_string(k) +
                                " below required " + std::to_string(needed));
    if (k > cap)
        throw InvalidInputError("support size " + std::to_string(k) +
                                " exceeds 2*degree+1 = " + std::to_string(cap));
    if (k > n)
        throw InvalidInputError("cannot normalize: support size " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));

    std::vector<CanonicalTerm> terms;
    for (const Conjunct& e : eliminated) {
        std::vector<CanonicalTerm> expansion = normalize_term(e, k, n);
        terms.insert(terms.end(), expansion.begin(), expansion.end());
    }
    return NormalizedDnf::make(k, std::move(terms));
}

std::optional<CanonicalTerm> extract_witness_term(const Dnf& w, const ConicalJunta& j, int n) {
    PeEngine pe(n);
    if (pe.of_product(w, j) >= 0) return std::nullopt;

    for (const auto& [u, mult] : j.entries()) {
        if (pe.of_product(w, ConicalJunta::of(u, 1)) >= 0) continue;
        Conjunct e = eliminate_negations(u);
        if (e.is_zero()) continue;
        std::vector<int> support = e.elements();
        support.push_back(1);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());

        for (const std::vector<int>& ord : orderings_of(support)) {
            if (ord.front() != 1) continue; // nonnegative against weakenings of M_1
            if (!seq_satisfies(ord, e)) continue;
            CanonicalTerm cand = CanonicalTerm::of(ord);
            if (pe.of_product(w, ConicalJunta::of(cand.conjunct(), 1)) < 0) return cand;
        }
    }
    throw Error("pe[W*J] < 0 but no canonical witness with 1 first was found; "
                "W is not a weakening of the order-minimality axiom");
}

NormalizedDnf merge(const NormalizedDnf& n_dnf, const CanonicalTerm& t, int n) {
    if (t.order.front() != 1)
        throw InvalidInputError("merge expects a canonical term putting 1 first");
    for (int e : t.order)
        if (e > n) throw InvalidInputError("merge term mentions element above n");

    Conjunct t_chain = t.conjunct();
    std::vector<int> t_sup = t.support();

    int k_target = n_dnf.support_size;
    std::vector<std::vector<int>> unions;
    unions.reserve(n_dnf.terms.size());
    for (const CanonicalTerm& s : n_dnf.terms) {
        std::vector<int> u = s.support();
        for (int e : t_sup)
            if (!std::binary_search(u.begin(), u.end(), e))
                u.insert(std::upper_bound(u.begin(), u.end(), e), e);
        if (static_cast<int>(u.size()) > n)
            throw InvalidInputError("merged support exceeds n");
        k_target = std::max(k_target, static_cast<int>(u.size()));
        unions.push_back(std::move(u));
    }

    std::vector<CanonicalTerm> merged;
    for (std::size_t idx = 0; idx < n_dnf.terms.size(); ++idx) {
        Conjunct s_chain = n_dnf.terms[idx].conjunct();
        for (const std::vector<int>& ord : orderings_of(unions[idx])) {
            if (!seq_satisfies(ord, s_chain) || !seq_satisfies(ord, t_chain)) continue;
            if (static_cast<int>(ord.size()) == k_target) {
                merged.push_back(CanonicalTerm::of(ord));
            } else {
                // Pad the shorter chain up to the uniform target size.
                std::vector<CanonicalTerm> padded =
                    normalize_term(CanonicalTerm::of(ord).conjunct(), k_target, n);
                merged.insert(merged.end(), padded.begin(), padded.end());
            }
        }
    }
    return NormalizedDnf::make(k_target, std::move(merged));
}

} // namespace lopsa
