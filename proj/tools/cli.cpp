// Command line for the ordering-principle toolkit. Every subcommand is a
// thin wrapper over one or two library calls; all values are exact
// rationals, printed as "p" or "p/q". Exit codes: 0 ok, 1 a verification
// failed, 2 bad usage or bad input, 3 internal error.

#include "lopsa/config.hpp"
#include "lopsa/covering.hpp"
#include "lopsa/gate.hpp"
#include "lopsa/json_io.hpp"
#include "lopsa/lp_oracle.hpp"
#include "lopsa/normalization.hpp"
#include "lopsa/pe.hpp"
#include "lopsa/reductions.hpp"
#include "lopsa/sa.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lopsa;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInputError(path + ": " + std::string(e.what()));
    }
}

template <typename T>
T load(const std::string& path) {
    try {
        return read_json_file(path).get<T>();
    } catch (const Json::exception& e) {
        throw InvalidInputError(path + ": " + std::string(e.what()));
    }
}

// --out writes canonical JSON ("-" for stdout); a path ending in .tsv picks
// the tabular form where one exists.
void emit(const std::string& out, const Json& j,
          const std::function<std::string()>& tsv = {}) {
    if (out.empty()) return;
    std::string text;
    if (out.ends_with(".tsv")) {
        if (!tsv) throw InvalidInputError("this subcommand has no TSV form");
        text = tsv();
    } else {
        text = dump_canonical(j);
    }
    if (out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw InvalidInputError("cannot write " + out);
    f << text;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used]))) ++used;
            if (used != part.size()) throw std::invalid_argument(part);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInputError("not an integer list: " + s);
        }
    }
    if (out.empty()) throw InvalidInputError("empty integer list");
    return out;
}

AxiomFamily family_arg(const std::string& name, const std::string& in, int n) {
    if (!name.empty() && !in.empty())
        throw InvalidInputError("give either --family or --in, not both");
    if (!name.empty()) return family_by_name(name, n);
    if (!in.empty()) {
        AxiomFamily f = load<AxiomFamily>(in);
        f.validate();
        return f;
    }
    throw InvalidInputError("one of --family or --in is required");
}

CLI::App* make_sub(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
}

// ------------------------------------------------------------------- encode

struct EncodeOpts {
    std::string family, axiom, in, type, out;
    int n = 0;
};

int run_encode(const EncodeOpts& o) {
    Json j;
    if (!o.family.empty()) {
        AxiomFamily f = family_by_name(o.family, o.n);
        if (!o.axiom.empty())
            j = f.axiom(o.axiom);
        else
            j = f;
    } else if (!o.in.empty()) {
        if (o.type.empty()) throw InvalidInputError("--in needs --type");
        Json raw = read_json_file(o.in);
        try {
            if (o.type == "dnf") j = raw.get<Dnf>();
            else if (o.type == "conjunct") j = raw.get<Conjunct>();
            else if (o.type == "junta") j = raw.get<ConicalJunta>();
            else if (o.type == "polynomial") j = raw.get<Polynomial>();
            else if (o.type == "normalized") j = raw.get<NormalizedDnf>();
            else if (o.type == "family") j = raw.get<AxiomFamily>();
            else if (o.type == "proof") j = raw.get<SAProof>();
            else if (o.type == "pool") j = raw.get<std::vector<WeakeningEntry>>();
            else if (o.type == "tree") j = raw.get<DecisionTree>();
            else if (o.type == "problem") j = raw.get<SearchProblem>();
            else if (o.type == "formulation") j = raw.get<Formulation>();
            else if (o.type == "ce-formulation") j = raw.get<CounterExampleFormulation>();
            else if (o.type == "order") j = raw.get<TotalOrder>();
            else if (o.type == "term") j = raw.get<CanonicalTerm>();
            else throw InvalidInputError("unknown --type " + o.type);
        } catch (const Json::exception& e) {
            throw InvalidInputError(o.in + ": " + std::string(e.what()));
        }
    } else {
        throw InvalidInputError("encode needs --family or --in");
    }
    if (o.out.empty())
        std::cout << dump_canonical(j);
    else
        emit(o.out, j);
    return kOk;
}

void add_encode(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<EncodeOpts>();
    CLI::App* sub = make_sub(app, "encode",
                             "emit a built-in object, or re-emit a file, in canonical JSON");
    sub->add_option("--family", o->family, "built-in family name (lop, least-number)");
    sub->add_option("--n", o->n, "instance size for --family");
    sub->add_option("--axiom", o->axiom, "emit a single labeled axiom of the family");
    sub->add_option("--in", o->in, "input JSON file to validate and re-emit");
    sub->add_option("--type", o->type,
                    "input kind: dnf conjunct junta polynomial normalized family proof pool "
                    "tree problem formulation ce-formulation order term");
    sub->add_option("--out", o->out, "write JSON here instead of stdout");
    sub->callback([o, &run] { run = [o] { return run_encode(*o); }; });
}

// ----------------------------------------------------------------------- pe

struct PeOpts {
    std::string family, axiom, dnf, poly, normalized, term, junta, out;
    int n = 0;
    bool breakdown = false;
};

int run_pe(const PeOpts& o) {
    int sources = !o.family.empty() + !o.dnf.empty() + !o.poly.empty() +
                  !o.normalized.empty() + !o.term.empty();
    if (sources != 1)
        throw InvalidInputError("give exactly one of --family, --dnf, --poly, --normalized, --term");

    std::optional<ConicalJunta> junta;
    if (!o.junta.empty()) junta = load<ConicalJunta>(o.junta);

    PeReport report;
    if (!o.poly.empty()) {
        if (junta) throw InvalidInputError("--junta does not combine with --poly");
        report = pe_report(load<Polynomial>(o.poly), o.n);
    } else if (!o.term.empty()) {
        if (junta) throw InvalidInputError("--junta does not combine with --term");
        CanonicalTerm t = CanonicalTerm::of(parse_int_list(o.term));
        Polynomial p;
        Monomial m = t.conjunct().positives();
        canonicalize_monomial(m);
        p.add_term(m, Rat(1));
        report = pe_report(p, o.n);
    } else {
        Dnf d;
        if (!o.family.empty()) {
            if (o.axiom.empty()) throw InvalidInputError("--family needs --axiom");
            d = family_by_name(o.family, o.n).axiom(o.axiom);
        } else if (!o.dnf.empty()) {
            d = load<Dnf>(o.dnf);
        } else {
            d = load<NormalizedDnf>(o.normalized).to_dnf();
        }
        report = junta ? pe_report(d, *junta, o.n) : pe_report(d, o.n);
    }

    std::cout << rat_to_string(report.value) << "\n";
    if (o.breakdown) {
        std::cout << "universe " << report.universe.get_str() << " orders\n";
        for (const auto& [label, v] : report.breakdown)
            std::cout << "  " << label << "  " << rat_to_string(v) << "\n";
    }
    emit(o.out, report);
    return kOk;
}

void add_pe(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<PeOpts>();
    CLI::App* sub = make_sub(app, "pe", "uniform-order expectation of a DNF, term or polynomial");
    sub->add_option("--n", o->n, "ground-set size")->required();
    sub->add_option("--family", o->family, "built-in family providing the DNF");
    sub->add_option("--axiom", o->axiom, "axiom label inside --family");
    sub->add_option("--dnf", o->dnf, "DNF JSON file");
    sub->add_option("--poly", o->poly, "polynomial JSON file");
    sub->add_option("--normalized", o->normalized, "normalized DNF JSON file");
    sub->add_option("--term", o->term, "chain term as a comma list, e.g. 2,1,3");
    sub->add_option("--junta", o->junta, "conical junta JSON file to multiply in");
    sub->add_flag("--breakdown", o->breakdown, "print per-contribution accounting");
    sub->add_option("--out", o->out, "write the full report as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_pe(*o); }; });
}

// ----------------------------------------------------------- check-conditions

struct CondOpts {
    std::string family, in, out;
    int n = 0, degree = 0;
    long cap = 2000000;
};

int run_check_conditions(const CondOpts& o) {
    AxiomFamily f = family_arg(o.family, o.in, o.n);
    ConditionsReport r = check_conditions(f, o.degree, o.n, o.cap);
    if (r.ok) {
        std::cout << "Conditions 1-3 hold at degree " << r.degree << " (" << r.conjuncts
                  << " conjuncts, " << r.products_checked << " products)\n";
    } else if (r.violation) {
        std::cout << "Condition " << r.violation->condition << " fails";
        if (!r.violation->axiom.empty()) std::cout << " on axiom " << r.violation->axiom;
        std::cout << ": junta " << r.violation->junta.str() << ", value "
                  << rat_to_string(r.violation->value) << "\n";
    }
    emit(o.out, r);
    return r.ok ? kOk : kFail;
}

void add_check_conditions(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<CondOpts>();
    CLI::App* sub = make_sub(app, "check-conditions",
                             "test the uniform-order values against Conditions 1-3 at a degree");
    sub->add_option("--family", o->family, "built-in family name");
    sub->add_option("--in", o->in, "family JSON file");
    sub->add_option("--n", o->n, "ground-set size")->required();
    sub->add_option("--degree", o->degree, "proof degree to certify against")->required();
    sub->add_option("--conjunct-cap", o->cap, "largest conjunct pool to enumerate");
    sub->add_option("--out", o->out, "write the report as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_check_conditions(*o); }; });
}

// ------------------------------------------------------------------ normalize

struct NormOpts {
    std::string in, out;
    int n = 0;
    int support = 0;
    bool full = false;
};

int run_normalize(const NormOpts& o) {
    Dnf w = load<Dnf>(o.in);
    NormalizeOptions opts;
    if (o.support > 0) opts.support_size = o.support;
    opts.full_padding = o.full;
    NormalizedDnf nd = normalize_dnf(w, o.n, opts);
    std::cout << "support " << nd.support_size << ", " << nd.terms.size() << " terms\n";
    std::size_t shown = 0;
    for (const CanonicalTerm& t : nd.terms) {
        if (shown++ == 64) {
            std::cout << "  ... (" << nd.terms.size() - 64 << " more)\n";
            break;
        }
        std::cout << "  " << t.str() << "\n";
    }
    emit(o.out, nd);
    return kOk;
}

void add_normalize(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<NormOpts>();
    CLI::App* sub = make_sub(app, "normalize",
                             "rewrite a DNF over order variables as uniform chain terms");
    sub->add_option("--in", o->in, "DNF JSON file")->required();
    sub->add_option("--n", o->n, "ground-set size")->required();
    sub->add_option("--support-size", o->support, "force this uniform support size");
    sub->add_flag("--full-padding", o->full, "pad to 2*degree+1 instead of the minimum");
    sub->add_option("--out", o->out, "write the normalized DNF as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_normalize(*o); }; });
}

// ------------------------------------------------------------------- check-sa

struct CheckSaOpts {
    std::string family, in, cert, out;
    int n = 0;
};

int run_check_sa(const CheckSaOpts& o) {
    AxiomFamily f = family_arg(o.family, o.in, o.n);
    SAProof p;
    if (o.cert == "builtin") {
        if (o.family != "least-number")
            throw InvalidInputError("no built-in certificate for this family");
        p = least_number_refutation(o.n);
    } else {
        p = load<SAProof>(o.cert);
    }
    SACheck c = check_sa_proof(f, p);
    if (c.ok) {
        std::cout << "OK, degree " << c.metrics.degree << "\n";
        if (c.metrics.unary)
            std::cout << "unary size " << c.metrics.unary_size.get_str() << ", complexity "
                      << std::fixed << std::setprecision(2) << c.metrics.complexity << "\n";
    } else if (!c.weakening_ok) {
        std::cout << "weakening fails: "
                  << (c.witness ? c.witness->str() : std::string("no witness recorded")) << "\n";
    } else {
        std::cout << "combination does not sum to -1; residual has "
                  << c.residual.terms().size() << " monomials\n";
    }
    emit(o.out, c);
    return c.ok ? kOk : kFail;
}

void add_check_sa(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<CheckSaOpts>();
    CLI::App* sub = make_sub(app, "check-sa", "verify a refutation certificate against a family");
    sub->add_option("--family", o->family, "built-in family name");
    sub->add_option("--in", o->in, "family JSON file");
    sub->add_option("--n", o->n, "instance size")->required();
    sub->add_option("--cert", o->cert, "certificate JSON file, or 'builtin'")->required();
    sub->add_option("--out", o->out, "write the check result as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_check_sa(*o); }; });
}

// -------------------------------------------------------------------- find-sa

struct FindSaOpts {
    std::string family, in, pool, out;
    int n = 0, degree = 0;
};

int run_find_sa(const FindSaOpts& o) {
    AxiomFamily f = family_arg(o.family, o.in, o.n);
    DegreeOracleResult r;
    if (o.pool.empty()) {
        r = lp_degree_oracle(f, o.degree);
    } else {
        auto pool = load<std::vector<WeakeningEntry>>(o.pool);
        r = sigma2_lp_oracle(f, o.degree, pool);
        f = extend_with_pool(f, pool);
    }
    bool ok = true;
    if (r.feasible) {
        SACheck c = check_sa_proof(f, *r.refutation);
        ok = c.ok;
        std::cout << "feasible: refutation " << (c.ok ? "verifies" : "FAILS") << ", degree "
                  << c.metrics.degree << ", " << r.refutation->weakening.size() << " entries ("
                  << r.pivots << " pivots)\n";
    } else {
        std::cout << "infeasible at degree " << o.degree << "; Farkas dual passes Conditions 1-3 ("
                  << r.dual.size() << " monomials, " << r.pivots << " pivots, LP " << r.lp_rows
                  << "x" << r.lp_cols << ")\n";
    }
    emit(o.out, r);
    return ok ? kOk : kFail;
}

void add_find_sa(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<FindSaOpts>();
    CLI::App* sub = make_sub(app, "find-sa",
                             "decide degree-d refutability by exact LP, either side certified");
    sub->add_option("--family", o->family, "built-in family name");
    sub->add_option("--in", o->in, "family JSON file");
    sub->add_option("--n", o->n, "instance size")->required();
    sub->add_option("--degree", o->degree, "proof degree")->required();
    sub->add_option("--pool", o->pool, "JSON file with extra weakenings to admit as axioms");
    sub->add_option("--out", o->out, "write the oracle result as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_find_sa(*o); }; });
}

// ------------------------------------------------------------- check-reduction

struct CheckRedOpts {
    std::string source, target, formulation, ce, out;
};

int run_check_reduction(const CheckRedOpts& o) {
    SearchProblem q = load<SearchProblem>(o.source);
    SearchProblem r = load<SearchProblem>(o.target);
    FormulationCheck c;
    if (!o.ce.empty()) {
        c = check_ce_formulation(q, r, load<CounterExampleFormulation>(o.ce));
    } else {
        c = check_formulation(q, r, load<Formulation>(o.formulation));
    }
    if (c.ok)
        std::cout << "formulation valid: every source input maps to a solving output\n";
    else if (c.failure)
        std::cout << "formulation fails: " << c.failure->str() << "\n";
    emit(o.out, c);
    return c.ok ? kOk : kFail;
}

void add_check_reduction(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<CheckRedOpts>();
    CLI::App* sub = make_sub(app, "check-reduction",
                             "exhaustively verify a reduction between two search problems");
    sub->add_option("--source", o->source, "source problem JSON file")->required();
    sub->add_option("--target", o->target, "target problem JSON file")->required();
    sub->add_option("--formulation", o->formulation, "formulation JSON file (f and g trees)");
    sub->add_option("--ce", o->ce, "counter-example formulation JSON file (f, g and h trees)");
    sub->add_option("--out", o->out, "write the check result as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_check_reduction(*o); }; });
}

// ------------------------------------------------------------------ factorize

struct FactorizeOpts {
    std::string source, target, formulation, out;
};

int run_factorize(const FactorizeOpts& o) {
    SearchProblem q = load<SearchProblem>(o.source);
    SearchProblem r = load<SearchProblem>(o.target);
    Formulation phi = load<Formulation>(o.formulation);
    Factorization fac = factorize(q, r, phi);
    std::cout << "weakening step: "
              << (fac.weakening_ok ? "ok (" + std::to_string(fac.weakening.size()) + " entries)"
                                   : "FAILS" + (fac.weakening_witness
                                                    ? " at " + fac.weakening_witness->str()
                                                    : std::string()))
              << "\n";
    std::cout << "counter-example step: "
              << (fac.ce_ok ? "ok"
                            : "FAILS" + (fac.ce_failure ? " at " + fac.ce_failure->str()
                                                        : std::string()))
              << "\n";
    emit(o.out, fac);
    return (fac.weakening_ok && fac.ce_ok) ? kOk : kFail;
}

void add_factorize(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<FactorizeOpts>();
    CLI::App* sub = make_sub(app, "factorize",
                             "split a reduction into a weakening step and a counter-example step");
    sub->add_option("--source", o->source, "source problem JSON file")->required();
    sub->add_option("--target", o->target, "target problem JSON file")->required();
    sub->add_option("--formulation", o->formulation, "formulation JSON file")->required();
    sub->add_option("--out", o->out, "write the factorization as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_factorize(*o); }; });
}

// -------------------------------------------------------------- transform-proof

struct TransformOpts {
    std::string source, target, formulation, cert, out;
};

int run_transform(const TransformOpts& o) {
    SearchProblem q = load<SearchProblem>(o.source);
    SearchProblem r = load<SearchProblem>(o.target);
    Formulation phi = load<Formulation>(o.formulation);
    SAProof rproof = load<SAProof>(o.cert);
    ReducedProblem mid = reduced_problem(q, r, phi);
    TransformResult tr = transform_sa_proof(rproof, r, mid, phi);
    if (tr.check.ok)
        std::cout << "transformed refutation verifies: degree " << tr.check.metrics.degree
                  << " (bound " << tr.degree_bound << ")\n";
    else
        std::cout << "transformed refutation FAILS to verify\n";
    if (!tr.degree_ok)
        std::cout << "degree " << tr.check.metrics.degree << " exceeds the bound "
                  << tr.degree_bound << "\n";
    emit(o.out, tr);
    return (tr.check.ok && tr.degree_ok) ? kOk : kFail;
}

void add_transform(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<TransformOpts>();
    CLI::App* sub = make_sub(app, "transform-proof",
                             "pull a target refutation back through a reduction and re-verify");
    sub->add_option("--source", o->source, "source problem JSON file")->required();
    sub->add_option("--target", o->target, "target problem JSON file")->required();
    sub->add_option("--formulation", o->formulation, "formulation JSON file")->required();
    sub->add_option("--cert", o->cert, "refutation of the target's false family")->required();
    sub->add_option("--out", o->out, "write proof, check and bound as JSON (path or -)");
    sub->callback([o, &run] { run = [o] { return run_transform(*o); }; });
}

// ---------------------------------------------------------------------- cover

struct CoverOpts {
    std::string universe = "ord";
    std::string term, out;
    int n = 0, d = 0, bound = -1;
    long long budget = -1;
    bool one_in_s = false;
};

int run_cover(const CoverOpts& o) {
    CoverInstance inst;
    inst.n = o.n;
    inst.d = o.d;
    inst.one_in_s = o.one_in_s;
    if (o.universe == "ord") {
        inst.universe = CoverUniverse::Ord;
    } else if (o.universe == "ord-star") {
        inst.universe = CoverUniverse::OrdStar1;
    } else if (o.universe == "term") {
        inst.universe = CoverUniverse::Term;
        if (o.term.empty()) throw InvalidInputError("--universe term needs --term");
        inst.term = CanonicalTerm::of(parse_int_list(o.term));
    } else {
        throw InvalidInputError("unknown universe " + o.universe + " (ord, ord-star, term)");
    }

    CoverResult r = min_cover(inst, o.budget, o.bound);
    if (r.cover.empty() && o.bound >= 0) {
        std::cout << "no cover with fewer than " << o.bound << " sets ("
                  << (r.exact ? "exact" : "budget exhausted") << ", " << r.nodes << " nodes)\n";
    } else {
        std::cout << "min=" << r.size << " (" << (r.exact ? "exact" : "best under budget") << ", "
                  << r.nodes << " nodes)\n";
        for (const CoverSet& cs : r.cover) {
            std::cout << "  {";
            for (std::size_t i = 0; i < cs.elements.size(); ++i)
                std::cout << (i ? "," : "") << cs.elements[i];
            std::cout << "} ordered (";
            for (std::size_t i = 0; i < cs.ordering.size(); ++i)
                std::cout << (i ? "," : "") << cs.ordering[i];
            std::cout << ")\n";
        }
    }
    emit(o.out, r, [&r] {
        std::ostringstream t;
        t << "elements\tordering\n";
        for (const CoverSet& cs : r.cover) {
            for (std::size_t i = 0; i < cs.elements.size(); ++i)
                t << (i ? " " : "") << cs.elements[i];
            t << "\t";
            for (std::size_t i = 0; i < cs.ordering.size(); ++i)
                t << (i ? " " : "") << cs.ordering[i];
            t << "\n";
        }
        return t.str();
    });
    return kOk;
}

void add_cover(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<CoverOpts>();
    CLI::App* sub = make_sub(app, "cover",
                             "minimum number of induced-order sets covering an order universe");
    sub->add_option("--n", o->n, "ground-set size")->required();
    sub->add_option("--d", o->d, "size of each covering set's support")->required();
    sub->add_option("--universe", o->universe, "ord (all orders), ord-star (1 not first), term");
    sub->add_option("--term", o->term, "chain term for --universe term, e.g. 1,3,2");
    sub->add_flag("--one-in-s", o->one_in_s, "restrict covering sets to those containing 1");
    sub->add_option("--budget", o->budget, "node budget for the search (-1 = unlimited)");
    sub->add_option("--bound", o->bound, "report only covers strictly smaller than this");
    sub->add_option("--out", o->out, "write the result as JSON or .tsv (path or -)");
    sub->callback([o, &run] { run = [o] { return run_cover(*o); }; });
}

// --------------------------------------------------------------------- report

struct ReportOpts {
    std::string out;
    int only = 0;
    std::uint64_t seed = 0;
};

int run_report(const ReportOpts& o) {
    std::vector<GateResult> results = run_gate(o.only, o.seed);
    int failures = 0;
    for (const GateResult& r : results) {
        std::cout << "criterion " << std::setw(2) << r.id << "  "
                  << (r.pass ? "PASS" : "[FAIL]") << "  " << std::fixed << std::setprecision(2)
                  << std::setw(7) << r.seconds << "s  " << r.detail << "\n";
        std::cout.flush();
        if (!r.pass) ++failures;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failing"
                           : std::string("all criteria pass"))
              << "\n";

    Json j;
    j["version"] = config::version();
    j["enum_cap"] = config::enum_cap();
    j["exhaustion_cap"] = config::exhaustion_cap();
    j["workers"] = config::workers();
    j["seed_base"] = o.seed;
    j["failures"] = failures;
    j["checks"] = Json::array();
    for (const GateResult& r : results)
        j["checks"].push_back(
            {{"id", r.id}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    emit(o.out, j, [&results] {
        std::ostringstream t;
        t << "id\tpass\tseconds\tdetail\n";
        for (const GateResult& r : results)
            t << r.id << "\t" << (r.pass ? "pass" : "fail") << "\t" << std::fixed
              << std::setprecision(2) << r.seconds << "\t" << r.detail << "\n";
        return t.str();
    });
    return failures ? kFail : kOk;
}

void add_report(CLI::App& app, std::function<int()>& run) {
    auto o = std::make_shared<ReportOpts>();
    CLI::App* sub = make_sub(app, "report", "run the release-gate checks and tabulate the results");
    sub->add_option("--only", o->only, "run a single check by number");
    sub->add_option("--seed", o->seed, "perturb the random suites (0 = published seeding)");
    sub->add_option("--out", o->out, "write the table as JSON or .tsv (path or -)");
    sub->callback([o, &run] { run = [o] { return run_report(*o); }; });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for order-principle refutations, expectations and covers"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", lopsa::config::version());

    int workers = 0, ecap = 0, xcap = 0;
    app.add_option("--workers", workers, "threads for order-space scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--enum-cap", ecap, "largest n allowed to enumerate n! orders")
        ->check(CLI::PositiveNumber);
    app.add_option("--exhaustion-cap", xcap, "largest boolean exhaustion, in variables")
        ->check(CLI::PositiveNumber);

    std::function<int()> run;
    add_encode(app, run);
    add_pe(app, run);
    add_check_conditions(app, run);
    add_normalize(app, run);
    add_check_sa(app, run);
    add_find_sa(app, run);
    add_check_reduction(app, run);
    add_factorize(app, run);
    add_transform(app, run);
    add_cover(app, run);
    add_report(app, run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (workers) lopsa::config::set_workers(workers);
        if (ecap) lopsa::config::set_enum_cap(ecap);
        if (xcap) lopsa::config::set_exhaustion_cap(xcap);
        return run ? run() : kUsage;
    } catch (const lopsa::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const lopsa::EnumerationBoundError& e) {
        std::cerr << "error: " << e.what() << " (raise --enum-cap or --exhaustion-cap)\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
