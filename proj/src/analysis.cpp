#include "jetcalc/analysis.hpp"

#include "jetcalc/errors.hpp"
#include "jetcalc/linalg.hpp"
#include "jetcalc/textio.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace jetcalc {

JdValue jacobian_multiplicity(const PolyMap& h, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != h.source_arity)
        throw ArityError("jd: point arity mismatch");
    Polynomial det = jacobian_det(h);
    if (det.is_zero()) return JdValue{true, 0};
    return JdValue{false, det.translate(v).min_degree()};
}

namespace {

// Exact division of p by (x_var - c); the caller has checked the remainder
// p|_{x_var = c} vanishes.
Polynomial divide_linear(const Polynomial& p, int var, const Rational& c) {
    int top = 0;
    for (const auto& t : p.terms()) top = std::max(top, t.mon.exps[var]);
    std::vector<Polynomial> slice(top + 1, Polynomial::zero(p.arity(), p.names()));
    for (const auto& t : p.terms()) {
        Monomial m = t.mon;
        int d = m.exps[var];
        m.exps[var] = 0;
        slice[d] = slice[d] + Polynomial::from_terms(p.arity(), {Term{m, t.coeff}}, p.names());
    }
    std::vector<Polynomial> q(top, Polynomial::zero(p.arity(), p.names()));
    q[top - 1] = slice[top];
    for (int d = top - 1; d >= 1; --d) q[d - 1] = slice[d] + q[d].scaled(c);

    Polynomial out = Polynomial::zero(p.arity(), p.names());
    for (int d = 0; d < top; ++d) {
        Monomial m = Monomial::one(p.arity());
        m.exps[var] = d;
        out = out + q[d].times_term(m, rat(1));
    }
    return out;
}

Polynomial monic(const Polynomial& p) {
    return p.scaled(1 / p.leading_term(MonomialOrder::degrevlex()).coeff);
}

// substitute x_var := c symbolically; zero result means (x_var - c) divides
bool vanishes_on_hyperplane(const Polynomial& p, int var, const Rational& c) {
    std::vector<std::optional<Rational>> vals(p.arity());
    vals[var] = c;
    return partial_eval(p, vals).is_zero();
}

} // namespace

std::vector<DivisorCandidate> auto_candidates(const PolyMap& g, std::string* residual_note) {
    const int n = g.source_arity;
    Polynomial det = jacobian_det(g);
    std::vector<DivisorCandidate> out;
    if (det.is_zero()) {
        if (residual_note)
            *residual_note = "Jacobian determinant is identically zero; no candidates extracted";
        return out;
    }
    if (det.degree() == 0) return out;

    auto push_unique = [&](Polynomial gen) {
        gen = monic(gen);
        for (const auto& c : out)
            if (c.ideal.gens[0] == gen) return;
        out.push_back(DivisorCandidate{Ideal(n, {gen}, g.source_names), false});
    };

    Monomial content = monomial_content(det);
    for (int i = 0; i < n; ++i)
        if (content.exps[i] > 0) push_unique(Polynomial::variable(n, i, g.source_names));

    Polynomial residual = divide_by_monomial(det, content);
    while (residual.degree() >= 1) {
        if (residual.degree() == 1) {
            push_unique(residual);
            break;
        }
        bool found = false;
        for (int i = 0; i < n && !found; ++i) {
            int deg_i = 0;
            for (const auto& t : residual.terms()) deg_i = std::max(deg_i, t.mon.exps[i]);
            if (deg_i == 0) continue;

            // specialize the other variables until the degree in x_i survives
            for (int shift = 0; shift < 6; ++shift) {
                std::vector<std::optional<Rational>> vals(n);
                for (int j = 0; j < n; ++j)
                    if (j != i) vals[j] = rat(1 + j + 5 * shift);
                Polynomial uni = partial_eval(residual, vals);
                std::vector<Rational> coeffs(deg_i + 1, rat(0));
                bool pure = true;
                for (const auto& t : uni.terms()) {
                    if (t.mon.degree() != t.mon.exps[i]) { pure = false; break; }
                    coeffs[t.mon.exps[i]] = t.coeff;
                }
                if (!pure || coeffs[deg_i] == 0) continue; // degenerate tuple
                for (const Rational& c : rational_roots(coeffs)) {
                    if (!vanishes_on_hyperplane(residual, i, c)) continue;
                    push_unique(Polynomial::variable(n, i, g.source_names) -
                                Polynomial::constant(n, c, g.source_names));
                    residual = divide_linear(residual, i, c);
                    found = true;
                    break;
                }
                break; // one sound specialization is enough for this variable
            }
        }
        if (!found) {
            if (residual_note)
                *residual_note = "unfactored Jacobian determinant residual of degree " +
                                 std::to_string(residual.degree()) + ": " + poly_str(residual);
            break;
        }
    }
    return out;
}

bool invariance_check(const PolyMap& g, const DivisorCandidate& d, const Limits& limits) {
    if (d.ideal.arity != g.source_arity || g.target_arity() != g.source_arity)
        throw ArityError("invariance: candidate and map must share one ambient space");
    GroebnerBasis gb = groebner_basis(d.ideal, MonomialOrder::degrevlex(), limits);
    for (const auto& p : d.ideal.gens)
        if (!ideal_member(p.substitute(g.coords), gb, limits)) return false;
    return true;
}

bool preimage_empty(const PolyMap& rho, const AffineVariety& x, const DivisorCandidate& d,
                    const Limits& limits) {
    if (rho.source_arity != x.ambient_arity())
        throw ArityError("preimage: rho must be defined on the ambient space of X");
    if (d.ideal.arity != rho.target_arity())
        throw ArityError("preimage: candidate lives in the target space of rho");
    std::vector<Polynomial> gens = x.ideal.gens;
    for (const auto& q : d.ideal.gens) gens.push_back(q.substitute(rho.coords));
    GroebnerBasis gb =
        groebner_basis(Ideal(x.ambient_arity(), std::move(gens), x.ideal.names),
                       MonomialOrder::degrevlex(), limits);
    return gb.contains_one();
}

std::vector<DivisorReport> exceptional_locus(const PolyMap& g,
                                             const std::vector<DivisorCandidate>& user,
                                             const Limits& limits,
                                             std::vector<std::string>* notes) {
    const int n = g.source_arity;
    if (g.target_arity() != n)
        throw ArityError("exceptional locus: map must be an endomorphism of affine space");

    std::string residual_note;
    std::vector<DivisorCandidate> candidates = auto_candidates(g, &residual_note);
    if (notes && !residual_note.empty()) notes->push_back(residual_note);

    // drop user candidates that re-state an auto candidate (same generators
    // up to scaling and order)
    auto signature = [](const Ideal& ideal) {
        std::vector<std::string> sig;
        for (const auto& p : ideal.gens) sig.push_back(poly_str(monic(p)));
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    for (const auto& cand : user) {
        bool duplicate = false;
        for (const auto& have : candidates)
            if (have.ideal.arity == cand.ideal.arity &&
                signature(have.ideal) == signature(cand.ideal)) {
                duplicate = true;
                break;
            }
        if (!duplicate) candidates.push_back(cand);
    }

    // the graph ring: source variables first, image variables after
    VarNames src = g.source_names ? g.source_names : default_names(n);
    std::vector<std::string> graph_names;
    for (const auto& s : *src) graph_names.push_back(s);
    for (const auto& s : *src) graph_names.push_back(s + "_im");
    VarNames gnames = make_names(std::move(graph_names));
    std::vector<Polynomial> lift;
    lift.reserve(n);
    for (int i = 0; i < n; ++i) lift.push_back(Polynomial::variable(2 * n, i, gnames));
    std::vector<int> drop(n);
    for (int i = 0; i < n; ++i) drop[i] = i;

    std::vector<DivisorReport> reports;
    for (const auto& cand : candidates) {
        DivisorReport rep;
        rep.candidate = cand;
        if (cand.ideal.arity != n) {
            rep.notes.push_back("rejected: candidate arity does not match the map");
            reports.push_back(std::move(rep));
            continue;
        }
        int cd = ideal_dimension(cand.ideal, limits);
        if (cd != n - 1) {
            rep.notes.push_back("rejected: locus has dimension " + std::to_string(cd) +
                                ", not " + std::to_string(n - 1));
            reports.push_back(std::move(rep));
            continue;
        }
        rep.codimension_one = true;

        std::vector<Polynomial> gens;
        for (const auto& q : cand.ideal.gens) gens.push_back(q.substitute(lift));
        for (int j = 0; j < n; ++j)
            gens.push_back(Polynomial::variable(2 * n, n + j, gnames) -
                           g.coords[j].substitute(lift));
        Ideal image = eliminate(Ideal(2 * n, std::move(gens), gnames), drop, limits);
        rep.image_dimension = ideal_dimension(image, limits);
        rep.exceptional = rep.image_dimension <= n - 2;
        rep.invariant = invariance_check(g, cand, limits);
        reports.push_back(std::move(rep));
    }
    return reports;
}

void validate_instance(const EndoInstance& inst, const Limits& limits) {
    const int nx = inst.x.ambient_arity();
    const int ny = inst.y.ambient_arity();
    if (inst.rho.source_arity != nx || inst.rho.target_arity() != ny)
        throw ArityError("instance: rho must map the ambient space of X to that of Y");
    if (inst.f.source_arity != nx || inst.f.target_arity() != nx)
        throw ArityError("instance: f must be an endomorphism of the ambient space of X");
    if (inst.g.source_arity != ny || inst.g.target_arity() != ny)
        throw ArityError("instance: g must be an endomorphism of the ambient space of Y");
    if (inst.s_max < 1 || inst.jet_order < 1)
        throw DomainError("instance: iteration and jet-order budgets must be positive");

    GroebnerBasis gbx =
        groebner_basis(inst.x.ideal, MonomialOrder::degrevlex(), limits);
    for (const auto& q : inst.x.ideal.gens)
        if (!ideal_member(q.substitute(inst.f.coords), gbx, limits))
            throw DomainError("instance: f does not map X into X");
    for (const auto& q : inst.y.ideal.gens)
        if (!ideal_member(q.substitute(inst.rho.coords), gbx, limits))
            throw DomainError("instance: rho does not map X into Y");

    GroebnerBasis gby =
        groebner_basis(inst.y.ideal, MonomialOrder::degrevlex(), limits);
    for (const auto& q : inst.y.ideal.gens)
        if (!ideal_member(q.substitute(inst.g.coords), gby, limits))
            throw DomainError("instance: g does not map Y into Y");
}

bool commutativity_check(const EndoInstance& inst, const Limits& limits) {
    PolyMap lhs = compose(inst.rho, inst.f);
    PolyMap rhs = compose(inst.g, inst.rho);
    GroebnerBasis gbx = groebner_basis(inst.x.ideal, MonomialOrder::degrevlex(), limits);
    for (int i = 0; i < lhs.target_arity(); ++i)
        if (!ideal_member(lhs.coords[i] - rhs.coords[i], gbx, limits)) return false;
    return true;
}

bool rational_left_inverse_check(const PolyMap& map, const RationalMap& inverse,
                                 const Ideal& modulo, const Limits& limits) {
    if (inverse.source_arity != map.target_arity() ||
        inverse.target_arity() != map.source_arity || modulo.arity != map.source_arity)
        throw ArityError("inverse check: arity mismatch");
    GroebnerBasis gb = groebner_basis(modulo, MonomialOrder::degrevlex(), limits);
    for (int i = 0; i < inverse.target_arity(); ++i) {
        Polynomial num = inverse.num[i].substitute(map.coords);
        Polynomial den = inverse.den[i].substitute(map.coords);
        if (ideal_member(den, gb, limits)) return false; // denominator dies on the variety
        Polynomial xi = Polynomial::variable(map.source_arity, i, map.source_names);
        if (!ideal_member(num - xi * den, gb, limits)) return false;
    }
    return true;
}

ObstructionRow obstruction_compare(const EndoInstance& inst, const std::vector<Rational>& point,
                                   int s, int k, const std::optional<PolyMap>& psi,
                                   const SampleParams& params, const Limits& limits) {
    if (s < 1 || k < 1) throw DomainError("obstruction: s and k must be positive");
    AffineVariety xx(inst.x.ideal, point); // validates the point lies on X

    const int nx = inst.x.ambient_arity();
    if (!inst.x.ideal.gens.empty()) {
        int dim = ideal_dimension(inst.x.ideal, limits);
        QMatrix jac;
        jac.rows = static_cast<int>(inst.x.ideal.gens.size());
        jac.cols = nx;
        for (const auto& q : inst.x.ideal.gens)
            for (int j = 0; j < nx; ++j) jac.data.push_back(q.derivative(j).eval(point));
        if (exact_rank(jac) != nx - dim)
            throw DomainError("obstruction: X is singular at the point");
    }

    PolyMap projection;
    if (psi) {
        if (psi->source_arity != inst.y.ambient_arity())
            throw ArityError("obstruction: psi must be defined on the ambient space of Y");
        projection = *psi;
    } else {
        if (!inst.y.ideal.gens.empty())
            throw DomainError("obstruction: embedded Y needs an explicit projection");
        projection = PolyMap::identity(inst.y.ambient_arity(), inst.y.ideal.names);
    }

    PolyMap fs = iterate(inst.f, s);
    PolyMap gs = iterate(inst.g, s);
    PolyMap through_f = compose(projection, compose(inst.rho, fs));
    PolyMap through_g = compose(projection, compose(gs, inst.rho));

    ObstructionRow row{s, k, -1, -1};
    if (inst.x.ideal.gens.empty()) {
        row.dim_f = image_dimension(coefficient_map(through_f, k, point), params);
        row.dim_g = image_dimension(coefficient_map(through_g, k, point), params);
    } else {
        Ideal constraint = jet_scheme_ideal(xx, k);
        row.dim_f = image_dimension(coefficient_map(through_f, k, point), constraint, params);
        row.dim_g = image_dimension(coefficient_map(through_g, k, point), constraint, params);
    }
    return row;
}

AnalysisReport analyze(const EndoInstance& inst,
                       const std::vector<DivisorCandidate>& user_candidates,
                       const SampleParams& params, const Limits& limits) {
    AnalysisReport report;
    report.seed = params.seed;

    try {
        validate_instance(inst, limits);
    } catch (const Error& e) {
        report.errors.push_back(std::string("instance: ") + e.what());
        return report; // a malformed square invalidates every later phase
    }

    try {
        report.commutativity = commutativity_check(inst, limits);
        if (!report.commutativity)
            report.notes.push_back("the square does not commute; downstream facts still hold "
                                   "for each map separately");
    } catch (const Error& e) {
        report.errors.push_back(std::string("commutativity: ") + e.what());
    }

    try {
        report.divisors = exceptional_locus(inst.g, user_candidates, limits, &report.notes);
        if (report.divisors.empty()) report.notes.push_back("no divisor candidates");
    } catch (const Error& e) {
        report.errors.push_back(std::string("divisors: ") + e.what());
    }

    for (std::size_t i = 0; i < report.divisors.size(); ++i) {
        DivisorReport& rep = report.divisors[i];
        if (!rep.codimension_one) continue;
        try {
            rep.preimage_empty = preimage_empty(inst.rho, inst.x, rep.candidate, limits);
        } catch (const Error& e) {
            report.errors.push_back("preimage(candidate " + std::to_string(i + 1) +
                                    "): " + e.what());
        }
        if (rep.exceptional && rep.invariant && rep.preimage_empty && *rep.preimage_empty)
            rep.notes.push_back(
                "exceptional and invariant with empty preimage on the domain side");
    }

    if (!inst.y.ideal.gens.empty()) {
        report.notes.push_back("dimension table skipped: embedded target without a projection");
    } else {
        for (int s = 1; s <= inst.s_max; ++s)
            for (int k = 1; k <= inst.jet_order; ++k) {
                try {
                    report.table.push_back(
                        obstruction_compare(inst, inst.x.base_point, s, k, {}, params, limits));
                } catch (const Error& e) {
                    report.errors.push_back("obstruction(s=" + std::to_string(s) +
                                            ",k=" + std::to_string(k) + "): " + e.what());
                }
            }
    }

    if (inst.f_inverse) {
        try {
            bool ok = rational_left_inverse_check(inst.f, *inst.f_inverse, inst.x.ideal, limits);
            report.notes.push_back(ok ? "f_inverse verified as a left inverse modulo I(X)"
                                      : "f_inverse FAILED verification modulo I(X)");
        } catch (const Error& e) {
            report.errors.push_back(std::string("f_inverse: ") + e.what());
        }
    }
    if (inst.g_inverse) {
        try {
            bool ok = rational_left_inverse_check(inst.g, *inst.g_inverse, inst.y.ideal, limits);
            report.notes.push_back(ok ? "g_inverse verified as a left inverse modulo I(Y)"
                                      : "g_inverse FAILED verification modulo I(Y)");
        } catch (const Error& e) {
            report.errors.push_back(std::string("g_inverse: ") + e.what());
        }
    }
    return report;
}

std::string report_str(const AnalysisReport& report) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["jetcalc_report"] = 1;
    doc["seed"] = report.seed;
    doc["commutativity"] = report.commutativity;

    doc["divisors"] = json::array();
    for (const auto& rep : report.divisors) {
        json d;
        json gens = json::array();
        for (const auto& g : rep.candidate.ideal.gens) gens.push_back(poly_str(g));
        d["generators"] = std::move(gens);
        d["provenance"] = rep.candidate.user_supplied ? "user" : "auto";
        d["codimension_one"] = rep.codimension_one;
        if (rep.codimension_one) {
            d["image_dimension"] = rep.image_dimension;
            d["exceptional"] = rep.exceptional;
            d["invariant"] = rep.invariant;
            if (rep.preimage_empty)
                d["preimage_empty"] = *rep.preimage_empty;
            else
                d["preimage_empty"] = nullptr;
        }
        d["notes"] = rep.notes;
        doc["divisors"].push_back(std::move(d));
    }

    doc["dimension_table"] = json::array();
    for (const auto& row : report.table) {
        json r;
        r["s"] = row.s;
        r["k"] = row.k;
        r["dim_f"] = row.dim_f;
        r["dim_g"] = row.dim_g;
        doc["dimension_table"].push_back(std::move(r));
    }

    doc["notes"] = report.notes;
    doc["errors"] = report.errors;
    return doc.dump(2) + "\n";
}

} // namespace jetcalc
