#include "jetcalc/variety.hpp"

#include "jetcalc/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace jetcalc {

AffineVariety::AffineVariety(Ideal ideal_, std::vector<Rational> base_point_)
    : ideal(std::move(ideal_)), base_point(std::move(base_point_)) {
    if (static_cast<int>(base_point.size()) != ideal.arity)
        throw ArityError("varieties: base point arity mismatch");
    for (const auto& g : ideal.gens)
        if (g.eval(base_point) != 0)
            throw DomainError("varieties: base point is not on the variety");
}

int variety_dimension(const AffineVariety& x, const Limits& limits) {
    return ideal_dimension(x.ideal, limits);
}

bool jet_scheme_member(const AffineVariety& x, const Jet& j) {
    if (j.arity() != x.ambient_arity())
        throw ArityError("varieties: jet arity does not match the ambient space");
    for (const auto& g : x.ideal.gens) {
        Series<Rational> s = series_compose(g, j.coords);
        if (!s.is_zero()) return false;
    }
    return true;
}

Ideal jet_scheme_ideal(const AffineVariety& x, int k) {
    const int n = x.ambient_arity();
    VarNames cnames = coefficient_names(x.ideal.names, n, k);
    auto sym = symbolic_jet(n, k, x.base_point, cnames);
    std::vector<Polynomial> gens;
    for (const auto& g : x.ideal.gens) {
        Series<Polynomial> s = series_compose(g, sym);
        // degree zero vanishes because the base point is on the variety
        for (int d = 1; d <= k; ++d)
            if (!s.coeff[d].is_zero()) gens.push_back(s.coeff[d]);
    }
    return Ideal(n * k, std::move(gens), cnames);
}

namespace {

// Depth-first search for a rational point of the system. Three phases per
// node: eliminate every variable that occurs linearly with a constant
// coefficient (substituting the solved expression, which keeps stage-wise
// triangular jet systems exactly solvable), then take a lex basis and branch
// over the rational roots of a univariate element, then as a last resort
// ground one variable to a small integer. Free variables end at zero;
// substituted expressions are resolved in reverse recording order. Budget
// counts branching nodes; exhaustion means "give up", never "no solution".
struct PointSearch {
    int arity;
    const Limits& limits;
    std::size_t budget;
    std::vector<std::pair<int, Polynomial>> pending; // var := expression

    bool finish(std::vector<std::optional<Rational>>& vals) {
        std::vector<char> is_pending(arity, 0);
        for (const auto& [v, e] : pending) is_pending[v] = 1;
        for (int v = 0; v < arity; ++v)
            if (!vals[v] && !is_pending[v]) vals[v] = rat(0);
        // an expression only references variables substituted after it
        for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
            Polynomial c = partial_eval(it->second, vals);
            if (!c.is_constant())
                throw Error("varieties: internal substitution chain not resolved");
            vals[it->first] = c.constant_coefficient();
        }
        return true;
    }

    // g == c*v + rest with constant c and v absent from rest
    static int solvable_var(const Polynomial& g) {
        const int n = g.arity();
        for (int v = n - 1; v >= 0; --v) {
            bool linear = false, clean = true;
            for (const auto& t : g.terms()) {
                if (t.mon.exps[v] == 0) continue;
                if (t.mon.exps[v] == 1 && t.mon.degree() == 1) linear = true;
                else clean = false;
            }
            if (linear && clean) return v;
        }
        return -1;
    }

    bool run(std::vector<Polynomial> gens, std::vector<std::optional<Rational>>& vals) {
        const std::size_t pending_mark = pending.size();
        bool progress = true;
        while (progress) {
            progress = false;
            std::vector<Polynomial> live;
            for (auto& g : gens) {
                if (g.is_zero()) continue;
                if (g.degree() == 0) {
                    pending.resize(pending_mark);
                    return false; // nonzero constant: no point
                }
                live.push_back(std::move(g));
            }
            gens = std::move(live);
            if (gens.empty()) return finish(vals);

            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int v = solvable_var(gens[gi]);
                if (v < 0) continue;
                Rational c = rat(0);
                std::vector<Term> rest;
                for (const auto& t : gens[gi].terms()) {
                    if (t.mon.exps[v] == 1 && t.mon.degree() == 1) c = t.coeff;
                    else rest.push_back(t);
                }
                Polynomial expr =
                    Polynomial::from_terms(arity, std::move(rest), gens[gi].names())
                        .scaled(-1 / c);
                std::vector<Polynomial> args;
                args.reserve(arity);
                for (int w = 0; w < arity; ++w)
                    args.push_back(w == v ? expr
                                          : Polynomial::variable(arity, w, gens[gi].names()));
                for (auto& g : gens) g = g.substitute(args);
                pending.emplace_back(v, std::move(expr));
                progress = true;
                break;
            }
        }

        if (budget == 0) {
            pending.resize(pending_mark);
            return false;
        }
        --budget;

        GroebnerBasis gb;
        try {
            gb = groebner_basis(Ideal(arity, gens), MonomialOrder::lex(), limits);
        } catch (const ResourceLimitError&) {
            pending.resize(pending_mark);
            return false;
        }
        if (gb.contains_one()) {
            pending.resize(pending_mark);
            return false;
        }

        // univariate element in the lex-least possible variable
        int best_var = -1;
        const Polynomial* pick = nullptr;
        for (const auto& g : gb.basis) {
            int var = -1;
            bool univariate = true;
            for (const auto& t : g.terms())
                for (int v = 0; v < arity && univariate; ++v)
                    if (t.mon.exps[v] > 0) {
                        if (var < 0) var = v;
                        else if (var != v) univariate = false;
                    }
            if (!univariate || var < 0) continue;
            if (var > best_var) {
                best_var = var;
                pick = &g;
            }
        }

        if (pick) {
            std::vector<Rational> coeffs(pick->degree() + 1, rat(0));
            for (const auto& t : pick->terms()) coeffs[t.mon.exps[best_var]] = t.coeff;
            for (const Rational& root : rational_roots(coeffs)) {
                vals[best_var] = root;
                std::vector<Polynomial> next;
                for (const auto& g : gb.basis) next.push_back(partial_eval(g, vals));
                if (run(std::move(next), vals)) return true; // failed child restored pending
                if (budget == 0) break;
            }
            vals[best_var] = std::nullopt;
            pending.resize(pending_mark);
            return false;
        }

        // positive-dimensional residue; ground the lex-least live variable
        int v = -1;
        for (const auto& g : gb.basis)
            for (const auto& t : g.terms())
                for (int i = 0; i < arity; ++i)
                    if (t.mon.exps[i] > 0) v = std::max(v, i);
        if (v < 0) {
            pending.resize(pending_mark);
            return false;
        }
        for (long c : {0L, 1L, -1L, 2L, -2L}) {
            vals[v] = rat(c);
            std::vector<Polynomial> next;
            for (const auto& g : gb.basis) next.push_back(partial_eval(g, vals));
            if (run(std::move(next), vals)) return true;
            if (budget == 0) break;
        }
        vals[v] = std::nullopt;
        pending.resize(pending_mark);
        return false;
    }
};

} // namespace

LiftResult lift_jet(const AffineVariety& x, const Jet& j, int big_k, const LiftOptions& options) {
    const int n = x.ambient_arity();
    if (j.arity() != n) throw ArityError("varieties: jet arity does not match the ambient space");
    const int k0 = j.order();
    if (big_k <= k0) throw DomainError("varieties: lift target order must exceed the jet order");
    if (!jet_scheme_member(x, j))
        throw DomainError("varieties: jet is not a member at its own order");

    const int fresh = big_k - k0; // unknown stages per coordinate
    const int e_count = n * fresh;
    VarNames unames;
    {
        std::vector<std::string> ns;
        ns.reserve(e_count);
        for (int i = 0; i < n; ++i)
            for (int d = k0 + 1; d <= big_k; ++d)
                ns.push_back(var_name(x.ideal.names, n, i) + "_" + std::to_string(d));
        unames = make_names(std::move(ns));
    }
    auto unknown_index = [&](int i, int d) { return i * fresh + (d - k0 - 1); };

    std::vector<Series<Polynomial>> sym;
    sym.reserve(n);
    for (int i = 0; i < n; ++i) {
        Series<Polynomial> s =
            Series<Polynomial>::zeroes(big_k, Polynomial::zero(e_count, unames));
        for (int d = 0; d <= k0; ++d)
            s.coeff[d] = Polynomial::constant(e_count, j.coords[i].coeff[d], unames);
        for (int d = k0 + 1; d <= big_k; ++d)
            s.coeff[d] = Polynomial::variable(e_count, unknown_index(i, d), unames);
        sym.push_back(std::move(s));
    }

    std::vector<std::vector<Polynomial>> eqs_by_order(big_k - k0);
    for (const auto& g : x.ideal.gens) {
        Series<Polynomial> s = series_compose(g, sym);
        for (int d = k0 + 1; d <= big_k; ++d)
            if (!s.coeff[d].is_zero()) eqs_by_order[d - k0 - 1].push_back(s.coeff[d]);
    }
    std::vector<Polynomial> all_eqs;
    for (const auto& block : eqs_by_order)
        for (const auto& e : block) all_eqs.push_back(e);

    LiftResult result;
    GroebnerBasis gb;
    try {
        gb = groebner_basis(Ideal(e_count, all_eqs, unames), MonomialOrder::degrevlex(),
                            options.limits);
    } catch (const ResourceLimitError&) {
        return result; // inconclusive
    }

    if (gb.contains_one()) {
        std::vector<Polynomial> prefix;
        for (int d = k0 + 1; d <= big_k; ++d) {
            for (const auto& e : eqs_by_order[d - k0 - 1]) prefix.push_back(e);
            GroebnerBasis pgb;
            try {
                pgb = groebner_basis(Ideal(e_count, prefix, unames), MonomialOrder::degrevlex(),
                                     options.limits);
            } catch (const ResourceLimitError&) {
                break;
            }
            if (pgb.contains_one()) {
                result.status = LiftResult::Status::Obstructed;
                result.obstruction_order = d;
                return result;
            }
        }
        result.status = LiftResult::Status::Obstructed;
        result.obstruction_order = big_k;
        return result;
    }

    // Attempt 0 searches the consistent system as-is; later attempts ground a
    // maximal staircase-independent set at random values to shake the search
    // onto a different slice of the solution set.
    std::vector<int> indep = independent_variables(gb);
    for (int attempt = 0; attempt < options.attempts; ++attempt) {
        std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(attempt)));
        std::uniform_int_distribution<long> dist(-options.bound, options.bound);
        std::vector<std::optional<Rational>> vals(e_count);
        if (attempt > 0)
            for (int v : indep) vals[v] = rat(dist(rng));

        std::vector<Polynomial> specialized;
        specialized.reserve(gb.basis.size());
        for (const auto& g : gb.basis) specialized.push_back(partial_eval(g, vals));

        PointSearch search{e_count, options.limits, options.branch_nodes, {}};
        if (!search.run(std::move(specialized), vals)) continue;

        std::vector<Series<Rational>> coords;
        coords.reserve(n);
        for (int i = 0; i < n; ++i) {
            Series<Rational> s = Series<Rational>::zeroes(big_k, Rational(0));
            for (int d = 0; d <= k0; ++d) s.coeff[d] = j.coords[i].coeff[d];
            for (int d = k0 + 1; d <= big_k; ++d) s.coeff[d] = *vals[unknown_index(i, d)];
            coords.push_back(std::move(s));
        }
        Jet witness(std::move(coords));
        if (!jet_scheme_member(x, witness))
            throw Error("varieties: internal lift witness verification failed");
        result.status = LiftResult::Status::Lifted;
        result.witness = std::move(witness);
        return result;
    }
    return result; // inconclusive
}

namespace {

bool poly_before(const Polynomial& a, const Polynomial& b) {
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const Term& ta = a.terms()[i];
        const Term& tb = b.terms()[i];
        if (ta.mon != tb.mon) return MonomialOrder::degrevlex().less(ta.mon, tb.mon);
        if (ta.coeff != tb.coeff) return ta.coeff < tb.coeff;
    }
    return false;
}

// leading block {w} for the homogenizing variable appended last
ConeIdeal cone_from_gens(std::vector<Polynomial> translated, int n, const VarNames& names,
                         const Limits& limits) {
    if (translated.size() == 1) return ConeIdeal{Ideal(n, {initial_form(translated[0])}, names)};

    std::string wname = "w";
    if (names) {
        auto taken = [&](const std::string& s) {
            return std::find(names->begin(), names->end(), s) != names->end();
        };
        while (taken(wname)) wname += "_";
    }
    std::vector<std::string> hn;
    for (int i = 0; i < n; ++i) hn.push_back(var_name(names, n, i));
    hn.push_back(wname);
    VarNames hnames = make_names(std::move(hn));

    std::vector<Polynomial> homog;
    homog.reserve(translated.size());
    for (const auto& g : translated) {
        int top = g.degree();
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m = Monomial::one(n + 1);
            for (int i = 0; i < n; ++i) m.exps[i] = t.mon.exps[i];
            m.exps[n] = top - t.mon.degree();
            ts.push_back(Term{std::move(m), t.coeff});
        }
        homog.push_back(Polynomial::from_terms(n + 1, std::move(ts), hnames));
    }

    std::vector<char> mask(n + 1, 0);
    mask[n] = 1;
    GroebnerBasis gb = groebner_basis(Ideal(n + 1, std::move(homog), hnames),
                                      MonomialOrder::block(mask), limits);

    std::vector<Polynomial> forms;
    for (const auto& g : gb.basis) {
        // dehomogenize: terms of one homogeneous element never collide
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m = Monomial::one(n);
            for (int i = 0; i < n; ++i) m.exps[i] = t.mon.exps[i];
            ts.push_back(Term{std::move(m), t.coeff});
        }
        Polynomial dehom = Polynomial::from_terms(n, std::move(ts), names);
        if (!dehom.is_zero()) forms.push_back(initial_form(dehom));
    }

    // drop duplicates, then generators the others already produce
    std::sort(forms.begin(), forms.end(), poly_before);
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    bool changed = true;
    while (changed && forms.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < forms.size(); ++j)
                if (j != i) others.push_back(forms[j]);
            GroebnerBasis og = groebner_basis(Ideal(n, others, names),
                                              MonomialOrder::degrevlex(), limits);
            if (ideal_member(forms[i], og, limits)) {
                forms.erase(forms.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return ConeIdeal{Ideal(n, std::move(forms), names)};
}

} // namespace

ConeIdeal tangent_cone(const AffineVariety& x, const Limits& limits) {
    const int n = x.ambient_arity();
    std::vector<Polynomial> translated;
    translated.reserve(x.ideal.gens.size());
    for (const auto& g : x.ideal.gens) translated.push_back(g.translate(x.base_point));
    if (translated.empty()) return ConeIdeal{Ideal(n, {}, x.ideal.names)};
    return cone_from_gens(std::move(translated), n, x.ideal.names, limits);
}

int cone_kernel_dimension(const PolyMap& h, const AffineVariety& y, const Limits& limits) {
    const int n = y.ambient_arity();
    if (h.source_arity != n)
        throw ArityError("varieties: map source does not match the ambient space");
    ConeIdeal cone = tangent_cone(y, limits);
    std::vector<Polynomial> gens = cone.ideal.gens;
    for (const auto& p : h.coords) {
        Polynomial form = Polynomial::zero(n, y.ideal.names);
        for (int v = 0; v < n; ++v) {
            Rational c = p.derivative(v).eval(y.base_point);
            if (c != 0)
                form = form + Polynomial::variable(n, v, y.ideal.names).scaled(c);
        }
        if (!form.is_zero()) gens.push_back(std::move(form));
    }
    return ideal_dimension(Ideal(n, std::move(gens), y.ideal.names), limits);
}

StratumResult stratum_dimension(const AffineVariety& x, int k, int m, int buffer_k,
                                const Limits& limits) {
    if (m < 1 || m > k || k >= buffer_k)
        throw DomainError("varieties: stratum orders must satisfy 1 <= m <= k < buffer");
    const int n = x.ambient_arity();
    Ideal jets = jet_scheme_ideal(x, buffer_k);
    const int nk_all = n * buffer_k;

    // ring with the localization variable z appended last
    std::vector<std::string> zn = *jets.names;
    zn.push_back("z_loc");
    VarNames znames = make_names(std::move(zn));
    auto extend = [&](const Polynomial& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            Monomial mm = Monomial::one(nk_all + 1);
            for (int v = 0; v < nk_all; ++v) mm.exps[v] = t.mon.exps[v];
            ts.push_back(Term{std::move(mm), t.coeff});
        }
        return Polynomial::from_terms(nk_all + 1, std::move(ts), znames);
    };

    std::vector<Polynomial> shared;
    for (const auto& g : jets.gens) shared.push_back(extend(g));
    for (int i = 0; i < n; ++i)
        for (int d = 1; d < m; ++d)
            shared.push_back(Polynomial::variable(nk_all + 1, i * buffer_k + (d - 1), znames));

    std::vector<int> drop;
    drop.push_back(nk_all); // z
    for (int i = 0; i < n; ++i)
        for (int d = k + 1; d <= buffer_k; ++d) drop.push_back(i * buffer_k + (d - 1));

    StratumResult out;
    out.buffer_order = buffer_k;
    out.dimension = -1;
    for (int i = 0; i < n; ++i) {
        std::vector<Polynomial> gens = shared;
        Polynomial unit = Polynomial::variable(nk_all + 1, nk_all, znames) *
                              Polynomial::variable(nk_all + 1, i * buffer_k + (m - 1), znames) -
                          Polynomial::constant(nk_all + 1, rat(1), znames);
        gens.push_back(std::move(unit));
        Ideal branch = eliminate(Ideal(nk_all + 1, std::move(gens), znames), drop, limits);
        out.dimension = std::max(out.dimension, ideal_dimension(branch, limits));
    }
    return out;
}

} // namespace jetcalc
