// Acceptance gate: one line per criterion, "PASS"/"FAIL" plus elapsed time.
// Every check is exact rational arithmetic; the seeds and budgets are pinned
// here so reruns are reproducible. Exits nonzero when any criterion fails.

#include <jetcalc/analysis.hpp>
#include <jetcalc/errors.hpp>
#include <jetcalc/linalg.hpp>
#include <jetcalc/textio.hpp>
#include <jetcalc/variety.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jetcalc;

namespace {

constexpr std::uint64_t kSeed = 20250819;

std::mt19937_64 fresh_rng(std::uint64_t salt) { return std::mt19937_64(kSeed ^ salt); }

Rational rand_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return rat(num(rng), den(rng));
}

Polynomial rand_poly(std::mt19937_64& rng, int n, int max_degree, int terms,
                     const VarNames& names) {
    std::uniform_int_distribution<int> exp(0, max_degree);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = Monomial::one(n);
        int budget = max_degree;
        for (int v = 0; v < n; ++v) {
            std::uniform_int_distribution<int> pick(0, budget);
            m.exps[v] = pick(rng);
            budget -= m.exps[v];
        }
        ts.push_back({m, rand_rat(rng)});
    }
    return Polynomial::from_terms(n, ts, names);
}

Polynomial rand_homogeneous(std::mt19937_64& rng, int n, int degree, int terms,
                            const VarNames& names) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = Monomial::one(n);
        int left = degree;
        for (int v = 0; v + 1 < n; ++v) {
            std::uniform_int_distribution<int> pick(0, left);
            m.exps[v] = pick(rng);
            left -= m.exps[v];
        }
        m.exps[n - 1] = left;
        ts.push_back({m, rand_rat(rng)});
    }
    return Polynomial::from_terms(n, ts, names);
}

Jet rand_jet(std::mt19937_64& rng, int n, int k, bool at_origin) {
    std::vector<std::vector<Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].push_back(at_origin ? rat(0) : rand_rat(rng));
        for (int d = 1; d <= k; ++d) rows[i].push_back(rand_rat(rng));
    }
    return Jet::from_coefficients(rows);
}

// ---- criteria ----------------------------------------------------------------

// Jet prolongation is a functor compatible with truncation and with rescaling
// of the curve parameter, on 100 seeded random triples.
bool prolongation_identities(std::string& why) {
    auto rng = fresh_rng(1);
    std::uniform_int_distribution<int> pick_n(1, 3), pick_k(1, 4), pick_terms(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        int n = pick_n(rng);
        int mid = pick_n(rng);
        int k = pick_k(rng);
        std::vector<Polynomial> fc, gc;
        for (int i = 0; i < mid; ++i) fc.push_back(rand_poly(rng, n, 3, pick_terms(rng), nullptr));
        for (int i = 0; i < 2; ++i) gc.push_back(rand_poly(rng, mid, 3, pick_terms(rng), nullptr));
        PolyMap f(n, fc), g(mid, gc);
        Jet j = rand_jet(rng, n, k, false);
        if (prolong(compose(g, f), j) != prolong(g, prolong(f, j))) {
            why = "functoriality failed at trial " + std::to_string(trial);
            return false;
        }
        std::uniform_int_distribution<int> pick_l(0, k);
        int l = pick_l(rng);
        if (truncate(prolong(f, j), l) != prolong(f, truncate(j, l))) {
            why = "truncation compatibility failed at trial " + std::to_string(trial);
            return false;
        }
        Rational lambda = rat(2 + trial % 3);
        if (prolong(f, scale_jet(j, lambda)) != scale_jet(prolong(f, j), lambda)) {
            why = "parameter rescaling failed at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// The image dimension of the identity's coefficient map counts all k*n jet
// coefficients, for n in {1,2,3} and k in {1..4}.
bool identity_dimension_count(std::string& why) {
    SampleParams params{kSeed, 1000, 5};
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            std::vector<Rational> base(n, rat(0));
            int dim = image_dimension(coefficient_map(PolyMap::identity(n), k, base), params);
            if (dim != k * n) {
                why = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " gave " +
                      std::to_string(dim);
                return false;
            }
        }
    return true;
}

// A degree-s homogeneous map sends t * j2 to t^s * (the prolongation of j2),
// exactly, for 25 seeded random homogeneous maps.
bool homogeneous_factorization(std::string& why) {
    auto rng = fresh_rng(3);
    std::uniform_int_distribution<int> pick_n(1, 3), pick_s(1, 3), pick_k(2, 5),
        pick_terms(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = pick_n(rng);
        int s = pick_s(rng);
        int k = std::max(pick_k(rng), s);
        std::vector<Polynomial> coords;
        for (int i = 0; i < 2; ++i)
            coords.push_back(rand_homogeneous(rng, n, s, pick_terms(rng), nullptr));
        PolyMap phi(n, coords);
        Jet j = rand_jet(rng, n, k, true); // vanishes at zero
        Jet j2 = t_divide(j, 1);
        Jet lhs = prolong(phi, j);
        Jet rhs = t_multiply(prolong(phi, truncate(j2, k - s)), s);
        if (lhs != rhs) {
            why = "trial " + std::to_string(trial) + ": prolongation does not factor";
            return false;
        }
    }
    return true;
}

// The Jacobian vanishing order is positive exactly on singular differentials,
// superadditive under composition on 50 seeded random pairs, and counts
// iterations of (x, x*y) exactly.
bool jacobian_order_suite(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto rng = fresh_rng(4);
    std::uniform_int_distribution<int> pick_terms(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Polynomial> fc, gc;
        for (int i = 0; i < 2; ++i) {
            fc.push_back(rand_poly(rng, 2, 3, pick_terms(rng), n2));
            gc.push_back(rand_poly(rng, 2, 3, pick_terms(rng), n2));
        }
        PolyMap f(2, fc, n2), g(2, gc, n2);
        std::vector<Rational> v = {rand_rat(rng), rand_rat(rng)};
        JdValue inner = jacobian_multiplicity(f, v);
        JdValue outer = jacobian_multiplicity(g, f.eval(v));
        JdValue total = jacobian_multiplicity(compose(g, f), v);
        if (inner.infinite || outer.infinite) {
            if (!total.infinite) {
                why = "composite order finite over an infinite factor, trial " +
                      std::to_string(trial);
                return false;
            }
        } else if (!total.infinite && total.order < inner.order + outer.order) {
            why = "superadditivity failed at trial " + std::to_string(trial);
            return false;
        }
        // positivity matches singularity of the differential
        QMatrix d = QMatrix::zero(2, 2);
        auto rows = jacobian(f);
        for (int i = 0; i < 2; ++i)
            for (int c = 0; c < 2; ++c) d.at(i, c) = rows[i][c].eval(v);
        bool singular = exact_rank(d) < 2;
        if (inner.infinite != (jacobian_det(f).is_zero()) ||
            (!inner.infinite && (inner.order > 0) != singular)) {
            why = "positivity mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    PolyMap shear(2, {Polynomial::variable(2, 0, n2),
                      Polynomial::variable(2, 0, n2) * Polynomial::variable(2, 1, n2)},
                  n2);
    for (int s = 1; s <= 5; ++s) {
        JdValue jd = jacobian_multiplicity(iterate(shear, s), {rat(0), rat(0)});
        if (jd.infinite || jd.order != s) {
            why = "iterate s=" + std::to_string(s) + " gave order " + std::to_string(jd.order);
            return false;
        }
    }
    return true;
}

// Multiplicity strata of plane-curve jet schemes stay within the ceiling
// (k-m+1) * dim + min(m-1, k-m); on the cusp the (2,2) stratum attains it
// with dimension 1 and the (2,1) stratum is empty.
bool stratum_bounds(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto P = [&](const char* s) { return parse_polynomial(s, n2); };
    struct Curve {
        const char* label;
        const char* equation;
    };
    for (const Curve curve : {Curve{"cusp", "y^2 - x^3"}, Curve{"node", "y^2 - x^2 - x^3"},
                              Curve{"tacnode", "y^2 - x^4"}}) {
        AffineVariety x(Ideal(2, {P(curve.equation)}, n2), {rat(0), rat(0)});
        for (int k = 1; k <= 4; ++k)
            for (int m = 1; m <= k; ++m) {
                StratumResult res = stratum_dimension(x, k, m, k + 4);
                int ceiling = (k - m + 1) * 1 + std::min(m - 1, k - m);
                if (res.dimension > ceiling) {
                    why = std::string(curve.label) + " k=" + std::to_string(k) +
                          " m=" + std::to_string(m) + ": dim " + std::to_string(res.dimension) +
                          " exceeds " + std::to_string(ceiling);
                    return false;
                }
            }
    }
    AffineVariety cusp(Ideal(2, {P("y^2 - x^3")}, n2), {rat(0), rat(0)});
    StratumResult attained = stratum_dimension(cusp, 2, 2, 6);
    if (attained.dimension != 1) {
        why = "cusp (2,2) stratum has dimension " + std::to_string(attained.dimension);
        return false;
    }
    StratumResult empty = stratum_dimension(cusp, 2, 1, 6);
    if (empty.dimension != -1) {
        why = "cusp (2,1) stratum is not empty";
        return false;
    }
    return true;
}

// Liftable jets point into the tangent cone, and their blow-up transfers
// satisfy the strict-transform equations: checked on cusp and node families.
bool cone_and_transform_containment(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto P = [&](const char* s) { return parse_polynomial(s, n2); };
    struct Fixture {
        const char* label;
        const char* equation;
        std::vector<std::vector<Rational>> jet_rows;
    };
    std::vector<Fixture> fixtures = {
        {"cusp", "y^2 - x^3",
         {{rat(0), rat(0), rat(1), rat(0), rat(0)}, {rat(0), rat(0), rat(0), rat(1), rat(0)}}},
        {"node", "y^2 - x^2 - x^3",
         {{rat(0), rat(1), rat(0), rat(0), rat(0)},
          {rat(0), rat(1), rat(1, 2), rat(-1, 8), rat(1, 16)}}},
    };
    for (const Fixture& fx : fixtures) {
        Polynomial h = P(fx.equation);
        AffineVariety x(Ideal(2, {h}, n2), {rat(0), rat(0)});
        Jet j = Jet::from_coefficients(fx.jet_rows);
        if (!jet_scheme_member(x, j)) {
            why = std::string(fx.label) + ": fixture jet is not on the scheme";
            return false;
        }
        // direction of the jet lies on the tangent cone
        auto m = multiplicity(j);
        ConeIdeal cone = tangent_cone(x);
        std::vector<Rational> direction;
        for (const auto& c : j.coords) direction.push_back(c.coeff[*m]);
        for (const auto& g : cone.ideal.gens)
            if (g.eval(direction) != 0) {
                why = std::string(fx.label) + ": direction misses the tangent cone";
                return false;
            }
        // the transferred jet satisfies the strict transform in its chart
        for (int l = 1; l <= j.order() - *m; ++l) {
            ThetaResult transfer = theta(j, l);
            StrictTransformResult st = strict_transform(h, transfer.chart);
            Jet moved = transfer.image;
            // evaluate the transform along the image jet: compose as a 1-coordinate map
            PolyMap eval_map(2, {st.transform}, transfer.chart.substitution.source_names);
            Jet value = prolong(eval_map, moved);
            for (int d = 0; d <= value.order(); ++d)
                if (value.coords[0].coeff[d] != 0) {
                    why = std::string(fx.label) + " l=" + std::to_string(l) +
                          ": strict transform does not vanish";
                    return false;
                }
        }
    }
    return true;
}

// Chart transfer commutes with prolongation: push the jet through the map and
// transfer, against transfer and the induced chart map, on fixtures and 10
// seeded random homogeneous maps.
bool chart_transfer_compatibility(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto P = [&](const char* s) { return parse_polynomial(s, n2); };
    Jet c23 = Jet::from_coefficients({{rat(0), rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)},
                                      {rat(0), rat(0), rat(0), rat(1), rat(0), rat(0), rat(0)}});

    auto check_one = [&](const PolyMap& phi, const Jet& j, const char* label) -> bool {
        Jet pushed = prolong(phi, j);
        auto jm = multiplicity(j);
        auto pm = multiplicity(pushed);
        if (!jm || !pm) return true; // nothing to transfer
        int l = j.order() - *jm;
        int lp = pushed.order() - *pm;
        int common = std::min(l, lp);
        if (common < 0) return true;
        ThetaResult source = theta(j, common);
        ThetaResult target = theta(pushed, common);
        RationalMap psi;
        try {
            psi = induced_chart_map(phi, source.chart, target.chart);
        } catch (const DomainError&) {
            return true; // the map does not reach this chart pair
        }
        if (!regular_at(psi, source.point)) return true;
        Jet via_chart = prolong_rational(psi, source.image);
        if (via_chart != target.image) {
            why = std::string(label) + ": chart transfer disagrees";
            return false;
        }
        return true;
    };

    if (!check_one(PolyMap(2, {P("x"), P("x*y")}, n2), c23, "shear fixture")) return false;
    if (!check_one(PolyMap(2, {P("x^2"), P("y^2")}, n2), c23, "square fixture")) return false;

    auto rng = fresh_rng(7);
    std::uniform_int_distribution<int> pick_s(1, 2), pick_terms(1, 2), pick_k(3, 6);
    int checked = 0;
    int attempts = 0;
    while (checked < 10 && attempts < 400) {
        ++attempts;
        int s = pick_s(rng);
        std::vector<Polynomial> coords;
        for (int i = 0; i < 2; ++i)
            coords.push_back(rand_homogeneous(rng, 2, s, pick_terms(rng), n2));
        PolyMap phi(2, coords, n2);
        Jet j = rand_jet(rng, 2, pick_k(rng), true);
        Jet pushed = prolong(phi, j);
        if (pushed.is_zero() || !multiplicity(j) || !multiplicity(pushed)) continue;
        if (!check_one(phi, j, "random homogeneous")) return false;
        ++checked;
    }
    if (checked < 10) {
        why = "only " + std::to_string(checked) + " usable random cases";
        return false;
    }
    return true;
}

// Maps with a positive-dimensional fiber branch have a positive cone kernel at
// the origin; local isomorphisms have kernel zero.
bool cone_kernel_separation(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto n3 = make_names({"x", "y", "z"});
    auto P2 = [&](const char* s) { return parse_polynomial(s, n2); };
    auto P3 = [&](const char* s) { return parse_polynomial(s, n3); };
    AffineVariety plane(Ideal(2, {}, n2), {rat(0), rat(0)});
    AffineVariety space(Ideal(3, {}, n3), {rat(0), rat(0), rat(0)});

    struct Case {
        PolyMap map;
        const AffineVariety* domain;
        const char* label;
    };
    std::vector<Case> contracting = {
        {PolyMap(2, {P2("x"), P2("x*y")}, n2), &plane, "(x, x*y)"},
        {PolyMap(2, {P2("x"), P2("x*y^2")}, n2), &plane, "(x, x*y^2)"},
        {PolyMap(2, {P2("x^2"), P2("x*y")}, n2), &plane, "(x^2, x*y)"},
        {PolyMap(2, {P2("x"), P2("x^2*y")}, n2), &plane, "(x, x^2*y)"},
        {PolyMap(3, {P3("x"), P3("x*y"), P3("z")}, n3), &space, "(x, x*y, z)"},
        {PolyMap(3, {P3("x"), P3("x*y"), P3("x*z")}, n3), &space, "(x, x*y, x*z)"},
    };
    for (const Case& c : contracting)
        if (cone_kernel_dimension(c.map, *c.domain) < 1) {
            why = std::string(c.label) + " reported an embedding";
            return false;
        }
    std::vector<Case> immersive = {
        {PolyMap::identity(2, n2), &plane, "identity"},
        {PolyMap(2, {P2("x + y^2"), P2("y")}, n2), &plane, "(x + y^2, y)"},
        {PolyMap(2, {P2("2*x + y"), P2("x - y")}, n2), &plane, "linear"},
        {PolyMap(2, {P2("x"), P2("y + x^3")}, n2), &plane, "(x, y + x^3)"},
        {PolyMap(3, {P3("x + y*z"), P3("y"), P3("z")}, n3), &space, "(x + y*z, y, z)"},
    };
    for (const Case& c : immersive)
        if (cone_kernel_dimension(c.map, *c.domain) != 0) {
            why = std::string(c.label) + " reported a contraction";
            return false;
        }
    return true;
}

// End to end: the projection counterexample is fully certified.
bool counterexample_analysis(std::string& why) {
    auto n3 = make_names({"x", "y", "z"});
    auto n2 = make_names({"x", "y"});
    auto P3 = [&](const char* s) { return parse_polynomial(s, n3); };
    auto P2 = [&](const char* s) { return parse_polynomial(s, n2); };
    EndoInstance inst;
    inst.x = AffineVariety(Ideal(3, {P3("x*z - 1")}, n3), {rat(1), rat(0), rat(1)});
    inst.y = AffineVariety(Ideal(2, {}, n2), {rat(1), rat(0)});
    inst.rho = PolyMap(3, {P3("x"), P3("y")}, n3);
    inst.f = PolyMap(3, {P3("x"), P3("x*y"), P3("z")}, n3);
    inst.g = PolyMap(2, {P2("x"), P2("x*y")}, n2);
    inst.s_max = 2;
    inst.jet_order = 2;
    AnalysisReport report = analyze(inst, {}, SampleParams{kSeed, 1000, 5});
    if (!report.errors.empty()) {
        why = "analysis errors: " + report.errors.front();
        return false;
    }
    if (!report.commutativity) {
        why = "commutativity not certified";
        return false;
    }
    if (report.divisors.size() != 1) {
        why = "expected one divisor, got " + std::to_string(report.divisors.size());
        return false;
    }
    const DivisorReport& d = report.divisors[0];
    if (poly_str(d.candidate.ideal.gens[0]) != "x" || !d.codimension_one) {
        why = "candidate is not the coordinate hyperplane";
        return false;
    }
    if (d.image_dimension != 0 || !d.exceptional) {
        why = "image dimension " + std::to_string(d.image_dimension);
        return false;
    }
    if (!d.invariant) {
        why = "invariance not certified";
        return false;
    }
    if (!d.preimage_empty.has_value() || !*d.preimage_empty) {
        why = "preimage emptiness not certified";
        return false;
    }
    return true;
}

// The dimension table drops to k*(n-1) for the flat shear at the origin and
// stays at k*n for an affine automorphism.
bool obstruction_signature(std::string& why) {
    auto n2 = make_names({"x", "y"});
    auto P = [&](const char* s) { return parse_polynomial(s, n2); };
    EndoInstance flat;
    flat.x = AffineVariety(Ideal(2, {}, n2), {rat(0), rat(0)});
    flat.y = flat.x;
    flat.rho = PolyMap::identity(2, n2);
    flat.f = PolyMap(2, {P("x"), P("x*y")}, n2);
    flat.g = flat.f;
    SampleParams params{kSeed, 1000, 5};
    ObstructionRow first = obstruction_compare(flat, {rat(0), rat(0)}, 1, 2, {}, params);
    ObstructionRow second = obstruction_compare(flat, {rat(0), rat(0)}, 2, 2, {}, params);
    if (first.dim_f != 3 || first.dim_g != 3) {
        why = "s=1 rank " + std::to_string(first.dim_g) + ", expected 3";
        return false;
    }
    if (second.dim_f != 2 || second.dim_g != 2) {
        why = "s=2 rank " + std::to_string(second.dim_g) + ", expected 2 = k*(n-1)";
        return false;
    }
    EndoInstance affine = flat;
    affine.f = PolyMap(2, {P("x + 2*y"), P("x - y")}, n2);
    affine.g = affine.f;
    for (int s = 1; s <= 2; ++s)
        for (int k = 1; k <= 2; ++k) {
            ObstructionRow row = obstruction_compare(affine, {rat(0), rat(0)}, s, k, {}, params);
            if (row.dim_f != 2 * k || row.dim_g != 2 * k) {
                why = "affine automorphism s=" + std::to_string(s) + " k=" + std::to_string(k) +
                      " rank " + std::to_string(row.dim_g);
                return false;
            }
        }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s; // wall-clock ceiling; exceeding it fails the criterion
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"prolongation-functoriality-and-equivariance", 60, prolongation_identities},
        {"identity-coefficient-dimension-count", 10, identity_dimension_count},
        {"homogeneous-prolongation-factorization", 30, homogeneous_factorization},
        {"jacobian-vanishing-order-suite", 30, jacobian_order_suite},
        {"multiplicity-stratum-dimension-bounds", 300, stratum_bounds},
        {"lifted-jet-cone-and-transform-containment", 60, cone_and_transform_containment},
        {"chart-transfer-compatibility", 60, chart_transfer_compatibility},
        {"contracted-fiber-cone-kernel", 30, cone_kernel_separation},
        {"projection-counterexample-analysis", 30, counterexample_analysis},
        {"obstruction-dimension-table", 60, obstruction_signature},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const Error& e) {
            why = e.what();
        } catch (const std::exception& e) {
            why = e.what();
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        if (ok && elapsed.count() > c.budget_s) {
            ok = false;
            why = "exceeded the " + std::to_string(static_cast<int>(c.budget_s)) + "s budget";
        }
        std::printf("%s  %-45s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.name, elapsed.count(),
                    why.empty() ? "" : "  ", why.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
