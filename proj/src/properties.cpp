#include "jetcalc/properties.hpp"

#include "jetcalc/analysis.hpp"
#include "jetcalc/errors.hpp"
#include "jetcalc/linalg.hpp"
#include "jetcalc/textio.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace jetcalc {

namespace {

// ---- seeded generators ------------------------------------------------

Rational rand_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return rat(num(rng), den(rng));
}

Monomial rand_monomial(std::mt19937_64& rng, int n, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    Monomial m = Monomial::one(n);
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int i = 0; i < d; ++i) ++m.exps[var(rng)];
    return m;
}

Polynomial rand_polynomial(std::mt19937_64& rng, int n, int max_degree, int terms,
                           bool fix_origin = false) {
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m = rand_monomial(rng, n, max_degree);
        if (fix_origin && m.is_one()) continue;
        Rational c = rand_rational(rng);
        if (c == 0) continue;
        ts.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(n, std::move(ts));
}

Polynomial rand_homogeneous(std::mt19937_64& rng, int n, int degree, int terms) {
    std::vector<Term> ts;
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int i = 0; i < terms; ++i) {
        Monomial m = Monomial::one(n);
        for (int d = 0; d < degree; ++d) ++m.exps[var(rng)];
        Rational c = rand_rational(rng);
        if (c == 0) continue;
        ts.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(n, std::move(ts));
}

PolyMap rand_map(std::mt19937_64& rng, int n, int max_degree, int terms,
                 bool fix_origin = true) {
    std::vector<Polynomial> coords;
    for (int i = 0; i < n; ++i)
        coords.push_back(rand_polynomial(rng, n, max_degree, terms, fix_origin));
    return PolyMap(n, std::move(coords));
}

// degree-wise homogeneous coordinates, so jet multiplicity scales by `degree`
PolyMap rand_homogeneous_map(std::mt19937_64& rng, int n, int degree, int terms) {
    std::vector<Polynomial> coords;
    for (int i = 0; i < n; ++i) coords.push_back(rand_homogeneous(rng, n, degree, terms));
    return PolyMap(n, std::move(coords));
}

PolyMap rand_linear_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        PolyMap m = rand_homogeneous_map(rng, n, 1, n + 1);
        bool ok = true;
        for (const auto& c : m.coords) ok = ok && !c.is_zero();
        if (!ok) continue;
        if (!jacobian_det(m).is_zero()) return m;
    }
}

Jet rand_jet(std::mt19937_64& rng, int n, int k, bool origin = true) {
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(k + 1));
    for (auto& row : rows) {
        row[0] = origin ? rat(0) : rand_rational(rng);
        for (int d = 1; d <= k; ++d) row[d] = rand_rational(rng);
    }
    return Jet::from_coefficients(rows);
}

// ---- harness -----------------------------------------------------------

struct Harness {
    std::uint64_t seed;
    int cases;
    std::vector<PropertyResult> results;

    // body returns an empty string on success, a counterexample description
    // on failure; it sees a per-case rng
    void prop(const std::string& name,
              const std::function<std::string(std::mt19937_64&, int)>& body) {
        PropertyResult r;
        r.name = name;
        r.pass = true;
        std::uint64_t prop_seed = derive_seed(seed, std::hash<std::string>{}(name));
        for (int i = 0; i < cases; ++i) {
            std::mt19937_64 rng(derive_seed(prop_seed, static_cast<std::uint64_t>(i)));
            std::string detail;
            try {
                detail = body(rng, i);
            } catch (const Error& e) {
                detail = std::string("exception: ") + e.what();
            }
            ++r.cases;
            if (!detail.empty()) {
                r.pass = false;
                r.detail = "case " + std::to_string(i) + ": " + detail;
                break;
            }
        }
        results.push_back(std::move(r));
    }
};

std::string check(bool ok, const std::string& what) { return ok ? std::string() : what; }

// ---- algebra suite ------------------------------------------------------

void suite_algebra(Harness& h) {
    h.prop("ring-distributivity-commutativity", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 3);
        Polynomial a = rand_polynomial(rng, n, 4, 5);
        Polynomial b = rand_polynomial(rng, n, 4, 5);
        Polynomial c = rand_polynomial(rng, n, 4, 5);
        if ((a + b) * c != a * c + b * c) return std::string("distributivity failed");
        if (a * b != b * a) return std::string("commutativity failed");
        if ((a - b) + b != a) return std::string("additive inverse failed");
        return std::string();
    });

    h.prop("groebner-membership-and-normal-form", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Polynomial> gens = {rand_polynomial(rng, n, 3, 4),
                                        rand_polynomial(rng, n, 3, 4)};
        if (gens[0].is_zero() || gens[1].is_zero()) return std::string();
        Ideal ideal(n, gens);
        GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::degrevlex());
        Polynomial h1 = rand_polynomial(rng, n, 2, 3);
        Polynomial h2 = rand_polynomial(rng, n, 2, 3);
        Polynomial combo = h1 * gens[0] + h2 * gens[1];
        if (!ideal_member(combo, gb)) return std::string("combination not recognized");
        Polynomial p = rand_polynomial(rng, n, 3, 4);
        Polynomial nf = normal_form(p, gb);
        if (normal_form(nf, gb) != nf) return std::string("normal form not idempotent");
        if (!ideal_member(p - nf, gb)) return std::string("p - nf(p) not in ideal");
        return std::string();
    });

    h.prop("groebner-canonical-under-permutation", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(rand_polynomial(rng, n, 3, 3));
        GroebnerBasis a = groebner_basis(Ideal(n, gens), MonomialOrder::degrevlex());
        std::shuffle(gens.begin(), gens.end(), rng);
        for (auto& g : gens) g = g.scaled(rat(1 + static_cast<long>(rng() % 5)));
        GroebnerBasis b = groebner_basis(Ideal(n, gens), MonomialOrder::degrevlex());
        return check(a.basis == b.basis, "reduced bases differ");
    });

    h.prop("elimination-soundness", [](std::mt19937_64& rng, int) {
        int n = 3;
        std::vector<Polynomial> gens = {rand_polynomial(rng, n, 2, 3),
                                        rand_polynomial(rng, n, 2, 3)};
        Ideal ideal(n, gens);
        Ideal eliminated = eliminate(ideal, {0});
        GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::degrevlex());
        for (const auto& q : eliminated.gens) {
            // re-embed the survivor into the full ring
            std::vector<Polynomial> args;
            for (int i = 1; i < n; ++i) args.push_back(Polynomial::variable(n, i));
            Polynomial back = q.substitute(args);
            if (!ideal_member(back, gb)) return std::string("eliminated element not in ideal");
        }
        return std::string();
    });

    h.prop("dimension-monotone-under-generators", [](std::mt19937_64& rng, int) {
        int n = 3;
        std::vector<Polynomial> gens = {rand_polynomial(rng, n, 2, 3)};
        int d1 = ideal_dimension(Ideal(n, gens));
        gens.push_back(rand_polynomial(rng, n, 2, 3));
        int d2 = ideal_dimension(Ideal(n, gens));
        return check(d2 <= d1, "dimension grew when a generator was added");
    });

    h.prop("printer-parser-roundtrip", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 4);
        Polynomial p = rand_polynomial(rng, n, 5, 6);
        VarNames names = default_names(n);
        Polynomial q = parse_polynomial(poly_str(p.with_names(names)), names);
        return check(p == q, "reparse changed the polynomial");
    });
}

// ---- jets suite ----------------------------------------------------------

void suite_jets(Harness& h) {
    h.prop("prolong-functoriality", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 4);
        PolyMap f = rand_map(rng, n, 3, 3);
        PolyMap g = rand_map(rng, n, 3, 3);
        Jet j = rand_jet(rng, n, k);
        Jet lhs = prolong(compose(f, g), j);
        Jet rhs = prolong(f, prolong(g, j));
        return check(lhs == rhs, "prolong(f.g) != prolong(f) of prolong(g)");
    });

    h.prop("prolong-truncation-compatibility", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 2 + static_cast<int>(rng() % 3);
        int l = 1 + static_cast<int>(rng() % k);
        PolyMap f = rand_map(rng, n, 3, 3, false);
        Jet j = rand_jet(rng, n, k, false);
        return check(truncate(prolong(f, j), l) == prolong(f, truncate(j, l)),
                     "truncation does not commute with prolongation");
    });

    h.prop("reparametrization-equivariance", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 4);
        PolyMap f = rand_map(rng, n, 3, 3, false);
        Jet j = rand_jet(rng, n, k, false);
        Rational lam = rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
        return check(prolong(f, scale_jet(j, lam)) == scale_jet(prolong(f, j), lam),
                     "scaling t does not commute with prolongation");
    });

    h.prop("multiplicity-under-t-shift", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 3);
        Jet j = rand_jet(rng, n, k);
        auto m = multiplicity(j);
        if (!m) return std::string(); // zero jet: shifting keeps it zero
        int s = 1 + static_cast<int>(rng() % 3);
        Jet up = t_multiply(j, s);
        if (multiplicity(up) != *m + s) return std::string("t-multiplication broke multiplicity");
        if (t_divide(up, s) != j) return std::string("t-division is not inverse");
        return std::string();
    });

    h.prop("coefficient-map-matches-prolong", [](std::mt19937_64& rng, int) {
        int n = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 3);
        PolyMap f = rand_map(rng, n, 3, 3, false);
        std::vector<Rational> base(n);
        for (auto& b : base) b = rand_rational(rng, 3, 2);
        CoefficientMap cm = coefficient_map(f, k, base);

        Jet j = rand_jet(rng, n, k);
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) * k);
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(k + 1));
        for (int i = 0; i < n; ++i) {
            rows[i][0] = base[i];
            for (int d = 1; d <= k; ++d) {
                rows[i][d] = j.coords[i].coeff[d];
                coeffs[static_cast<std::size_t>(i) * k + (d - 1)] = rows[i][d];
            }
        }
        Jet based = Jet::from_coefficients(rows);
        Jet image = prolong(f, based);
        std::vector<Rational> mapped = cm.map.eval(coeffs);
        for (int i = 0; i < cm.m; ++i)
            for (int d = 1; d <= k; ++d)
                if (mapped[static_cast<std::size_t>(i) * k + (d - 1)] != image.coords[i].coeff[d])
                    return std::string("coefficient map disagrees with prolongation");
        return std::string();
    });
}

// ---- varieties suite -------------------------------------------------------

void suite_varieties(Harness& h) {
    h.prop("jet-scheme-ideal-matches-membership", [](std::mt19937_64& rng, int) {
        auto names = make_names({"x", "y"});
        Polynomial x = Polynomial::variable(2, 0, names);
        Polynomial y = Polynomial::variable(2, 1, names);
        Polynomial gen = (rng() % 2) ? y * y - x * x * x : y * y - x * x - x * x * x;
        AffineVariety v(Ideal(2, {gen}, names), {rat(0), rat(0)});
        int k = 1 + static_cast<int>(rng() % 3);
        Jet j = rand_jet(rng, 2, k);

        Ideal scheme = jet_scheme_ideal(v, k);
        std::vector<Rational> coeffs(static_cast<std::size_t>(2) * k);
        for (int i = 0; i < 2; ++i)
            for (int d = 1; d <= k; ++d)
                coeffs[static_cast<std::size_t>(i) * k + (d - 1)] = j.coords[i].coeff[d];
        bool by_ideal = true;
        for (const auto& q : scheme.gens) by_ideal = by_ideal && q.eval(coeffs) == 0;
        return check(by_ideal == jet_scheme_member(v, j),
                     "jet scheme ideal disagrees with membership");
    });

    h.prop("parametrized-jets-lift", [](std::mt19937_64& rng, int) {
        // arcs (u^2, u^3) lie on the cuspidal cubic for any u(t) with u(0)=0;
        // their truncations must lift (the parametrization is a witness)
        auto names = make_names({"x", "y"});
        Polynomial x = Polynomial::variable(2, 0, names);
        Polynomial y = Polynomial::variable(2, 1, names);
        AffineVariety cusp(Ideal(2, {y * y - x * x * x}, names), {rat(0), rat(0)});
        int k = 2 + static_cast<int>(rng() % 3);
        int big_k = k + 4;
        Series<Rational> u = Series<Rational>::zeroes(big_k, rat(0));
        u.coeff[1] = rat(1 + static_cast<long>(rng() % 3));
        for (int d = 2; d <= big_k; ++d) u.coeff[d] = rand_rational(rng, 2, 2);
        Jet arc(std::vector<Series<Rational>>{series_mul(u, u),
                                              series_mul(series_mul(u, u), u)});
        Jet j = truncate(arc, k);
        if (!jet_scheme_member(cusp, j)) return std::string("arc truncation left the variety");
        LiftOptions opt;
        opt.seed = rng();
        LiftResult lift = lift_jet(cusp, j, big_k, opt);
        if (lift.status == LiftResult::Status::Obstructed)
            return std::string("liftable jet reported obstructed");
        if (lift.status == LiftResult::Status::Lifted) {
            if (truncate(*lift.witness, k) != j) return std::string("witness truncation mismatch");
            if (!jet_scheme_member(cusp, *lift.witness))
                return std::string("witness not on the variety");
        }
        return std::string(); // inconclusive tolerated: budget ran out honestly
    });

    h.prop("tangent-cone-translation-equivariance", [](std::mt19937_64& rng, int) {
        int n = 2;
        Polynomial p = rand_polynomial(rng, n, 3, 4, true);
        if (p.is_zero()) return std::string();
        std::vector<Rational> shift = {rand_rational(rng, 2, 1), rand_rational(rng, 2, 1)};
        // variety of p through the origin vs. variety of p(x - shift) through shift
        Polynomial moved = p.translate({-shift[0], -shift[1]});
        AffineVariety at_origin(Ideal(n, {p}), std::vector<Rational>(n, rat(0)));
        AffineVariety at_shift(Ideal(n, {moved}), shift);
        ConeIdeal a = tangent_cone(at_origin);
        ConeIdeal b = tangent_cone(at_shift);
        return check(ideal_equal(a.ideal, b.ideal), "cone changed under translation");
    });

    h.prop("cone-gens-are-homogeneous-members", [](std::mt19937_64& rng, int) {
        int n = 2;
        Polynomial p = rand_polynomial(rng, n, 3, 4, true);
        if (p.is_zero()) return std::string();
        AffineVariety v(Ideal(n, {p}), std::vector<Rational>(n, rat(0)));
        ConeIdeal cone = tangent_cone(v);
        for (const auto& g : cone.ideal.gens) {
            if (g.is_zero()) return std::string("zero cone generator");
            if (g != g.homogeneous_component(g.degree()))
                return std::string("cone generator not homogeneous");
        }
        // the principal case is exactly the initial form
        if (!ideal_equal(cone.ideal, Ideal(n, {initial_form(p)})))
            return std::string("principal cone is not the initial form");
        return std::string();
    });
}

// ---- blowup suite -----------------------------------------------------------

void suite_blowup(Harness& h) {
    h.prop("strict-transform-factorization", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        Polynomial p = rand_polynomial(rng, n, 4, 5, true);
        if (p.is_zero()) return std::string();
        for (int idx = 1; idx <= n; ++idx) {
            BlowupChart chart = blowup_chart(n, idx);
            StrictTransformResult st = strict_transform(p, chart);
            Monomial f = Monomial::one(n);
            f.exps[idx - 1] = st.power;
            if (st.transform.times_term(f, rat(1)) != st.total)
                return std::string("factorization not exact in chart " + std::to_string(idx));
            Monomial probe = Monomial::one(n);
            probe.exps[idx - 1] = 1;
            if (monomial_content(st.transform).exps[idx - 1] != 0)
                return std::string("chart variable still divides the transform");
        }
        return std::string();
    });

    h.prop("theta-section-recovers-jet", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        int k = 2 + static_cast<int>(rng() % 4);
        Jet j = rand_jet(rng, n, k);
        auto m = multiplicity(j);
        if (!m || *m > k) return std::string();
        int l = k - *m;
        ThetaResult r = theta(j, l);
        Jet back = prolong(r.chart.substitution, r.image);
        return check(back == truncate(j, l), "substitution of the theta image mismatch");
    });

    h.prop("theta-chart-compatibility", [](std::mt19937_64& rng, int) {
        int n = 2;
        int k = 3 + static_cast<int>(rng() % 3);
        PolyMap phi = rand_linear_invertible(rng, n);
        Jet j = rand_jet(rng, n, k);
        auto m = multiplicity(j);
        if (!m || *m > k) return std::string();
        Jet fj = prolong(phi, j);
        auto fm = multiplicity(fj);
        if (!fm || *fm != *m) return std::string(); // multiplicity jumped: declined
        int l = k - *m;
        ThetaResult src = theta(j, l);
        ThetaResult dst = theta(fj, l);
        RationalMap psi = induced_chart_map(phi, src.chart, dst.chart);
        if (!regular_at(psi, src.point)) return std::string(); // declined: pole at the point
        Jet via_chart = prolong_rational(psi, src.image);
        return check(via_chart == dst.image, "chart map disagrees with transfer");
    });

    h.prop("theta-fiber-dimension", [](std::mt19937_64& rng, int) {
        // over a fixed image, jets of multiplicity m form an affine space of
        // dimension min(m, k-m+1): counted here by exact linear algebra
        int k = 2 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % k);
        int l = k - m;
        // fixed quotient series q (unit) and first coordinate c_m..c_k
        std::vector<Rational> q(l + 1);
        q[0] = rat(1 + static_cast<long>(rng() % 3));
        for (int d = 1; d <= l; ++d) q[d] = rand_rational(rng, 3, 2);
        std::vector<Rational> c(k + 1, rat(0));
        c[m] = rat(1 + static_cast<long>(rng() % 3));
        for (int d = m + 1; d <= k; ++d) c[d] = rand_rational(rng, 3, 2);

        // unknowns: a_m..a_k (coordinate 1), b_m..b_k (coordinate 2)
        // equations: [a]_l = [c]_l; b = a*q up to degree k
        int u = k - m + 1;
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (int d = m; d <= std::min(l, k); ++d) {
            std::vector<Rational> row(2 * u, rat(0));
            row[d - m] = rat(1);
            rows.push_back(row);
            rhs.push_back(c[d]);
        }
        for (int e = 0; e <= k - m; ++e) { // coefficient of t^{m+e} in b - a*q
            std::vector<Rational> row(2 * u, rat(0));
            row[u + e] = rat(1);
            for (int a = 0; a <= e; ++a)
                if (e - a <= l) row[a] = row[a] - q[e - a];
            rows.push_back(row);
            rhs.push_back(rat(0));
        }
        QMatrix mat = QMatrix::zero(static_cast<int>(rows.size()), 2 * u);
        for (int i = 0; i < mat.rows; ++i)
            for (int jj = 0; jj < mat.cols; ++jj) mat.at(i, jj) = rows[i][jj];
        LinearSystemSolution sol = solve_linear(mat, rhs);
        if (!sol.consistent) return std::string("fiber system inconsistent");
        int dim = static_cast<int>(sol.kernel.size());
        int expected = std::min(m, k - m + 1);
        if (dim != expected)
            return "fiber dimension " + std::to_string(dim) + " expected " +
                   std::to_string(expected) + " (k=" + std::to_string(k) +
                   ", m=" + std::to_string(m) + ")";
        return std::string();
    });
}

// ---- analysis suite ------------------------------------------------------

void suite_analysis(Harness& h) {
    h.prop("jd-superadditive-under-composition", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        PolyMap inner = rand_map(rng, n, 3, 3);
        PolyMap outer = rand_map(rng, n, 3, 3);
        std::vector<Rational> v(n, rat(0));
        JdValue ji = jacobian_multiplicity(inner, v);
        JdValue jo = jacobian_multiplicity(outer, inner.eval(v));
        JdValue jc = jacobian_multiplicity(compose(outer, inner), v);
        if (ji.infinite || jo.infinite)
            return check(jc.infinite, "composite determinant unexpectedly nonzero");
        if (jc.infinite) return std::string(); // composite degenerated further: fine
        if (jc.order < ji.order + jo.order) return std::string("superadditivity violated");
        if (jo.order == 0 && jc.order != ji.order + jo.order)
            return std::string("local embedding outer factor should give equality");
        return std::string();
    });

    h.prop("jd-detects-singular-differential", [](std::mt19937_64& rng, int) {
        int n = 2 + static_cast<int>(rng() % 2);
        PolyMap f = rand_map(rng, n, 3, 3);
        std::vector<Rational> v(n);
        for (auto& c : v) c = rand_rational(rng, 2, 1);
        JdValue jd = jacobian_multiplicity(f, v);
        QMatrix d = QMatrix::zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int jx = 0; jx < n; ++jx) d.at(i, jx) = f.coords[i].derivative(jx).eval(v);
        bool singular = exact_rank(d) < n;
        bool positive = jd.infinite || jd.order > 0;
        return check(singular == positive, "jd order disagrees with differential rank");
    });

    h.prop("jd-iteration-growth-on-contracting-map", [](std::mt19937_64&, int) {
        auto names = make_names({"x", "y"});
        Polynomial x = Polynomial::variable(2, 0, names);
        Polynomial y = Polynomial::variable(2, 1, names);
        PolyMap g(2, {x, x * y}, names);
        int prev = -1;
        for (int s = 1; s <= 5; ++s) {
            JdValue v = jacobian_multiplicity(iterate(g, s), {rat(0), rat(0)});
            if (v.infinite) return std::string("unexpected zero determinant");
            if (v.order != s) return std::string("jd of the s-th iterate is not s");
            if (v.order <= prev) return std::string("iteration growth not strict");
            prev = v.order;
        }
        return std::string();
    });

    h.prop("automorphism-table-is-constant", [](std::mt19937_64& rng, int) {
        // triangular automorphism: (x + p(y), y) with p(0) = 0
        auto names = make_names({"x", "y"});
        Polynomial x = Polynomial::variable(2, 0, names);
        Polynomial y = Polynomial::variable(2, 1, names);
        std::vector<Term> ts;
        for (int d = 1; d <= 2; ++d) {
            Monomial m = Monomial::one(2);
            m.exps[1] = d;
            ts.push_back(Term{m, rand_rational(rng, 3, 1)});
        }
        PolyMap f(2, {x + Polynomial::from_terms(2, ts, names), y}, names);
        EndoInstance inst;
        inst.x = AffineVariety(Ideal(2, {}, names), {rat(0), rat(0)});
        inst.y = inst.x;
        inst.rho = PolyMap::identity(2, names);
        inst.f = f;
        inst.g = f;
        SampleParams params{derive_seed(rng(), 1), 1000, 3};
        for (int s = 1; s <= 2; ++s)
            for (int k = 1; k <= 2; ++k) {
                ObstructionRow row =
                    obstruction_compare(inst, {rat(0), rat(0)}, s, k, {}, params);
                if (row.dim_f != 2 * k || row.dim_g != 2 * k)
                    return std::string("automorphism prolongation lost rank");
            }
        return std::string();
    });

    h.prop("report-rendering-deterministic", [](std::mt19937_64& rng, int) {
        auto names = make_names({"x", "y"});
        Polynomial x = Polynomial::variable(2, 0, names);
        Polynomial y = Polynomial::variable(2, 1, names);
        EndoInstance inst;
        inst.x = AffineVariety(Ideal(2, {}, names), {rat(0), rat(0)});
        inst.y = inst.x;
        inst.rho = PolyMap::identity(2, names);
        inst.f = PolyMap(2, {x, x * y}, names);
        inst.g = inst.f;
        inst.s_max = 1;
        inst.jet_order = 1;
        SampleParams params{rng(), 1000, 2};
        std::string a = report_str(analyze(inst, {}, params));
        std::string b = report_str(analyze(inst, {}, params));
        return check(a == b, "same seed produced different reports");
    });
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "jets", "varieties", "blowup",
                                                   "analysis"};
    return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, std::uint64_t seed, int cases) {
    if (cases < 1) throw DomainError("properties: case count must be positive");
    Harness h{seed, cases, {}};
    if (suite == "algebra")
        suite_algebra(h);
    else if (suite == "jets")
        suite_jets(h);
    else if (suite == "varieties")
        suite_varieties(h);
    else if (suite == "blowup")
        suite_blowup(h);
    else if (suite == "analysis")
        suite_analysis(h);
    else
        throw DomainError("properties: unknown suite '" + suite + "'");
    return h.results;
}

} // namespace jetcalc
