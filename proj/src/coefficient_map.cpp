#include "jetcalc/coefficient_map.hpp"

#include "jetcalc/errors.hpp"
#include "jetcalc/linalg.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace jetcalc {

VarNames coefficient_names(const VarNames& source_names, int n, int k) {
    std::vector<std::string> ns;
    ns.reserve(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= k; ++d)
            ns.push_back(var_name(source_names, n, i) + "_" + std::to_string(d));
    return make_names(std::move(ns));
}

std::vector<Series<Polynomial>> symbolic_jet(int n, int k, const std::vector<Rational>& base,
                                             const VarNames& coeff_names) {
    if (static_cast<int>(base.size()) != n)
        throw ArityError("jets: base point arity mismatch");
    if (k < 1) throw DomainError("jets: jet order must be positive");
    const int nk = n * k;
    std::vector<Series<Polynomial>> coords;
    coords.reserve(n);
    for (int i = 0; i < n; ++i) {
        Series<Polynomial> s = Series<Polynomial>::zeroes(k, Polynomial::zero(nk, coeff_names));
        s.coeff[0] = Polynomial::constant(nk, base[i], coeff_names);
        for (int d = 1; d <= k; ++d)
            s.coeff[d] = Polynomial::variable(nk, i * k + (d - 1), coeff_names);
        coords.push_back(std::move(s));
    }
    return coords;
}

CoefficientMap coefficient_map(const PolyMap& phi, int k, const std::vector<Rational>& base) {
    if (phi.source_arity < 1 || phi.target_arity() < 1)
        throw DomainError("jets: coefficient map needs a nonempty map");
    const int n = phi.source_arity;
    const int m = phi.target_arity();
    VarNames cnames = coefficient_names(phi.source_names, n, k);
    auto sym = symbolic_jet(n, k, base, cnames);

    CoefficientMap cm;
    cm.n = n;
    cm.m = m;
    cm.k = k;
    cm.base = base;
    cm.image_base = phi.eval(base);

    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(m) * k);
    for (int i = 0; i < m; ++i) {
        Series<Polynomial> out = series_compose(phi.coords[i], sym);
        for (int d = 1; d <= k; ++d) comps.push_back(out.coeff[d]);
    }
    cm.map = PolyMap(n * k, std::move(comps), cnames);
    return cm;
}

namespace {

Rational random_value(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    return rat(dist(rng));
}

QMatrix eval_matrix(const std::vector<std::vector<Polynomial>>& rows,
                    const std::vector<Rational>& point) {
    QMatrix m = QMatrix::zero(static_cast<int>(rows.size()),
                              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j].eval(point);
    return m;
}

std::vector<std::vector<Polynomial>> gen_jacobian(const std::vector<Polynomial>& gens, int arity) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        row.reserve(arity);
        for (int j = 0; j < arity; ++j) row.push_back(g.derivative(j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Stage-wise sampler for the locus of `constraint` in coefficient coordinates.
// Jet-scheme ideals at a smooth base are affine-linear in each degree stage
// given the earlier stages, which this exploits; anything nonlinear fails the
// attempt honestly.
std::optional<std::vector<Rational>> sample_on_locus(const Ideal& constraint, int n, int k,
                                                     std::mt19937_64& rng, long bound) {
    const int nk = n * k;
    std::vector<std::optional<Rational>> assigned(nk);
    std::vector<std::vector<int>> supports;
    supports.reserve(constraint.gens.size());
    for (const auto& g : constraint.gens) {
        std::vector<int> sup;
        for (int v = 0; v < nk; ++v)
            for (const auto& t : g.terms())
                if (t.mon.exps[v] > 0) {
                    sup.push_back(v);
                    break;
                }
        supports.push_back(std::move(sup));
    }

    for (int d = 1; d <= k; ++d) {
        std::vector<int> stage;
        stage.reserve(n);
        for (int i = 0; i < n; ++i) stage.push_back(i * k + (d - 1));
        auto in_stage = [&](int v) { return std::find(stage.begin(), stage.end(), v) != stage.end(); };

        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (std::size_t gi = 0; gi < constraint.gens.size(); ++gi) {
            bool eligible = true;
            for (int v : supports[gi])
                if (!assigned[v] && !in_stage(v)) {
                    eligible = false;
                    break;
                }
            if (!eligible) continue;
            Polynomial q = partial_eval(constraint.gens[gi], assigned);
            if (q.is_zero()) continue;
            if (q.degree() == 0) return std::nullopt; // locus misses every stage choice
            if (q.degree() > 1) return std::nullopt;  // nonlinear stage, sampling declines
            std::vector<Rational> row(n, Rational(0));
            Rational c0 = rat(0);
            for (const auto& t : q.terms()) {
                if (t.mon.is_one()) {
                    c0 = t.coeff;
                    continue;
                }
                for (int i = 0; i < n; ++i)
                    if (t.mon.exps[stage[i]] == 1) row[i] = t.coeff;
            }
            rows.push_back(std::move(row));
            rhs.push_back(-c0);
        }

        std::vector<Rational> value(n, Rational(0));
        if (!rows.empty()) {
            QMatrix A = QMatrix::zero(static_cast<int>(rows.size()), n);
            for (int i = 0; i < A.rows; ++i)
                for (int j = 0; j < n; ++j) A.at(i, j) = rows[i][j];
            LinearSystemSolution sol = solve_linear(A, rhs);
            if (!sol.consistent) return std::nullopt;
            value = sol.particular;
            for (const auto& kv : sol.kernel) {
                Rational c = random_value(rng, bound);
                for (int j = 0; j < n; ++j) value[j] += c * kv[j];
            }
        } else {
            for (int j = 0; j < n; ++j) value[j] = random_value(rng, bound);
        }
        for (int i = 0; i < n; ++i) assigned[stage[i]] = value[i];
    }

    std::vector<Rational> point(nk);
    for (int v = 0; v < nk; ++v) point[v] = *assigned[v];
    for (const auto& g : constraint.gens)
        if (g.eval(point) != 0) return std::nullopt;
    return point;
}

} // namespace

int image_dimension(const CoefficientMap& cm, const SampleParams& params) {
    auto jac = jacobian(cm.map);
    int best = 0;
    for (int t = 0; t < params.trials; ++t) {
        std::mt19937_64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(t)));
        std::vector<Rational> point;
        point.reserve(cm.map.source_arity);
        for (int v = 0; v < cm.map.source_arity; ++v) point.push_back(random_value(rng, params.bound));
        best = std::max(best, exact_rank(eval_matrix(jac, point)));
    }
    return best;
}

int image_dimension(const CoefficientMap& cm, const Ideal& constraint,
                    const SampleParams& params) {
    if (constraint.arity != cm.map.source_arity)
        throw ArityError("jets: constraint ideal lives in the wrong coefficient ring");
    if (constraint.gens.empty()) return image_dimension(cm, params);

    auto jac = jacobian(cm.map);
    auto cjac = gen_jacobian(constraint.gens, constraint.arity);
    int best = -1;
    for (int t = 0; t < params.trials; ++t) {
        std::optional<std::vector<Rational>> point;
        for (int attempt = 0; attempt < 4 && !point; ++attempt) {
            std::mt19937_64 rng(
                derive_seed(params.seed, static_cast<std::uint64_t>(t) * 16 + attempt));
            point = sample_on_locus(constraint, cm.n, cm.k, rng, params.bound);
        }
        if (!point) continue;
        QMatrix c = eval_matrix(cjac, *point);
        QMatrix a = eval_matrix(jac, *point);
        QMatrix stacked = QMatrix::zero(a.rows + c.rows, a.cols);
        for (int i = 0; i < c.rows; ++i)
            for (int j = 0; j < c.cols; ++j) stacked.at(i, j) = c.at(i, j);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < a.cols; ++j) stacked.at(c.rows + i, j) = a.at(i, j);
        best = std::max(best, exact_rank(stacked) - exact_rank(c));
    }
    if (best < 0)
        throw SamplingError("jets: no rational point found on the constraint locus within the trial budget");
    return best;
}

} // namespace jetcalc
