#include "jetcalc/blowup.hpp"

#include "jetcalc/errors.hpp"

#include <utility>

namespace jetcalc {

BlowupChart blowup_chart(int arity, int index, VarNames names) {
    if (arity <= 0) throw DomainError("blowup: arity must be positive");
    if (index < 1 || index > arity) throw DomainError("blowup: chart index out of range");
    if (!names) names = default_names(arity);

    std::vector<std::string> chart;
    chart.reserve(names->size());
    for (const auto& n : *names) chart.push_back(n + "_t");
    VarNames chart_names = make_names(std::move(chart));

    const int i0 = index - 1;
    std::vector<Polynomial> coords;
    coords.reserve(arity);
    for (int r = 0; r < arity; ++r) {
        Polynomial v = Polynomial::variable(arity, r, chart_names);
        coords.push_back(r == i0 ? v : v * Polynomial::variable(arity, i0, chart_names));
    }
    return BlowupChart{arity, index, PolyMap(arity, std::move(coords), chart_names)};
}

StrictTransformResult strict_transform(const Polynomial& h, const BlowupChart& chart) {
    if (h.arity() != chart.arity) throw ArityError("strict_transform: arity mismatch");
    if (h.is_zero()) throw DomainError("strict_transform: zero polynomial");
    if (h.constant_coefficient() != 0)
        throw DomainError("strict_transform: polynomial must vanish at the origin");

    Polynomial total = h.substitute(chart.substitution.coords);
    const int i0 = chart.index - 1;
    const int s = monomial_content(total).exps[i0];

    Monomial factor = Monomial::one(chart.arity);
    factor.exps[i0] = s;
    return StrictTransformResult{s, divide_by_monomial(total, factor), std::move(total)};
}

ThetaResult theta(const Jet& j, int l) {
    if (!j.based_at_origin()) throw DomainError("theta: jet must be based at the origin");
    std::optional<int> m = multiplicity(j);
    if (!m) throw DomainError("theta: zero jet has no direction");
    if (l < 0 || l > j.order() - *m) throw DomainError("theta: image order out of range");

    const int n = j.arity();
    int q = 0;
    while (j.coords[q].t_order() != *m) ++q;

    Series<Rational> unit = series_shift_down(j.coords[q], *m);
    std::vector<Series<Rational>> coords;
    coords.reserve(n);
    for (int i = 0; i < n; ++i) {
        Series<Rational> s = i == q
                                 ? j.coords[q]
                                 : series_divide(series_shift_down(j.coords[i], *m), unit);
        coords.push_back(series_truncate(s, l));
    }
    Jet image(std::move(coords));
    return ThetaResult{blowup_chart(n, q + 1), image.base_point(), std::move(image)};
}

ThetaChain theta_chain(const Jet& j, int stages) {
    if (stages < 0) throw DomainError("theta_chain: negative stage count");
    ThetaChain chain{{}, j};
    for (int s = 0; s < stages; ++s) {
        const Jet& cur = chain.final_jet;
        if (!multiplicity(cur)) break; // zero jet: nothing left to transfer
        ThetaResult step = theta(cur, cur.order() - *multiplicity(cur));

        std::vector<Series<Rational>> rerooted = step.image.coords;
        for (std::size_t i = 0; i < rerooted.size(); ++i)
            rerooted[i].coeff[0] -= step.point[i];
        chain.steps.push_back(ChartStep{step.chart.index, std::move(step.point)});
        chain.final_jet = Jet(std::move(rerooted));
        if (chain.final_jet.order() == 0) break;
    }
    return chain;
}

RationalMap induced_chart_map(const PolyMap& phi, const BlowupChart& source,
                              const BlowupChart& target) {
    if (phi.source_arity != source.arity)
        throw ArityError("induced_chart_map: source chart arity mismatch");
    if (phi.target_arity() != target.arity)
        throw ArityError("induced_chart_map: target chart arity mismatch");
    if (!phi.fixes_origin())
        throw DomainError("induced_chart_map: map must fix the origin");

    PolyMap comp = compose(phi, source.substitution);
    const int i0 = target.index - 1;
    const Polynomial& lead = comp.coords[i0];
    if (lead.is_zero())
        throw DomainError("induced_chart_map: target chart coordinate pulls back to zero");

    RationalMap m;
    m.source_arity = source.arity;
    m.source_names = source.substitution.source_names;
    Polynomial one = Polynomial::constant(source.arity, rat(1), m.source_names);
    for (int r = 0; r < phi.target_arity(); ++r) {
        if (r == i0) {
            m.num.push_back(lead);
            m.den.push_back(one);
        } else if (comp.coords[r].is_zero()) {
            m.num.push_back(comp.coords[r]);
            m.den.push_back(one);
        } else {
            Monomial g = gcd(monomial_content(comp.coords[r]), monomial_content(lead));
            m.num.push_back(divide_by_monomial(comp.coords[r], g));
            m.den.push_back(divide_by_monomial(lead, g));
        }
    }
    return m;
}

bool regular_at(const RationalMap& m, const std::vector<Rational>& point) {
    for (const auto& d : m.den)
        if (d.eval(point) == 0) return false;
    return true;
}

Jet prolong_rational(const RationalMap& m, const Jet& j) {
    if (j.arity() != m.source_arity) throw ArityError("prolong_rational: arity mismatch");
    std::vector<Series<Rational>> coords;
    coords.reserve(m.num.size());
    for (std::size_t i = 0; i < m.num.size(); ++i) {
        Series<Rational> d = series_compose(m.den[i], j.coords);
        if (d.coeff[0] == 0)
            throw DomainError("prolong_rational: map not regular at the jet's base point");
        coords.push_back(series_divide(series_compose(m.num[i], j.coords), d));
    }
    return Jet(std::move(coords));
}

} // namespace jetcalc
