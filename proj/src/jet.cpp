#include "jetcalc/jet.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

Jet::Jet(std::vector<Series<Rational>> coords_) : coords(std::move(coords_)) {
    for (const auto& c : coords)
        if (c.order != coords[0].order)
            throw DomainError("jets: coordinate series orders disagree");
}

Jet Jet::zero(int arity, int order) {
    std::vector<Series<Rational>> cs;
    cs.reserve(arity);
    for (int i = 0; i < arity; ++i) cs.push_back(Series<Rational>::zeroes(order, Rational(0)));
    return Jet(std::move(cs));
}

Jet Jet::from_coefficients(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw DomainError("jets: jet needs at least one coordinate");
    std::vector<Series<Rational>> cs;
    cs.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.empty() || row.size() != rows[0].size())
            throw DomainError("jets: coefficient rows must share one positive length");
        Series<Rational> s;
        s.order = static_cast<int>(row.size()) - 1;
        s.coeff = row;
        cs.push_back(std::move(s));
    }
    return Jet(std::move(cs));
}

std::vector<Rational> Jet::base_point() const {
    std::vector<Rational> b;
    b.reserve(coords.size());
    for (const auto& c : coords) b.push_back(c.coeff[0]);
    return b;
}

bool Jet::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

bool Jet::based_at_origin() const {
    for (const auto& c : coords)
        if (c.coeff[0] != 0) return false;
    return true;
}

Jet truncate(const Jet& j, int l) {
    std::vector<Series<Rational>> cs;
    cs.reserve(j.coords.size());
    for (const auto& c : j.coords) cs.push_back(series_truncate(c, l));
    return Jet(std::move(cs));
}

Jet prolong(const PolyMap& phi, const Jet& j) {
    if (phi.source_arity != j.arity())
        throw ArityError("jets: map source arity does not match jet arity");
    std::vector<Series<Rational>> cs;
    cs.reserve(phi.coords.size());
    for (const auto& p : phi.coords) cs.push_back(series_compose(p, j.coords));
    return Jet(std::move(cs));
}

std::optional<int> multiplicity(const Jet& j) {
    if (!j.based_at_origin())
        throw DomainError("jets: multiplicity needs a jet based at the origin");
    int best = -1;
    for (const auto& c : j.coords) {
        int d = c.t_order();
        if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    if (best < 0) return std::nullopt;
    return best;
}

Jet scale_jet(const Jet& j, const Rational& lambda) {
    if (lambda == 0) throw DomainError("jets: scaling parameter must be nonzero");
    std::vector<Series<Rational>> cs = j.coords;
    for (auto& c : cs) {
        Rational p = 1;
        for (int d = 1; d <= c.order; ++d) {
            p *= lambda;
            c.coeff[d] *= p;
        }
    }
    return Jet(std::move(cs));
}

Jet t_multiply(const Jet& j, int s) {
    std::vector<Series<Rational>> cs;
    cs.reserve(j.coords.size());
    for (const auto& c : j.coords) cs.push_back(series_shift_up(c, s));
    return Jet(std::move(cs));
}

Jet t_divide(const Jet& j, int s) {
    std::vector<Series<Rational>> cs;
    cs.reserve(j.coords.size());
    for (const auto& c : j.coords) cs.push_back(series_shift_down(c, s));
    return Jet(std::move(cs));
}

} // namespace jetcalc
