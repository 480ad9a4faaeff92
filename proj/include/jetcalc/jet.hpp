#pragma once

#include "jetcalc/polymap.hpp"
#include "jetcalc/series.hpp"

#include <optional>
#include <vector>

namespace jetcalc {

// Order-k jet in C^n: one truncated series per coordinate, all of one order.
// The base point is the vector of constant terms.
struct Jet {
    std::vector<Series<Rational>> coords;

    Jet() = default;
    explicit Jet(std::vector<Series<Rational>> coords_);
    static Jet zero(int arity, int order);
    // rows[i] lists the coefficients of coordinate i, degree 0 first
    static Jet from_coefficients(const std::vector<std::vector<Rational>>& rows);

    int arity() const { return static_cast<int>(coords.size()); }
    int order() const { return coords.empty() ? 0 : coords[0].order; }
    std::vector<Rational> base_point() const;
    bool is_zero() const;
    bool based_at_origin() const;

    bool operator==(const Jet&) const = default;
};

// [j]_l, the order-l truncation; 0 <= l <= order.
Jet truncate(const Jet& j, int l);

// phi^(k) j = phi composed with j, kept to the jet's order. The source arity
// of phi must match the jet's arity.
Jet prolong(const PolyMap& phi, const Jet& j);

// Minimal t-order over the coordinates. Defined for jets based at the origin;
// the zero jet has none.
std::optional<int> multiplicity(const Jet& j);

// j(lambda t); lambda must be nonzero.
Jet scale_jet(const Jet& j, const Rational& lambda);

// t^s j, raising the order by s; and j / t^s for jets divisible by t^s,
// lowering it. Together they express jets that factor through a power of t.
Jet t_multiply(const Jet& j, int s);
Jet t_divide(const Jet& j, int s);

} // namespace jetcalc
