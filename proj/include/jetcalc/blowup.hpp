#pragma once

#include <vector>

#include <jetcalc/jet.hpp>
#include <jetcalc/polymap.hpp>

namespace jetcalc {

// One standard chart of the blow-up of affine space at the origin. In chart
// `index` (1-based) the substitution sends chart coordinates to ambient ones
// by scaling every other coordinate with the chart variable. The exceptional
// divisor is the vanishing locus of the chart variable.
struct BlowupChart {
    int arity = 0;
    int index = 1;
    PolyMap substitution; // chart coordinates -> ambient coordinates
};

// `names` are the ambient variable names; chart variables get a "_t" suffix.
BlowupChart blowup_chart(int arity, int index, VarNames names = nullptr);

// h composed with the chart substitution factors exactly as
// chart_var^power * transform with the chart variable not dividing transform.
struct StrictTransformResult {
    int power = 0;
    Polynomial transform;
    Polynomial total; // h composed with the substitution, unfactored
};

// Requires h nonzero and vanishing at the origin (so power >= 1).
StrictTransformResult strict_transform(const Polynomial& h, const BlowupChart& chart);

// Transfer of a jet through the blow-up: pick the chart of the smallest
// coordinate index attaining the minimal t-order m, keep that coordinate, and
// divide the others by it (truncated series division). The image is an l-jet
// based at `point` on the exceptional divisor; l = 0 yields just the point.
struct ThetaResult {
    BlowupChart chart;
    std::vector<Rational> point;
    Jet image;
};

// Requires j nonzero and based at the origin, and 0 <= l <= j.order() - m.
ThetaResult theta(const Jet& j, int l);

// One stage of an iterated transfer: the chart index taken and the chart
// point that was translated back to the origin before the next blow-up.
struct ChartStep {
    int index = 0;
    std::vector<Rational> translation;
};

struct ThetaChain {
    std::vector<ChartStep> steps;
    Jet final_jet; // re-rooted at the origin; order shrinks by m each stage
};

// Runs at most `stages` transfers at maximal trustworthy order, re-rooting
// each image at the origin; stops early once the jet is zero or order 0.
ThetaChain theta_chain(const Jet& j, int stages);

// Coordinatewise numerator/denominator presentation of a map between charts.
// Denominators are nonzero; common monomial factors are cancelled.
struct RationalMap {
    int source_arity = 0;
    VarNames source_names;
    std::vector<Polynomial> num;
    std::vector<Polynomial> den;

    int target_arity() const { return static_cast<int>(num.size()); }
};

// The map induced between blow-up charts by an origin-preserving morphism:
// compose with the source substitution, then divide through by the target
// chart coordinate. Fails if that coordinate pulls back to the zero
// polynomial. `target.arity` must match the coordinate count of phi.
RationalMap induced_chart_map(const PolyMap& phi, const BlowupChart& source,
                              const BlowupChart& target);

// True when every denominator is nonzero at the point.
bool regular_at(const RationalMap& m, const std::vector<Rational>& point);

// Composes the rational map with a jet: every denominator must be a unit
// series at the jet's base point.
Jet prolong_rational(const RationalMap& m, const Jet& j);

} // namespace jetcalc
