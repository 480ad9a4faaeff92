#pragma once

#include "jetcalc/coefficient_map.hpp"
#include "jetcalc/groebner.hpp"
#include "jetcalc/jet.hpp"

#include <optional>
#include <vector>

namespace jetcalc {

// Affine variety with a marked rational point. Every generator must vanish at
// the point, which also certifies the ideal is proper. An empty generator
// list is the ambient space.
struct AffineVariety {
    Ideal ideal;
    std::vector<Rational> base_point;

    AffineVariety() = default;
    AffineVariety(Ideal ideal_, std::vector<Rational> base_point_);
    int ambient_arity() const { return ideal.arity; }
};

int variety_dimension(const AffineVariety& x, const Limits& limits = {});

// Every generator vanishes on the jet modulo t^{order+1} (constant term
// included, so the jet's own base must lie on the variety).
bool jet_scheme_member(const AffineVariety& x, const Jet& j);

// Defining ideal of the order-k jet scheme at the base point, in the n*k
// coefficient variables of coefficient_names (constant terms pinned).
Ideal jet_scheme_ideal(const AffineVariety& x, int k);

struct LiftResult {
    enum class Status { Lifted, Obstructed, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<Jet> witness; // Lifted: an order-K member truncating to the input
    int obstruction_order = -1; // Obstructed: first order with no extension at all
};

// Decides whether j extends to an order-K jet on x. Obstructed is certified
// (the extension equations contain 1, over any extension field); Lifted is
// certified by the witness; Inconclusive means the solver budget ran out
// before either certificate appeared. Never wrong, but not always decisive.
LiftResult lift_jet(const AffineVariety& x, const Jet& j, int big_k,
                    const LiftOptions& options = {});

// Ideal of initial forms at the base point. Generators are homogeneous in the
// ambient variables (base point translated to the origin). Possibly
// non-radical; that is intentional.
struct ConeIdeal {
    Ideal ideal;
};

ConeIdeal tangent_cone(const AffineVariety& x, const Limits& limits = {});

// dim V(cone ideal + linear forms of the differential of h at the base
// point). Zero exactly when the differential embeds the cone.
int cone_kernel_dimension(const PolyMap& h, const AffineVariety& y, const Limits& limits = {});

struct StratumResult {
    int dimension = -1; // -1 when the stratum is empty
    int buffer_order = 0;
};

// Dimension of the locus of order-k jet-scheme members of exact multiplicity
// m that extend to order buffer_k members, measured in the order-k coefficient
// space. Exact multiplicity is enforced per leading coordinate by a
// localization variable, one branch per coordinate, maximum over branches.
StratumResult stratum_dimension(const AffineVariety& x, int k, int m, int buffer_k,
                                const Limits& limits = {});

} // namespace jetcalc
