#include <doctest.h>

#include <jetcalc/errors.hpp>
#include <jetcalc/properties.hpp>
#include <jetcalc/textio.hpp>
#include <jetcalc/variety.hpp>

using namespace jetcalc;

namespace {
VarNames xy() { return make_names({"x", "y"}); }
Polynomial P(const char* text, const VarNames& names) {
    return parse_polynomial(text, names);
}
Jet J(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> q;
    for (auto& row : rows) {
        q.emplace_back();
        for (long v : row) q.back().push_back(rat(v));
    }
    return Jet::from_coefficients(q);
}
AffineVariety cusp() {
    auto n = xy();
    return AffineVariety(Ideal(2, {P("y^2 - x^3", n)}, n), {rat(0), rat(0)});
}
AffineVariety node() {
    auto n = xy();
    return AffineVariety(Ideal(2, {P("y^2 - x^2 - x^3", n)}, n), {rat(0), rat(0)});
}
AffineVariety plane() {
    auto n = xy();
    return AffineVariety(Ideal(2, {}, n), {rat(0), rat(0)});
}
} // namespace

TEST_CASE("constructor validates the base point") {
    auto n = xy();
    CHECK_THROWS_AS(AffineVariety(Ideal(2, {P("y^2 - x^3", n)}, n), {rat(1), rat(2)}),
                    DomainError);
    CHECK_THROWS_AS(AffineVariety(Ideal(2, {P("x", n)}, n), {rat(0)}), ArityError);
    AffineVariety shifted(Ideal(2, {P("y - 1", n)}, n), {rat(5), rat(1)});
    CHECK(variety_dimension(shifted) == 1);
}

TEST_CASE("jet scheme membership fixtures") {
    CHECK(jet_scheme_member(cusp(), J({{0, 0, 1, 0}, {0, 0, 0, 1}})));   // (t^2, t^3)
    CHECK(jet_scheme_member(cusp(), J({{0, 0, 1}, {0, 0, 0}})));         // (t^2, 0) to order 2
    CHECK(jet_scheme_member(cusp(), J({{0, 0}, {0, 1}})));               // any direction at order 1
    CHECK_FALSE(jet_scheme_member(cusp(), J({{0, 0, 0}, {0, 1, 0}})));   // (0, t) fails at order 2
    CHECK(jet_scheme_member(node(), J({{0, 1, 0}, {0, 1, 0}})));         // (t, t) flat to order 2
    CHECK_FALSE(jet_scheme_member(node(), J({{0, 1, 0, 0}, {0, 1, 0, 0}}))); // fails at order 3
}

TEST_CASE("jet scheme ideal lives in the coefficient coordinates") {
    Ideal js = jet_scheme_ideal(cusp(), 2);
    CHECK(js.arity == 4);
    CHECK(*js.names == std::vector<std::string>{"x_1", "x_2", "y_1", "y_2"});
    // order-2 expansion of y^2 - x^3 on (x_1 t + x_2 t^2, y_1 t + y_2 t^2):
    // t^1: 0, t^2: y_1^2, so exactly one nonzero generator
    REQUIRE(js.gens.size() == 1);
    CHECK(poly_str(js.gens[0]) == "y_1^2");
}

TEST_CASE("lift certifies obstruction on the cusp") {
    // x = t, y = t forces 1 = 0 at order 2 over every extension field
    LiftResult r = lift_jet(cusp(), J({{0, 1}, {0, 1}}), 2);
    CHECK(r.status == LiftResult::Status::Obstructed);
    CHECK(r.obstruction_order == 2);
}

TEST_CASE("lift finds exact witnesses on the cusp") {
    Jet j23 = J({{0, 0, 1, 0}, {0, 0, 0, 1}});
    LiftResult r = lift_jet(cusp(), j23, 6);
    REQUIRE(r.status == LiftResult::Status::Lifted);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order() == 6);
    CHECK(truncate(*r.witness, 3) == j23);
    CHECK(jet_scheme_member(cusp(), *r.witness));

    // (t^2, 0) at order 2 extends only with y picking up the t^3 branch
    LiftResult r2 = lift_jet(cusp(), J({{0, 0, 1}, {0, 0, 0}}), 6);
    REQUIRE(r2.status == LiftResult::Status::Lifted);
    CHECK(jet_scheme_member(cusp(), *r2.witness));
    CHECK(truncate(*r2.witness, 2) == J({{0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("lift solves the node without grounding luck") {
    // on y^2 = x^2 + x^3 the jet (t, t) continues along an irrational-looking
    // branch that still has rational coefficients: y = t sqrt(1 + t)
    LiftResult r = lift_jet(node(), J({{0, 1}, {0, 1}}), 5);
    REQUIRE(r.status == LiftResult::Status::Lifted);
    CHECK(jet_scheme_member(node(), *r.witness));
    CHECK(truncate(*r.witness, 1) == J({{0, 1}, {0, 1}}));
}

TEST_CASE("tangent cone fixtures") {
    auto n = xy();
    {
        ConeIdeal cone = tangent_cone(cusp());
        REQUIRE(cone.ideal.gens.size() == 1);
        CHECK(cone.ideal.gens[0] == P("y^2", n));
    }
    {
        ConeIdeal cone = tangent_cone(node());
        REQUIRE(cone.ideal.gens.size() == 1);
        CHECK(cone.ideal.gens[0] == P("y^2 - x^2", n));
    }
    {
        AffineVariety smooth(Ideal(2, {P("y - x^2", n)}, n), {rat(0), rat(0)});
        ConeIdeal cone = tangent_cone(smooth);
        REQUIRE(cone.ideal.gens.size() == 1);
        CHECK(cone.ideal.gens[0] == P("y", n));
    }
    {
        // translation: at the smooth point (1, 1) the cone is the tangent line;
        // the generator keeps the scaling of the translated input
        AffineVariety at_one(Ideal(2, {P("y^2 - x^3", n)}, n), {rat(1), rat(1)});
        ConeIdeal cone = tangent_cone(at_one);
        REQUIRE(cone.ideal.gens.size() == 1);
        CHECK(cone.ideal.gens[0] == P("-3*x + 2*y", n));
    }
}

TEST_CASE("cone generators of a two-generator ideal") {
    auto n3 = make_names({"x", "y", "z"});
    AffineVariety tw(Ideal(3, {P("x^2 - y^3", n3), P("x^2 - z^3", n3)}, n3),
                     {rat(0), rat(0), rat(0)});
    ConeIdeal cone = tangent_cone(tw);
    for (const auto& g : cone.ideal.gens) {
        CHECK(g.degree() == g.min_degree()); // homogeneous
        CHECK(g.coefficient(Monomial::one(3)) == 0);
    }
    // x^2 is an initial form of both generators
    bool has_x2 = false;
    for (const auto& g : cone.ideal.gens)
        if (g == P("x^2", n3)) has_x2 = true;
    CHECK(has_x2);
}

TEST_CASE("cone kernel dimension separates contractions from immersions") {
    auto n = xy();
    PolyMap g(2, {P("x", n), P("x*y", n)}, n);
    CHECK(cone_kernel_dimension(g, plane()) == 1);
    CHECK(cone_kernel_dimension(PolyMap::identity(2, n), plane()) == 0);
    CHECK(cone_kernel_dimension(PolyMap(2, {P("x^2", n), P("y", n)}, n), plane()) == 1);
    CHECK(cone_kernel_dimension(PolyMap(2, {P("x + y^2", n), P("y", n)}, n), plane()) == 0);
}

TEST_CASE("stratum dimension fixtures on the cusp") {
    StratumResult attained = stratum_dimension(cusp(), 2, 2, 6);
    CHECK(attained.dimension == 1);
    CHECK(attained.buffer_order == 6);
    StratumResult empty = stratum_dimension(cusp(), 2, 1, 6);
    CHECK(empty.dimension == -1);
    StratumResult open_stratum = stratum_dimension(plane(), 2, 1, 6);
    CHECK(open_stratum.dimension == 4); // multiplicity one is open in the coefficient space
    StratumResult thin = stratum_dimension(plane(), 2, 2, 6);
    CHECK(thin.dimension == 2); // first-order coefficients pinned to zero
}

TEST_CASE("varieties property suite") {
    for (const auto& r : run_suite("varieties", 20250819, 20)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
