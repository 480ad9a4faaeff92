#include <doctest.h>

#include "oracles.hpp"

#include <jetcalc/errors.hpp>
#include <jetcalc/groebner.hpp>
#include <jetcalc/linalg.hpp>
#include <jetcalc/properties.hpp>
#include <jetcalc/textio.hpp>

using namespace jetcalc;

namespace {
VarNames xy() { return make_names({"x", "y"}); }
VarNames xyz() { return make_names({"x", "y", "z"}); }
Polynomial P(const char* text, const VarNames& names) {
    return parse_polynomial(text, names);
}
} // namespace

TEST_CASE("rationals canonicalize and round-trip") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat_str(rat(5)) == "5");
    CHECK(rat_str(rat(-7, 3)) == "-7/3");
    CHECK(rat_parse("22/7") == rat(22, 7));
    CHECK(rat_parse("-9") == rat(-9));
    CHECK_THROWS_AS(rat_parse("1/0"), DomainError);
    CHECK_THROWS_AS(rat_parse("x"), DomainError);
}

TEST_CASE("polynomial arithmetic fixtures") {
    auto n = xy();
    Polynomial x = Polynomial::variable(2, 0, n);
    Polynomial y = Polynomial::variable(2, 1, n);
    CHECK((x + y) * (x + y) == x * x + x * y * Polynomial::constant(2, rat(2), n) + y * y);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * y).derivative(0) == y);
    CHECK(P("x^2*y - y", n).eval({rat(2), rat(3)}) == rat(9));
    CHECK(P("x^2 + 2*x*y + y^2", n).homogeneous_component(2) == P("x^2 + 2*x*y + y^2", n));
    CHECK(P("x^2 + x^3 + y^4", n).min_degree() == 2);
    CHECK(initial_form(P("y^2 - x^3", n)) == P("y^2", n));
    CHECK(P("x^2 - y^2", n).translate({rat(1), rat(0)}) == P("x^2 + 2*x + 1 - y^2", n));
}

TEST_CASE("monomial content and division fixtures") {
    auto n = xy();
    Polynomial p = P("x^2*y^2 - x^3*y", n);
    Monomial c = monomial_content(p);
    CHECK(c == Monomial({2, 1}));
    CHECK(divide_by_monomial(p, c) == P("y - x", n));
}

TEST_CASE("printer and parser round-trip on fixtures") {
    auto n = xyz();
    for (const char* text : {"x", "x + y", "y^2 - x^3", "1/2*x*y - 3*z^4 + 7",
                             "x*y*z - x*y - x*z - y*z + x + y + z - 1", "-x", "0", "5"}) {
        Polynomial p = P(text, n);
        CHECK(parse_polynomial(poly_str(p), n) == p);
    }
}

TEST_CASE("parser reports positions") {
    auto n = xy();
    try {
        parse_polynomial("x + w", n, 3, 10);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 14);
    }
    CHECK_THROWS_AS(P("x +", n), ParseError);
    CHECK_THROWS_AS(P("x y", n), ParseError);   // implicit products are rejected
    CHECK_THROWS_AS(P("x^-1", n), ParseError);
    CHECK_THROWS_AS(P("(x)", n), ParseError);   // no parentheses in the grammar
}

TEST_CASE("groebner bases are reduced, monic, and canonical") {
    auto n = xyz();
    Ideal twisted(3, {P("y - x^2", n), P("z - x^3", n)}, n);
    GroebnerBasis lex_gb = groebner_basis(twisted, MonomialOrder::lex());
    GroebnerBasis permuted =
        groebner_basis(Ideal(3, {P("z - x^3", n), P("y - x^2", n)}, n), MonomialOrder::lex());
    CHECK(lex_gb.basis == permuted.basis);
    CHECK(ideal_member(P("y^3 - z^2", n), lex_gb));
    CHECK_FALSE(ideal_member(P("y^3 - z^2 + 1", n), lex_gb));

    GroebnerBasis drl = groebner_basis(
        Ideal(3, {P("x^2 + y^2 + z^2", n), P("x*y - z^2", n)}, n), MonomialOrder::degrevlex());
    std::vector<std::string> printed;
    for (const auto& g : drl.basis) printed.push_back(poly_str(g));
    CHECK(printed == std::vector<std::string>{"x*y - z^2", "x^2 + y^2 + z^2",
                                              "y^3 + x*z^2 + y*z^2"});
    CHECK_FALSE(drl.contains_one());
    CHECK(groebner_basis(Ideal(2, {P("x", xy()), P("x - 1", xy())}, xy()),
                         MonomialOrder::degrevlex())
              .contains_one());
}

TEST_CASE("membership answers agree with the dense span oracle") {
    auto n = xy();
    Ideal ideal(2, {P("y^2 - x^3", n), P("x*y - x^2", n)}, n);
    GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::degrevlex());
    for (const char* text : {"y^2 - x^3", "x*y^2 - x^4", "y^3 - x^3*y", "x^2*y - x^3",
                             "y^2 - x^2*y", "x^5 - x^3*y"}) {
        Polynomial p = P(text, n);
        bool claimed = ideal_member(p, gb);
        CHECK(claimed == oracles::span_member(p, ideal.gens, p.degree() + 4));
    }
    CHECK_FALSE(ideal_member(P("x", n), gb));
    CHECK_FALSE(oracles::span_member(P("x", n), ideal.gens, 6));
}

TEST_CASE("normal form is linear and idempotent on fixtures") {
    auto n = xy();
    // degrevlex leading term of y^2 - x^3 is x^3, so reduction rewrites x^3 -> y^2
    GroebnerBasis gb =
        groebner_basis(Ideal(2, {P("y^2 - x^3", n)}, n), MonomialOrder::degrevlex());
    Polynomial p = P("x^4 + x^3*y + y", n);
    Polynomial r = normal_form(p, gb);
    CHECK(r == P("y^3 + x*y^2 + y", n));
    CHECK(normal_form(r, gb) == r);
    CHECK(ideal_member(p - r, gb));
    CHECK(normal_form(P("y^4 + x*y^2 + y", n), gb) == P("y^4 + x*y^2 + y", n));
}

TEST_CASE("elimination fixtures") {
    auto n = make_names({"t", "x", "y", "z"});
    Ideal graph(4, {P("x - t", n), P("y - t^2", n), P("z - t^3", n)}, n);
    Ideal cubic = eliminate(graph, {0});
    std::vector<std::string> printed;
    for (const auto& g : cubic.gens) printed.push_back(poly_str(g));
    CHECK(printed == std::vector<std::string>{"y^2 - x*z", "x*y - z", "x^2 - y"});
    CHECK(cubic.arity == 3);
    CHECK(var_name(cubic.names, 3, 0) == "x");

    auto n4 = make_names({"x", "y", "u", "v"});
    Ideal with_origin(4, {P("x", n4), P("u - x", n4), P("v - x*y", n4)}, n4);
    Ideal image = eliminate(with_origin, {0, 1});
    printed.clear();
    for (const auto& g : image.gens) printed.push_back(poly_str(g));
    CHECK(printed == std::vector<std::string>{"v", "u"});
}

TEST_CASE("dimension fixtures") {
    auto n = xy();
    CHECK(ideal_dimension(Ideal(2, {}, n)) == 2);
    CHECK(ideal_dimension(Ideal(2, {P("y^2 - x^3", n)}, n)) == 1);
    CHECK(ideal_dimension(Ideal(2, {P("x", n), P("y", n)}, n)) == 0);
    CHECK(ideal_dimension(Ideal(2, {P("x", n), P("x - 1", n)}, n)) == -1);
    auto n3 = xyz();
    CHECK(ideal_dimension(Ideal(3, {P("x*y", n3)}, n3)) == 2);
    CHECK(ideal_dimension(Ideal(3, {P("x*y", n3), P("x*z", n3)}, n3)) == 2);
}

TEST_CASE("degree cap aborts instead of truncating") {
    auto n = xy();
    Limits tight;
    tight.max_degree = 3;
    CHECK_THROWS_AS(
        groebner_basis(Ideal(2, {P("y^2 - x^5", n), P("x*y - 1", n)}, n),
                       MonomialOrder::degrevlex(), tight),
        ResourceLimitError);
}

TEST_CASE("exact rank agrees with the minor oracle") {
    QMatrix m = QMatrix::zero(3, 4);
    std::vector<std::vector<long>> rows = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rat(rows[i][j]);
    CHECK(exact_rank(m) == 2);
    CHECK(oracles::minor_rank(m) == 2);

    QMatrix frac = QMatrix::zero(3, 3);
    long num[3][3] = {{1, 1, 2}, {1, 2, 3}, {2, 3, 5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) frac.at(i, j) = rat(num[i][j], i + 1);
    CHECK(exact_rank(frac) == oracles::minor_rank(frac));
}

TEST_CASE("linear solver fixtures") {
    QMatrix a = QMatrix::zero(2, 3);
    a.at(0, 0) = rat(1);
    a.at(0, 1) = rat(1);
    a.at(0, 2) = rat(1);
    a.at(1, 0) = rat(0);
    a.at(1, 1) = rat(1);
    a.at(1, 2) = rat(2);
    auto sol = solve_linear(a, {rat(3), rat(4)});
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.size() == 1);
    // residual check for the particular solution
    for (int i = 0; i < 2; ++i) {
        Rational acc(0);
        for (int j = 0; j < 3; ++j) acc += a.at(i, j) * sol.particular[j];
        CHECK(acc == (i == 0 ? rat(3) : rat(4)));
    }
    auto bad = solve_linear(a, {rat(0), rat(0)});
    CHECK(bad.consistent);
    QMatrix sq = QMatrix::zero(2, 2);
    sq.at(0, 0) = rat(1);
    sq.at(1, 0) = rat(1);
    auto none = solve_linear(sq, {rat(1), rat(2)});
    CHECK_FALSE(none.consistent);
}

TEST_CASE("algebra property suite") {
    for (const auto& r : run_suite("algebra", 20250819, 25)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
