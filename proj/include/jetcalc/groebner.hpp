#pragma once

#include "jetcalc/config.hpp"
#include "jetcalc/ideal.hpp"
#include "jetcalc/order.hpp"
#include "jetcalc/polynomial.hpp"

#include <vector>

namespace jetcalc {

// Reduced basis: monic elements, no leading monomial divides another, every
// tail monomial reduced. Canonical for (ideal, order); elements are sorted
// ascending by leading monomial.
struct GroebnerBasis {
    int arity = 0;
    VarNames names;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> basis;

    bool contains_one() const;
};

// Buchberger completion under the sugar selection strategy with the product
// and strict-chain pair criteria, then full interreduction. Degree/size caps
// from limits abort with ResourceLimitError.
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const Limits& limits = {});

// Unique remainder of p modulo the basis (full reduction).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const Limits& limits = {});

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb, const Limits& limits = {});

// Intersection with the subring of the kept variables, computed under a block
// order that eliminates `drop`. The result lives in the kept variables, which
// keep their relative order and names.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop, const Limits& limits = {});

// Krull dimension of the quotient ring, read off the leading-term staircase:
// the largest set of variables not covering any leading support. Empty variety
// gives -1; the zero ideal gives the ambient arity.
int ideal_dimension(const Ideal& ideal, const Limits& limits = {});

// A maximum-size variable set containing no full leading-term support; its
// size is the dimension. Meaningless when the basis contains 1.
std::vector<int> independent_variables(const GroebnerBasis& gb);

// Equality as ideals (reduced degrevlex bases compared).
bool ideal_equal(const Ideal& a, const Ideal& b, const Limits& limits = {});

} // namespace jetcalc
