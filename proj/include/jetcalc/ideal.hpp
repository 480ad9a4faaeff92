#pragma once

#include "jetcalc/polynomial.hpp"

#include <vector>

namespace jetcalc {

// Finitely generated ideal in Q[x1..xn]. Zero generators are dropped on
// construction; an empty list is the zero ideal.
struct Ideal {
    int arity = 0;
    VarNames names;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(int arity_, std::vector<Polynomial> gens_, VarNames names_ = nullptr);
};

} // namespace jetcalc
