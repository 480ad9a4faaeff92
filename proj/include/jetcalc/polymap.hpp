#pragma once

#include "jetcalc/polynomial.hpp"

#include <vector>

namespace jetcalc {

// Polynomial map C^n -> C^m given by coordinate polynomials in the source
// variables. Endomorphisms are the m == n case.
struct PolyMap {
    int source_arity = 0;
    VarNames source_names;
    std::vector<Polynomial> coords;

    PolyMap() = default;
    PolyMap(int source_arity_, std::vector<Polynomial> coords_, VarNames names = nullptr);
    static PolyMap identity(int n, VarNames names = nullptr);

    int target_arity() const { return static_cast<int>(coords.size()); }
    std::vector<Rational> eval(const std::vector<Rational>& point) const;
    bool fixes_origin() const; // every coordinate vanishes at 0
};

// f after g; the source arity of f must match the target arity of g.
PolyMap compose(const PolyMap& f, const PolyMap& g);

// s-fold self-composition of an endomorphism; s >= 1.
PolyMap iterate(const PolyMap& f, int s);

// Rows indexed by coordinates, columns by source variables.
std::vector<std::vector<Polynomial>> jacobian(const PolyMap& f);

// Determinant of the Jacobian; the map must be equidimensional.
Polynomial jacobian_det(const PolyMap& f);

} // namespace jetcalc
