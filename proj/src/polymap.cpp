#include "jetcalc/polymap.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

PolyMap::PolyMap(int source_arity_, std::vector<Polynomial> coords_, VarNames names)
    : source_arity(source_arity_), source_names(std::move(names)), coords(std::move(coords_)) {
    for (auto& c : coords) {
        if (c.arity() != source_arity)
            throw ArityError("algebra: map coordinate arity mismatch");
        if (source_names) c = c.with_names(source_names);
    }
    if (!source_names && !coords.empty()) source_names = coords[0].names();
}

PolyMap PolyMap::identity(int n, VarNames names) {
    std::vector<Polynomial> cs;
    cs.reserve(n);
    for (int i = 0; i < n; ++i) cs.push_back(Polynomial::variable(n, i, names));
    return PolyMap(n, std::move(cs), std::move(names));
}

std::vector<Rational> PolyMap::eval(const std::vector<Rational>& point) const {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(c.eval(point));
    return out;
}

bool PolyMap::fixes_origin() const {
    std::vector<Rational> zero(source_arity, Rational(0));
    for (const auto& c : coords)
        if (c.eval(zero) != 0) return false;
    return true;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    if (f.source_arity != g.target_arity())
        throw ArityError("algebra: composition arity mismatch");
    std::vector<Polynomial> cs;
    cs.reserve(f.coords.size());
    for (const auto& c : f.coords) cs.push_back(c.substitute(g.coords));
    return PolyMap(g.source_arity, std::move(cs), g.source_names);
}

PolyMap iterate(const PolyMap& f, int s) {
    if (f.source_arity != f.target_arity())
        throw ArityError("algebra: iteration needs an endomorphism");
    if (s < 1) throw DomainError("algebra: iteration count must be positive");
    PolyMap r = f;
    for (int i = 1; i < s; ++i) r = compose(f, r);
    return r;
}

std::vector<std::vector<Polynomial>> jacobian(const PolyMap& f) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(f.coords.size());
    for (const auto& c : f.coords) {
        std::vector<Polynomial> row;
        row.reserve(f.source_arity);
        for (int j = 0; j < f.source_arity; ++j) row.push_back(c.derivative(j));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, std::vector<int> cols, int row,
                   int arity, const VarNames& names) {
    if (cols.empty()) return Polynomial::constant(arity, rat(1), names);
    Polynomial sum = Polynomial::zero(arity, names);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& entry = m[row][cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Polynomial minor = det_rec(m, std::move(rest), row + 1, arity, names);
        Polynomial contrib = entry * minor;
        if (k % 2 == 1) contrib = -contrib;
        sum = sum + contrib;
    }
    return sum;
}

} // namespace

Polynomial jacobian_det(const PolyMap& f) {
    if (f.source_arity != f.target_arity())
        throw DomainError("algebra: jacobian determinant needs an equidimensional map");
    auto m = jacobian(f);
    std::vector<int> cols;
    for (int j = 0; j < f.source_arity; ++j) cols.push_back(j);
    return det_rec(m, std::move(cols), 0, f.source_arity, f.source_names);
}

} // namespace jetcalc
