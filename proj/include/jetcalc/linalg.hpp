#pragma once

#include "jetcalc/rational.hpp"

#include <vector>

namespace jetcalc {

// Dense exact-rational matrix, row-major. Desk-scale sizes only.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    static QMatrix zero(int r, int c) {
        QMatrix m;
        m.rows = r;
        m.cols = c;
        m.data.assign(static_cast<std::size_t>(r) * c, Rational(0));
        return m;
    }
    Rational& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// Exact rank. Rows are scaled integral first, then eliminated fraction-free
// (two-by-two determinants divided by the previous pivot), so no intermediate
// value ever leaves Z.
int exact_rank(const QMatrix& m);

struct LinearSystemSolution {
    bool consistent = false;
    std::vector<Rational> particular;          // one solution, free variables at zero
    std::vector<std::vector<Rational>> kernel; // basis of the homogeneous solutions
};

// Solves A x = b by rational Gauss-Jordan.
LinearSystemSolution solve_linear(const QMatrix& a, const std::vector<Rational>& b);

} // namespace jetcalc
