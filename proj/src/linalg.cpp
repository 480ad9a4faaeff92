#include "jetcalc/linalg.hpp"

#include "jetcalc/errors.hpp"

#include <utility>

namespace jetcalc {

int exact_rank(const QMatrix& m) {
    const int rows = m.rows, cols = m.cols;
    std::vector<Integer> a(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        Integer scale = 1;
        for (int j = 0; j < cols; ++j) {
            const Integer& den = m.at(i, j).get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale = scale / g * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            a[static_cast<std::size_t>(i) * cols + j] = q.get_num() * (scale / q.get_den());
        }
    }
    auto at = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * cols + j]; };

    Integer prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer num = at(r, col) * at(i, j) - at(i, col) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = at(r, col);
        ++r;
    }
    return r;
}

LinearSystemSolution solve_linear(const QMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw ArityError("algebra: right-hand side length mismatch");
    const int rows = a.rows, cols = a.cols;
    QMatrix w = a;
    std::vector<Rational> rhs = b;

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(cols, -1);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
            std::swap(rhs[pivot], rhs[r]);
        }
        Rational inv = 1 / w.at(r, col);
        for (int j = col; j < cols; ++j) w.at(r, j) *= inv;
        rhs[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w.at(i, col) == 0) continue;
            Rational f = w.at(i, col);
            for (int j = col; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
            rhs[i] -= f * rhs[r];
        }
        pivot_col_of_row.push_back(col);
        pivot_row_of_col[col] = r;
        ++r;
    }

    LinearSystemSolution sol;
    for (int i = r; i < rows; ++i)
        if (rhs[i] != 0) return sol; // inconsistent
    sol.consistent = true;
    sol.particular.assign(cols, Rational(0));
    for (int i = 0; i < r; ++i) sol.particular[pivot_col_of_row[i]] = rhs[i];
    for (int col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[col] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -w.at(i, col);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace jetcalc
