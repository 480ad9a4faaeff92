#pragma once

// Test-side oracles, deliberately independent of the implementations they
// cross-check: ideal membership by a dense Macaulay-style linear solve, and
// matrix rank by exhaustive minor expansion.

#include <jetcalc/linalg.hpp>
#include <jetcalc/polynomial.hpp>

#include <map>
#include <vector>

namespace oracles {

inline void collect_monomials(int n, int cap, int from, jetcalc::Monomial& cur,
                              std::vector<jetcalc::Monomial>& out) {
    if (from == n) {
        out.push_back(cur);
        return;
    }
    const int used = cur.degree(); // positions >= from are still zero
    for (int e = 0; used + e <= cap; ++e) {
        cur.exps[from] = e;
        collect_monomials(n, cap, from + 1, cur, out);
    }
    cur.exps[from] = 0;
}

inline std::vector<jetcalc::Monomial> monomials_up_to(int n, int cap) {
    std::vector<jetcalc::Monomial> out;
    jetcalc::Monomial cur = jetcalc::Monomial::one(n);
    collect_monomials(n, cap, 0, cur, out);
    return out;
}

// Is p a combination sum m_i * g_i with every product of degree <= cap?
// Solves the dense linear system over the monomial basis; complete relative
// to the cap, so a "true" from the code under test can be validated whenever
// the certificate degrees stay under it.
inline bool span_member(const jetcalc::Polynomial& p,
                        const std::vector<jetcalc::Polynomial>& gens, int cap) {
    using namespace jetcalc;
    int n = p.arity();
    std::vector<Monomial> basis = monomials_up_to(n, cap);
    std::map<std::vector<int>, int> row_of;
    for (std::size_t i = 0; i < basis.size(); ++i) row_of[basis[i].exps] = static_cast<int>(i);

    struct Column {
        Polynomial value;
    };
    std::vector<Polynomial> columns;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        for (const Monomial& m : basis) {
            if (m.degree() + g.degree() > cap) continue;
            columns.push_back(g.times_term(m, Rational(1)));
        }
    }
    QMatrix a = QMatrix::zero(static_cast<int>(basis.size()), static_cast<int>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const Term& t : columns[j].terms())
            a.at(row_of.at(t.mon.exps), static_cast<int>(j)) = t.coeff;
    std::vector<Rational> rhs(basis.size(), Rational(0));
    for (const Term& t : p.terms()) {
        auto it = row_of.find(t.mon.exps);
        if (it == row_of.end()) return false; // p exceeds the cap
        rhs[it->second] = t.coeff;
    }
    return solve_linear(a, rhs).consistent;
}

inline jetcalc::Rational minor_det(const jetcalc::QMatrix& m, const std::vector<int>& rows,
                                   const std::vector<int>& cols) {
    using jetcalc::Rational;
    if (rows.empty()) return Rational(1);
    Rational det(0);
    int sign = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> sub_rows;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        det += Rational(sign) * m.at(rows[i], cols[0]) * minor_det(m, sub_rows, sub_cols);
        sign = -sign;
    }
    return det;
}

// Rank as the largest size of a nonvanishing minor. Exponential; tiny inputs only.
inline int minor_rank(const jetcalc::QMatrix& m) {
    int best = 0;
    std::vector<int> rows, cols;
    auto choose = [](int total, int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> pick;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(pick.size()) == k) {
                out.push_back(pick);
                return;
            }
            for (int i = from; i < total; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    int cap = std::min(m.rows, m.cols);
    for (int k = 1; k <= cap; ++k)
        for (const auto& rs : choose(m.rows, k)) {
            bool found = false;
            for (const auto& cs : choose(m.cols, k))
                if (minor_det(m, rs, cs) != 0) {
                    found = true;
                    break;
                }
            if (found) {
                best = k;
                break;
            }
        }
    return best;
}

} // namespace oracles
