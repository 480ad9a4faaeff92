#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace jetcalc {

// Exponent vector. Arity is fixed by the ambient ring; all entries >= 0.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
    static Monomial one(int arity) { return Monomial(std::vector<int>(arity, 0)); }
    static Monomial var(int arity, int i, int power = 1) {
        Monomial m = one(arity);
        m.exps[i] = power;
        return m;
    }

    int arity() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
        return r;
    }

    // Caller guarantees divisibility.
    Monomial quotient_by(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
        return r;
    }
    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::min(r.exps[i], b.exps[i]);
        return r;
    }

    bool operator==(const Monomial&) const = default;
};

} // namespace jetcalc
