#pragma once

#include "jetcalc/monomial.hpp"
#include "jetcalc/order.hpp"
#include "jetcalc/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jetcalc {

// Shared, immutable list of display names. Polynomials of the same ring share
// one instance; equality of polynomials ignores names.
using VarNames = std::shared_ptr<const std::vector<std::string>>;

VarNames make_names(std::vector<std::string> names);
VarNames default_names(int arity); // x1, x2, ...
std::string var_name(const VarNames& names, int arity, int i);

struct Term {
    Monomial mon;
    Rational coeff;
    bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial over Q. Terms are kept nonzero and sorted
// degrevlex-descending, so equal polynomials compare equal termwise.
class Polynomial {
public:
    Polynomial() = default; // zero polynomial of arity 0

    static Polynomial zero(int arity, VarNames names = nullptr);
    static Polynomial constant(int arity, const Rational& c, VarNames names = nullptr);
    static Polynomial variable(int arity, int i, VarNames names = nullptr);
    static Polynomial from_terms(int arity, std::vector<Term> terms, VarNames names = nullptr);

    int arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    const VarNames& names() const { return names_; }
    Polynomial with_names(VarNames names) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
    int degree() const;     // -1 for the zero polynomial
    int min_degree() const; // -1 for the zero polynomial
    Rational coefficient(const Monomial& m) const;
    Rational constant_coefficient() const { return coefficient(Monomial::one(arity_)); }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;

    Polynomial derivative(int var) const;
    Rational eval(const std::vector<Rational>& point) const;
    // args has one entry per variable; all entries share one arity, which
    // becomes the arity of the result.
    Polynomial substitute(const std::vector<Polynomial>& args) const;
    Polynomial translate(const std::vector<Rational>& point) const; // p(x + point)
    Polynomial homogeneous_component(int d) const;

    const Term& leading_term(const MonomialOrder& order) const;

    bool operator==(const Polynomial& g) const { return arity_ == g.arity_ && terms_ == g.terms_; }

private:
    int arity_ = 0;
    std::vector<Term> terms_;
    VarNames names_;
};

// Lowest-degree homogeneous component. The zero polynomial is rejected.
Polynomial initial_form(const Polynomial& p);

// Substitutes the engaged entries, keeps the others as variables. The result
// stays in the same ring.
Polynomial partial_eval(const Polynomial& p, const std::vector<std::optional<Rational>>& values);

// Largest monomial dividing every term. The zero polynomial is rejected.
Monomial monomial_content(const Polynomial& p);

// Caller guarantees m divides every term.
Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m);

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* where);

// All rational roots of the univariate polynomial with the given coefficients
// (degree 0 first), ascending. Complete as long as the cleared leading and
// trailing integer coefficients stay within the trial-division cap; beyond it
// the list may miss roots but every returned value is verified exactly.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

} // namespace jetcalc
