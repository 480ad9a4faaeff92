#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jetcalc {

// Exact arbitrary-precision rational. mpq_class does not canonicalize values
// built from a numerator/denominator pair, so construction goes through rat().
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with arbitrary-precision parts. Throws DomainError
// on malformed text or zero denominator.
Rational rat_parse(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise. Round-trips through rat_parse.
std::string rat_str(const Rational& q);

std::string point_str(const std::vector<Rational>& pt);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace jetcalc
