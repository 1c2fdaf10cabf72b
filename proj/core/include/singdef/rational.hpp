#pragma once

#include <gmpxx.h>

#include <string>

namespace singdef {

using Integer = mpz_class;
using Rational = mpq_class;

// "n" for integers, "n/d" otherwise; denominator always positive.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace singdef
