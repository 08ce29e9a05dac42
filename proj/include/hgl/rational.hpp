#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hgl {

using Rational = mpq_class;
using Integer = mpz_class;

// "a" or "a/b", reduced with positive denominator.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace hgl
