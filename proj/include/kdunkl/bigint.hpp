#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kdunkl {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace kdunkl
