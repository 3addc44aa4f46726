#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace treeline {

// Arrangement counts grow like n!, far past any fixed-width integer, and the
// closed-form expectations must stay exact, so both types are GMP-backed.
using BigCount = mpz_class;
using Rational = mpq_class;

BigCount factorial(std::int64_t n);

Rational make_rational(const BigCount& num, const BigCount& den);
Rational make_rational(std::int64_t num, std::int64_t den);

// "p/q" in lowest terms; integers print without the "/1".
std::string format_fraction(const Rational& value);

// Fixed-point decimal with the given number of fraction digits, ties rounded
// half to even.  This is the only decimal rendering used anywhere (CLI, CSV).
std::string format_decimal(const Rational& value, int digits = 6);

double to_double(const Rational& value);

}  // namespace treeline
