#pragma once

#include <gmpxx.h>

#include <string>

namespace fdc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" into canonical form; throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rationalFromString(const std::string& s);

/// Canonical "p" or "p/q" rendering.
std::string toString(const Rational& r);

}  // namespace fdc
