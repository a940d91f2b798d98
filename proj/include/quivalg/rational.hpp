#pragma once

#include <gmpxx.h>

#include <string>

namespace quivalg {

using Rational = mpq_class;

// Accepts "p", "p/q", with optional sign; throws SchemaViolation otherwise.
Rational parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace quivalg
