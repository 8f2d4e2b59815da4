#pragma once

#include <gmpxx.h>

#include <string>

namespace wg {

// All exact values in the library are carried by GMP types: `Int` is an
// arbitrary-precision integer and `Rat` an always-reduced rational with
// positive denominator (canonicalization is maintained by mpq_class).
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" (optional sign, arbitrary precision). Throws ParseError
// on malformed input or q == 0.
Rat parse_rational(const std::string &text);

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat &value);

std::string int_to_string(const Int &value);

// Nearest double; used only for reporting, never for decisions.
double rat_to_double(const Rat &value);

} // namespace wg
