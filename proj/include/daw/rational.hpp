#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace daw {

// Exact rational scalar. Everything in this library is exact; there is no
// floating point anywhere in the kernel.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

// Formats as "p" or "p/q" in lowest terms.
std::string rat_str(const Rat& x);

bool rat_is_int(const Rat& x);

// True iff d*x is an integer.
bool rat_denominator_divides(const Rat& x, long d);

}  // namespace daw
