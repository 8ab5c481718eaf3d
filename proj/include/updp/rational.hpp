#pragma once

#include <gmpxx.h>

#include <string>

namespace updp {

// Exact rational coordinate type. All geometric decisions in this library are
// made with these; no floating point is allowed on any decision path.
using Rat = mpq_class;

// Parses "12", "-3" or "7/3", "-7/3". Throws std::invalid_argument otherwise.
Rat rat_from_string(const std::string& s);

// Inverse of rat_from_string: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

}  // namespace updp
