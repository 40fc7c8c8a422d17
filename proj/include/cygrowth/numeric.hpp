#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace cygrowth {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

inline double to_double(const Rat& r) { return r.get_d(); }

inline std::complex<double> to_complex(const Rat& r) { return {r.get_d(), 0.0}; }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace cygrowth
