#ifndef REACHLIE_RATIONAL_HPP
#define REACHLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace reachlie {

/// Exact arbitrary-precision rational scalar used throughout the library.
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

/// Value as long; caller must know the value is an integer that fits.
inline long to_long(const Rat& a)
{
  return mpz_get_si(a.get_num().get_mpz_t());
}

inline std::string to_string(const Rat& a)
{
  return a.get_str();
}

} // namespace reachlie

#endif
