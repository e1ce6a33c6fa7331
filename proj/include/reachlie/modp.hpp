#ifndef REACHLIE_MODP_HPP
#define REACHLIE_MODP_HPP

#include <cstdint>
#include <vector>

#include "reachlie/rational.hpp"

namespace reachlie {

/// Rank of an integer matrix modulo the Mersenne prime 2^61 - 1.
///
/// The rank mod p never exceeds the rank over Q, so when it reaches a known
/// upper bound the exact rank is certified; a smaller value is treated by
/// callers as "not certified" and retried. Used only inside the probabilistic
/// density test, where the retry loop already absorbs unlucky draws.
class ModPMatrix
{
public:
  static constexpr std::uint64_t P = (1ULL << 61) - 1;

  ModPMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_data(rows * cols, 0) {}

  static std::uint64_t from_long(long v)
  {
    if (v >= 0)
      return static_cast<std::uint64_t>(v) % P;
    std::uint64_t a = static_cast<std::uint64_t>(-(v + 1)) + 1;
    a %= P;
    return a == 0 ? 0 : P - a;
  }

  static std::uint64_t from_rat(const Rat& v)
  {
    std::uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), P);
    std::uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), P);
    return mul_m(num, inverse(den));
  }

  void set(std::size_t i, std::size_t j, long v) { at(i, j) = from_long(v); }
  void set(std::size_t i, std::size_t j, const Rat& v) { at(i, j) = from_rat(v); }
  void add(std::size_t i, std::size_t j, long v)
  {
    at(i, j) = add_m(at(i, j), from_long(v));
  }

  std::size_t rank() { return eliminate(nullptr); }

  /// Treats the last column as the right-hand side: true when the system
  /// given by the remaining columns is consistent mod p.
  bool consistent_as_augmented()
  {
    std::vector<std::size_t> pivots;
    eliminate(&pivots);
    return pivots.empty() || pivots.back() != m_cols - 1;
  }

private:
  std::size_t eliminate(std::vector<std::size_t>* pivots)
  {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m_cols && r < m_rows; ++c) {
      std::size_t piv = r;
      while (piv < m_rows && at(piv, c) == 0)
        ++piv;
      if (piv == m_rows)
        continue;
      if (piv != r)
        for (std::size_t j = c; j < m_cols; ++j)
          std::swap(at(r, j), at(piv, j));
      std::uint64_t inv = inverse(at(r, c));
      for (std::size_t i = r + 1; i < m_rows; ++i) {
        if (at(i, c) == 0)
          continue;
        std::uint64_t f = mul_m(at(i, c), inv);
        at(i, c) = 0;
        for (std::size_t j = c + 1; j < m_cols; ++j)
          if (at(r, j) != 0)
            at(i, j) = sub_m(at(i, j), mul_m(f, at(r, j)));
      }
      if (pivots)
        pivots->push_back(c);
      ++r;
    }
    return r;
  }

public:

private:
  std::uint64_t& at(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }

  static std::uint64_t add_m(std::uint64_t a, std::uint64_t b)
  {
    std::uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static std::uint64_t sub_m(std::uint64_t a, std::uint64_t b)
  {
    return a >= b ? a - b : a + P - b;
  }
  static std::uint64_t mul_m(std::uint64_t a, std::uint64_t b)
  {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(t & P);
    std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
    std::uint64_t s = lo + hi;
    return s >= P ? s - P : s;
  }
  static std::uint64_t pow_m(std::uint64_t a, std::uint64_t e)
  {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1)
        r = mul_m(r, a);
      a = mul_m(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inverse(std::uint64_t a) { return pow_m(a, P - 2); }

  std::size_t m_rows, m_cols;
  std::vector<std::uint64_t> m_data;
};

} // namespace reachlie

#endif
