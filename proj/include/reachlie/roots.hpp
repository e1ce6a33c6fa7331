#ifndef REACHLIE_ROOTS_HPP
#define REACHLIE_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace reachlie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple type X_n. Ranks above 8 are rejected: the orbit classification
/// enumerates 3^rank candidate diagrams.
struct LieType
{
  Family family;
  int rank;

  LieType(Family f, int r) : family(f), rank(r)
  {
    if (!admissible(f, r))
      throw std::invalid_argument("LieType: inadmissible type " + name(f, r));
  }

  static bool admissible(Family f, int r)
  {
    if (r > 8)
      return false;
    switch (f) {
      case Family::A: return r >= 1;
      case Family::B:
      case Family::C: return r >= 2;
      case Family::D: return r >= 3;
      case Family::E: return r >= 6 && r <= 8;
      case Family::F: return r == 4;
      case Family::G: return r == 2;
    }
    return false;
  }

  static std::string name(Family f, int r)
  {
    return std::string(1, static_cast<char>(f)) + std::to_string(r);
  }

  std::string name() const { return name(family, rank); }

  /// Parse "E6", "g2", ...
  static LieType parse(const std::string& s)
  {
    if (s.size() < 2)
      throw std::invalid_argument("LieType: cannot parse '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G')
      throw std::invalid_argument("LieType: unknown family in '" + s + "'");
    int r = std::stoi(s.substr(1));
    return LieType(static_cast<Family>(f), r);
  }

  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
  bool operator!=(const LieType& o) const { return !(*this == o); }
};

/// A root, stored by its integer coefficients on the simple roots.
struct Root
{
  std::vector<int> coords;

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  bool operator==(const Root& o) const { return coords == o.coords; }
};

/// Standard Cartan matrix in Bourbaki node numbering.
/// Entry [i][j] is <alpha_j, alpha_i^vee>, so row i lists the eigenvalues of
/// ad h_i on the simple root vectors. For G2, node 1 is the long root.
inline std::vector<std::vector<int>> cartan_matrix(const LieType& t)
{
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    c[i][i] = 2;
  auto bond = [&c](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i)
        bond(i, i + 1);
      break;
    case Family::B: // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < n; ++i)
        bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::C: // alpha_n long
      for (int i = 0; i + 1 < n; ++i)
        bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i)
        bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E: // chain 1-3-4-5-..., node 2 attached to node 4
      bond(0, 2);
      for (int i = 2; i + 1 < n; ++i)
        bond(i, i + 1);
      bond(1, 3);
      break;
    case Family::F: // nodes 1,2 long; 3,4 short; double bond 2=>3
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case Family::G: // node 1 long, node 2 short
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

/// Root system data: Cartan matrix, positive roots closed under root
/// addition, a symmetric pairing for length computations.
class RootSystem
{
public:
  explicit RootSystem(LieType t) : m_type(t), m_cartan(cartan_matrix(t))
  {
    build_lengths();
    build_roots();
  }

  const LieType& type() const { return m_type; }
  int rank() const { return m_type.rank; }
  const std::vector<std::vector<int>>& cartan() const { return m_cartan; }
  const std::vector<Root>& positive_roots() const { return m_roots; }
  std::size_t num_positive() const { return m_roots.size(); }

  /// <alpha, alpha_i^vee> for alpha given by coords.
  int pairing_with_simple_coroot(const std::vector<int>& coords, int i) const
  {
    int s = 0;
    for (int j = 0; j < rank(); ++j)
      s += coords[j] * m_cartan[i][j];
    return s;
  }

  /// Index of a positive root by coords, or -1.
  int index_of(const std::vector<int>& coords) const
  {
    auto it = m_index.find(coords);
    return it == m_index.end() ? -1 : it->second;
  }

  const Root& root(std::size_t i) const { return m_roots[i]; }

  const Root& highest_root() const { return m_roots.back(); }

  /// Squared length (alpha, alpha), normalized so short simple roots have 2.
  long len2(const std::vector<int>& coords) const { return inner(coords, coords); }

  /// Symmetric W-invariant form on the root lattice.
  long inner(const std::vector<int>& a, const std::vector<int>& b) const
  {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (a[i] != 0 && b[j] != 0)
          s += static_cast<long>(a[i]) * b[j] * m_gram[i][j];
    return s;
  }

  /// 2(beta, alpha)/(alpha, alpha); an integer for roots alpha.
  long pairing(const std::vector<int>& beta, const std::vector<int>& alpha) const
  {
    long num = 2 * inner(beta, alpha);
    long den = len2(alpha);
    if (num % den != 0)
      throw std::logic_error("RootSystem::pairing: non-integer Cartan integer");
    return num / den;
  }

  /// Coefficients of alpha^vee on the simple coroots (always integers).
  std::vector<long> coroot_coords(const std::vector<int>& alpha) const
  {
    std::vector<long> c(rank());
    long la = len2(alpha);
    for (int i = 0; i < rank(); ++i) {
      // c_i = m_i * (alpha_i, alpha_i) / (alpha, alpha)
      long num = static_cast<long>(alpha[i]) * m_gram[i][i];
      if (num % la != 0)
        throw std::logic_error("RootSystem::coroot_coords: non-integer coefficient");
      c[i] = num / la;
    }
    return c;
  }

private:
  void build_lengths()
  {
    const int n = rank();
    // d_i = (alpha_i, alpha_i)/2 from symmetrizing the Cartan matrix:
    // d_i * C[j][i] = d_j * C[i][j].
    std::vector<long> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
      int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || m_cartan[i][j] == 0 || num[j] != 0)
          continue;
        // symmetry d_i C[i][j] = d_j C[j][i] gives d_j = d_i * C[i][j] / C[j][i]
        num[j] = num[i] * m_cartan[i][j];
        den[j] = den[i] * m_cartan[j][i];
        if (num[j] < 0 && den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        todo.push_back(j);
      }
    }
    long scale = 1;
    for (int i = 0; i < n; ++i)
      scale = std::lcm(scale, den[i]);
    std::vector<long> d(n);
    long g = 0;
    for (int i = 0; i < n; ++i) {
      d[i] = num[i] * (scale / den[i]);
      g = std::gcd(g, d[i]);
    }
    for (int i = 0; i < n; ++i)
      d[i] /= g;
    // gram[i][j] = (alpha_i, alpha_j) = d_i * C[i][j] with (alpha_i,alpha_i) = 2 d_i
    m_gram.assign(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m_gram[i][j] = d[i] * m_cartan[i][j];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m_gram[i][j] != m_gram[j][i])
          throw std::logic_error("RootSystem: Cartan matrix not symmetrizable");
  }

  void build_roots()
  {
    const int n = rank();
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> by_height_cur;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.emplace(e, 0);
      by_height_cur.push_back(std::move(e));
    }
    // closure by root strings: alpha + alpha_i is a root iff
    // q = p - <alpha, alpha_i^vee> > 0, with p the depth of the string below.
    while (!by_height_cur.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& alpha : by_height_cur) {
        for (int i = 0; i < n; ++i) {
          std::vector<int> down = alpha;
          int p = 0;
          for (;;) {
            down[i] -= 1;
            bool zero = std::all_of(down.begin(), down.end(), [](int v) { return v == 0; });
            if (zero || !seen.count(down))
              break;
            ++p;
          }
          int q = p - pairing_with_simple_coroot(alpha, i);
          if (q <= 0)
            continue;
          std::vector<int> up = alpha;
          up[i] += 1;
          if (seen.emplace(up, 0).second)
            next.push_back(std::move(up));
        }
      }
      by_height_cur = std::move(next);
    }
    m_roots.reserve(seen.size());
    for (auto& [coords, idx] : seen)
      m_roots.push_back(Root{coords});
    std::sort(m_roots.begin(), m_roots.end(), [](const Root& a, const Root& b) {
      int ha = a.height(), hb = b.height();
      if (ha != hb)
        return ha < hb;
      return a.coords < b.coords;
    });
    for (std::size_t i = 0; i < m_roots.size(); ++i)
      m_index[m_roots[i].coords] = static_cast<int>(i);
  }

  LieType m_type;
  std::vector<std::vector<int>> m_cartan;
  std::vector<std::vector<long>> m_gram;
  std::vector<Root> m_roots;
  std::map<std::vector<int>, int> m_index;
};

} // namespace reachlie

#endif
