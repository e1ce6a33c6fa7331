#ifndef REACHLIE_CHEVALLEY_HPP
#define REACHLIE_CHEVALLEY_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reachlie/matrix.hpp"
#include "reachlie/roots.hpp"
#include "reachlie/subspace.hpp"

namespace reachlie {

class LieAlgebra;

/// Element of a Lie algebra, stored densely on the Chevalley basis
/// (x_alpha for positive alpha, then y_alpha, then h_1..h_rank).
struct Element
{
  const LieAlgebra* algebra = nullptr;
  QVector coeffs;

  bool is_zero() const
  {
    for (const Rat& c : coeffs)
      if (!reachlie::is_zero(c))
        return false;
    return true;
  }
};

/// Bracket-closed subspace.
struct Subalgebra
{
  const LieAlgebra* algebra = nullptr;
  Subspace space;
};

/// Simple Lie algebra in a Chevalley basis. Structure constants are the
/// integers fixed by the extraspecial-pair sign convention: for each
/// non-simple positive root c, the pair (a, b) with a + b = c and a minimal
/// in root order gets N_{a,b} = p + 1 > 0, p the depth of the a-string
/// through b; every other constant follows from antisymmetry, N_{-a,-b} =
/// -N_{a,b}, and the standard three- and four-root identities.
class LieAlgebra
{
public:
  explicit LieAlgebra(LieType t) : m_rs(t)
  {
    m_npos = m_rs.num_positive();
    m_dim = 2 * m_npos + static_cast<std::size_t>(m_rs.rank());
    build_extraspecial();
    build_table();
  }

  const RootSystem& rootsystem() const { return m_rs; }
  std::size_t dim() const { return m_dim; }
  std::size_t num_positive() const { return m_npos; }
  int rank() const { return m_rs.rank(); }

  // basis index helpers
  std::size_t x_index(std::size_t root) const { return root; }
  std::size_t y_index(std::size_t root) const { return m_npos + root; }
  std::size_t h_index(int i) const { return 2 * m_npos + static_cast<std::size_t>(i); }
  bool is_x(std::size_t b) const { return b < m_npos; }
  bool is_y(std::size_t b) const { return b >= m_npos && b < 2 * m_npos; }
  bool is_h(std::size_t b) const { return b >= 2 * m_npos; }

  std::string basis_name(std::size_t b) const
  {
    if (is_x(b))
      return "x" + std::to_string(b + 1);
    if (is_y(b))
      return "y" + std::to_string(b - m_npos + 1);
    return "h" + std::to_string(b - 2 * m_npos + 1);
  }

  /// [b_i, b_j] as a sparse integer combination of basis elements.
  const std::vector<std::pair<int, long>>& bracket_basis(std::size_t i, std::size_t j) const
  {
    return m_table[i * m_dim + j];
  }

  Element zero() const { return Element{this, QVector(m_dim, Rat(0))}; }

  Element basis_element(std::size_t b) const
  {
    Element e = zero();
    e.coeffs[b] = 1;
    return e;
  }

  Element element(QVector coeffs) const
  {
    if (coeffs.size() != m_dim)
      throw std::invalid_argument("LieAlgebra::element: wrong length");
    return Element{this, std::move(coeffs)};
  }

  Element bracket(const Element& x, const Element& y) const
  {
    if (x.algebra != this || y.algebra != this)
      throw std::invalid_argument("bracket: elements of a different algebra");
    Element out = zero();
    for (std::size_t i = 0; i < m_dim; ++i) {
      if (reachlie::is_zero(x.coeffs[i]))
        continue;
      for (std::size_t j = 0; j < m_dim; ++j) {
        if (reachlie::is_zero(y.coeffs[j]))
          continue;
        for (const auto& [k, c] : bracket_basis(i, j))
          out.coeffs[static_cast<std::size_t>(k)] += x.coeffs[i] * y.coeffs[j] * c;
      }
    }
    return out;
  }

  /// Matrix of ad(x): ad_matrix(x) * coeffs(y) = coeffs([x, y]).
  QMatrix ad_matrix(const Element& x) const
  {
    if (x.algebra != this)
      throw std::invalid_argument("ad_matrix: element of a different algebra");
    QMatrix m(m_dim, m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
      if (reachlie::is_zero(x.coeffs[i]))
        continue;
      for (std::size_t j = 0; j < m_dim; ++j)
        for (const auto& [k, c] : bracket_basis(i, j))
          m(static_cast<std::size_t>(k), j) += x.coeffs[i] * c;
    }
    return m;
  }

  /// Centralizer g_e = ker ad(e); bracket-closed by the Jacobi identity.
  Subalgebra centralizer(const Element& e) const
  {
    return Subalgebra{this, nullspace(ad_matrix(e))};
  }

  /// [k, k], the span of pairwise brackets of basis vectors of k. No
  /// iteration is needed: [k, k] is an ideal of k.
  Subalgebra derived_subalgebra(const Subalgebra& k) const
  {
    const QMatrix& b = k.space.basis();
    SpanBuilder sb(m_dim);
    for (std::size_t i = 0; i < b.rows() && sb.dim() < k.space.dim(); ++i) {
      Element u = element(b.row(i));
      for (std::size_t j = i + 1; j < b.rows() && sb.dim() < k.space.dim(); ++j)
        sb.insert(bracket(u, element(b.row(j))).coeffs);
    }
    return Subalgebra{this, Subspace::from_builder(sb)};
  }

  /// Smallest bracket-closed subspace containing gens.
  Subalgebra subalgebra_closure(const std::vector<Element>& gens) const
  {
    SpanBuilder sb(m_dim);
    for (const Element& g : gens) {
      if (g.algebra != this)
        throw std::invalid_argument("subalgebra_closure: element of a different algebra");
      sb.insert(g.coeffs);
    }
    for (std::size_t round = 0; round <= m_dim; ++round) {
      QMatrix basis = sb.basis();
      std::size_t before = sb.dim();
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        Element u = element(basis.row(i));
        for (std::size_t j = i + 1; j < basis.rows(); ++j)
          sb.insert(bracket(u, element(basis.row(j))).coeffs);
      }
      if (sb.dim() == before)
        return Subalgebra{this, Subspace::from_builder(sb)};
    }
    throw std::logic_error("subalgebra_closure: did not stabilize");
  }

  /// Jacobi identity on a basis triple; used by the property suites.
  bool jacobi_holds(std::size_t i, std::size_t j, std::size_t k) const
  {
    std::map<int, Rat> acc;
    auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
      for (const auto& [m, cm] : bracket_basis(a, b))
        for (const auto& [n, cn] : bracket_basis(static_cast<std::size_t>(m), c))
          acc[n] += Rat(cm) * cn;
    };
    add_term(i, j, k);
    add_term(j, k, i);
    add_term(k, i, j);
    for (const auto& [idx, v] : acc)
      if (!reachlie::is_zero(v))
        return false;
    return true;
  }

private:
  // ---- signed root ids: [0, npos) positive, [npos, 2 npos) negative ----
  int sid_neg(int a) const
  {
    return a < static_cast<int>(m_npos) ? a + static_cast<int>(m_npos)
                                        : a - static_cast<int>(m_npos);
  }
  bool sid_positive(int a) const { return a < static_cast<int>(m_npos); }

  std::vector<int> sid_coords(int a) const
  {
    std::vector<int> c = m_rs.root(static_cast<std::size_t>(
                                       sid_positive(a) ? a : a - static_cast<int>(m_npos)))
                             .coords;
    if (!sid_positive(a))
      for (int& v : c)
        v = -v;
    return c;
  }

  /// Signed id of the root with the given coords, or -1.
  int sid_of(const std::vector<int>& coords) const
  {
    int idx = m_rs.index_of(coords);
    if (idx >= 0)
      return idx;
    std::vector<int> neg = coords;
    for (int& v : neg)
      v = -v;
    idx = m_rs.index_of(neg);
    return idx >= 0 ? idx + static_cast<int>(m_npos) : -1;
  }

  static std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b)
  {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[i] = a[i] + b[i];
    return c;
  }
  static std::vector<int> vec_sub(const std::vector<int>& a, const std::vector<int>& b)
  {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      c[i] = a[i] - b[i];
    return c;
  }

  /// Depth of the a-string through b: max k with b - k a a root.
  int string_depth(int a, int b) const
  {
    std::vector<int> va = sid_coords(a), v = sid_coords(b);
    int p = 0;
    for (;;) {
      v = vec_sub(v, va);
      bool zero = true;
      for (int c : v)
        if (c != 0) {
          zero = false;
          break;
        }
      if (zero || sid_of(v) < 0)
        break;
      ++p;
    }
    return p;
  }

  void build_extraspecial()
  {
    m_extra.assign(m_npos, {-1, -1});
    for (std::size_t g = 0; g < m_npos; ++g) {
      if (m_rs.root(g).height() == 1)
        continue;
      for (std::size_t a = 0; a < g; ++a) {
        int b = m_rs.index_of(vec_sub(m_rs.root(g).coords, m_rs.root(a).coords));
        if (b >= 0) {
          m_extra[g] = {static_cast<int>(a), b};
          break;
        }
      }
      if (m_extra[g].first < 0)
        throw std::logic_error("extraspecial pair missing for a non-simple root");
    }
  }

  /// Chevalley constant N_{a,b} on signed root ids ([e_a, e_b] = N e_{a+b}).
  long structure_n(int a, int b)
  {
    std::vector<int> vc = vec_add(sid_coords(a), sid_coords(b));
    int c = sid_of(vc);
    if (c < 0)
      return 0;
    auto key = std::make_pair(a, b);
    auto it = m_nmemo.find(key);
    if (it != m_nmemo.end())
      return it->second;
    long value;
    bool pa = sid_positive(a), pb = sid_positive(b);
    if (!pa && !pb) {
      value = -structure_n(sid_neg(a), sid_neg(b));
    } else if (!pa && pb) {
      value = -structure_n(b, a);
    } else if (pa && !pb) {
      // three-root identity on (a, b, -c)
      long l_c = m_rs.len2(vc);
      if (sid_positive(c)) {
        Rat ratio(-l_c, m_rs.len2(sid_coords(a)));
        ratio.canonicalize();
        value = rat_to_integer(ratio * structure_n(sid_neg(b), c), "mixed-sign constant");
      } else {
        Rat ratio(l_c, m_rs.len2(sid_coords(b)));
        ratio.canonicalize();
        value = rat_to_integer(ratio * structure_n(sid_neg(c), a), "mixed-sign constant");
      }
    } else {
      // both positive, c a positive root
      if (a > b) {
        value = -structure_n(b, a);
      } else {
        auto [a1, b1] = m_extra[static_cast<std::size_t>(c)];
        if (a == a1) {
          value = string_depth(a, b) + 1; // extraspecial normalization
        } else {
          // four-root identity on (a1, b1, -a, -b)
          std::vector<int> d1 = vec_sub(sid_coords(b1), sid_coords(a));
          std::vector<int> d2 = vec_sub(sid_coords(a1), sid_coords(a));
          Rat term1 = Rat(structure_n(b1, sid_neg(a))) * structure_n(a1, sid_neg(b));
          Rat term2 = Rat(structure_n(sid_neg(a), a1)) * structure_n(b1, sid_neg(b));
          Rat v = Rat(m_rs.len2(vc)) *
                  (term1 / m_rs.inner(d1, d1) + term2 / m_rs.inner(d2, d2)) /
                  structure_n(a1, b1);
          value = rat_to_integer(v, "special-pair constant");
        }
      }
    }
    m_nmemo.emplace(key, value);
    return value;
  }

  static long rat_to_integer(const Rat& v, const char* what)
  {
    if (v.get_den() != 1)
      throw std::logic_error(std::string("LieAlgebra: non-integral ") + what);
    return mpz_get_si(v.get_num().get_mpz_t());
  }

  void push(std::size_t i, std::size_t j, int k, long c)
  {
    if (c != 0)
      m_table[i * m_dim + j].emplace_back(k, c);
  }

  void build_table()
  {
    m_table.assign(m_dim * m_dim, {});
    const int R = static_cast<int>(m_npos);
    // root-root constants
    for (int a = 0; a < R; ++a) {
      for (int b = 0; b < R; ++b) {
        if (a == b)
          continue;
        // [x_a, x_b]
        {
          int c = sid_of(vec_add(sid_coords(a), sid_coords(b)));
          if (c >= 0) {
            long n = structure_n(a, b);
            check_root_constant(n);
            push(x_index(static_cast<std::size_t>(a)), x_index(static_cast<std::size_t>(b)),
                 c, n);
          }
        }
        // [y_a, y_b] = -N_{a,b} y_{a+b}
        {
          int c = sid_of(vec_add(sid_coords(a), sid_coords(b)));
          if (c >= 0) {
            long n = structure_n(sid_neg(a), sid_neg(b));
            check_root_constant(n);
            push(y_index(static_cast<std::size_t>(a)), y_index(static_cast<std::size_t>(b)),
                 static_cast<int>(m_npos) + c, n);
          }
        }
        // [x_a, y_b] with a != b
        {
          std::vector<int> d = vec_sub(sid_coords(a), sid_coords(b));
          int c = sid_of(d);
          if (c >= 0) {
            long n = structure_n(a, sid_neg(b));
            check_root_constant(n);
            int target = sid_positive(c) ? c : static_cast<int>(m_npos) + sid_neg(c);
            push(x_index(static_cast<std::size_t>(a)), y_index(static_cast<std::size_t>(b)),
                 target, n);
            push(y_index(static_cast<std::size_t>(b)), x_index(static_cast<std::size_t>(a)),
                 target, -n);
          }
        }
      }
    }
    // [x_a, y_a] = h_{a^vee}
    for (int a = 0; a < R; ++a) {
      auto cc = m_rs.coroot_coords(m_rs.root(static_cast<std::size_t>(a)).coords);
      for (int i = 0; i < m_rs.rank(); ++i) {
        push(x_index(static_cast<std::size_t>(a)), y_index(static_cast<std::size_t>(a)),
             static_cast<int>(h_index(i)), cc[static_cast<std::size_t>(i)]);
        push(y_index(static_cast<std::size_t>(a)), x_index(static_cast<std::size_t>(a)),
             static_cast<int>(h_index(i)), -cc[static_cast<std::size_t>(i)]);
      }
    }
    // Cartan action
    for (int i = 0; i < m_rs.rank(); ++i) {
      for (int a = 0; a < R; ++a) {
        long k = m_rs.pairing_with_simple_coroot(m_rs.root(static_cast<std::size_t>(a)).coords, i);
        push(h_index(i), x_index(static_cast<std::size_t>(a)), a, k);
        push(x_index(static_cast<std::size_t>(a)), h_index(i), a, -k);
        push(h_index(i), y_index(static_cast<std::size_t>(a)), static_cast<int>(m_npos) + a, -k);
        push(y_index(static_cast<std::size_t>(a)), h_index(i), static_cast<int>(m_npos) + a, k);
      }
    }
    m_nmemo.clear();
  }

  static void check_root_constant(long n)
  {
    if (n == 0 || n > 3 || n < -3)
      throw std::logic_error("LieAlgebra: root-root constant out of range");
  }

  RootSystem m_rs;
  std::size_t m_npos = 0, m_dim = 0;
  std::vector<std::pair<int, int>> m_extra; // gamma -> extraspecial (a, b)
  std::map<std::pair<int, int>, long> m_nmemo;
  std::vector<std::vector<std::pair<int, long>>> m_table;
};

/// Convenience used by tests and tools.
inline LieAlgebra build_algebra(const LieType& t) { return LieAlgebra(t); }

} // namespace reachlie

#endif
