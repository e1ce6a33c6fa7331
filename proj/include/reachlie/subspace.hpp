#ifndef REACHLIE_SUBSPACE_HPP
#define REACHLIE_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reachlie/matrix.hpp"

namespace reachlie {

/// Incrementally built linear span. Rows are kept in canonical RREF at all
/// times, so the final basis can be handed to Subspace unchanged.
class SpanBuilder
{
public:
  explicit SpanBuilder(std::size_t ambient) : m_ambient(ambient) {}

  std::size_t ambient() const { return m_ambient; }
  std::size_t dim() const { return m_rows.size(); }

  /// Reduce v against the current rows; returns the residue.
  QVector reduce(QVector v) const
  {
    for (std::size_t i = 0; i < m_rows.size(); ++i) {
      const Rat& c = v[m_pivots[i]];
      if (is_zero(c))
        continue;
      Rat f = c;
      const QVector& row = m_rows[i];
      for (std::size_t j = m_pivots[i]; j < m_ambient; ++j)
        if (!is_zero(row[j]))
          v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const QVector& v) const
  {
    QVector r = reduce(v);
    for (const Rat& c : r)
      if (!is_zero(c))
        return false;
    return true;
  }

  /// Insert a vector; returns true when it enlarged the span.
  bool insert(QVector v)
  {
    if (v.size() != m_ambient)
      throw std::invalid_argument("SpanBuilder::insert: ambient mismatch");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < m_ambient && is_zero(v[p]))
      ++p;
    if (p == m_ambient)
      return false;
    Rat inv = 1 / v[p];
    v[p] = 1;
    for (std::size_t j = p + 1; j < m_ambient; ++j)
      if (!is_zero(v[j]))
        v[j] *= inv;
    // back-eliminate the new pivot column from existing rows
    for (std::size_t i = 0; i < m_rows.size(); ++i) {
      Rat f = m_rows[i][p];
      if (is_zero(f))
        continue;
      m_rows[i][p] = 0;
      for (std::size_t j = p + 1; j < m_ambient; ++j)
        if (!is_zero(v[j]))
          m_rows[i][j] -= f * v[j];
    }
    std::size_t pos = 0;
    while (pos < m_pivots.size() && m_pivots[pos] < p)
      ++pos;
    m_pivots.insert(m_pivots.begin() + static_cast<long>(pos), p);
    m_rows.insert(m_rows.begin() + static_cast<long>(pos), std::move(v));
    return true;
  }

  QMatrix basis() const { return QMatrix::from_rows(m_rows, m_ambient); }

private:
  std::size_t m_ambient;
  std::vector<QVector> m_rows;
  std::vector<std::size_t> m_pivots;
};

/// Linear subspace of Q^n in canonical form: the stored basis is the RREF of
/// any generating set, so two subspaces are equal as sets exactly when their
/// bases compare equal.
class Subspace
{
public:
  explicit Subspace(std::size_t ambient) : m_ambient(ambient), m_basis(0, ambient) {}

  /// Span of the rows of gen.
  static Subspace span(const QMatrix& gen)
  {
    Subspace s(gen.cols());
    auto [r, rank] = rref(gen);
    QMatrix b(rank, gen.cols());
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < gen.cols(); ++j)
        b(i, j) = r(i, j);
    s.m_basis = std::move(b);
    return s;
  }

  static Subspace from_builder(const SpanBuilder& sb)
  {
    Subspace s(sb.ambient());
    s.m_basis = sb.basis();
    return s;
  }

  static Subspace full(std::size_t ambient)
  {
    Subspace s(ambient);
    s.m_basis = QMatrix::identity(ambient);
    return s;
  }

  std::size_t ambient_dim() const { return m_ambient; }
  std::size_t dim() const { return m_basis.rows(); }
  const QMatrix& basis() const { return m_basis; }

  bool operator==(const Subspace& o) const
  {
    return m_ambient == o.m_ambient && m_basis == o.m_basis;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const QVector& v) const
  {
    if (v.size() != m_ambient)
      throw std::invalid_argument("Subspace::contains: ambient mismatch");
    QVector w = v;
    for (std::size_t i = 0; i < m_basis.rows(); ++i) {
      std::size_t p = 0;
      while (p < m_ambient && is_zero(m_basis(i, p)))
        ++p;
      if (p == m_ambient || is_zero(w[p]))
        continue;
      Rat f = w[p];
      for (std::size_t j = p; j < m_ambient; ++j)
        if (!is_zero(m_basis(i, j)))
          w[j] -= f * m_basis(i, j);
    }
    for (const Rat& c : w)
      if (!is_zero(c))
        return false;
    return true;
  }

  Subspace sum(const Subspace& o) const
  {
    check_ambient(o);
    QMatrix gen(dim() + o.dim(), m_ambient);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < m_ambient; ++j)
        gen(i, j) = m_basis(i, j);
    for (std::size_t i = 0; i < o.dim(); ++i)
      for (std::size_t j = 0; j < m_ambient; ++j)
        gen(dim() + i, j) = o.m_basis(i, j);
    return span(gen);
  }

  /// Zassenhaus: rref of [A|A; B|0] — rows with zero left half carry the
  /// intersection in their right half.
  Subspace intersect(const Subspace& o) const
  {
    check_ambient(o);
    const std::size_t n = m_ambient;
    QMatrix z(dim() + o.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        z(i, j) = m_basis(i, j);
        z(i, n + j) = m_basis(i, j);
      }
    for (std::size_t i = 0; i < o.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        z(dim() + i, j) = o.m_basis(i, j);
    std::size_t rank = rref_in_place(z);
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < rank; ++i) {
      bool left_zero = true;
      for (std::size_t j = 0; j < n && left_zero; ++j)
        left_zero = is_zero(z(i, j));
      if (!left_zero)
        continue;
      QVector v(n);
      for (std::size_t j = 0; j < n; ++j)
        v[j] = z(i, n + j);
      rows.push_back(std::move(v));
    }
    return span(QMatrix::from_rows(std::move(rows), n));
  }

private:
  void check_ambient(const Subspace& o) const
  {
    if (m_ambient != o.m_ambient)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  std::size_t m_ambient;
  QMatrix m_basis;
};

/// Kernel {v : m v = 0} as a canonical Subspace.
inline Subspace nullspace(const QMatrix& m)
{
  const std::size_t nc = m.cols();
  auto [r, rank] = rref(m);
  auto piv = pivot_columns(r, rank);
  std::vector<bool> is_piv(nc, false);
  for (std::size_t c : piv)
    is_piv[c] = true;
  std::vector<QVector> rows;
  rows.reserve(nc - rank);
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_piv[f])
      continue;
    QVector v(nc, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i)
      v[piv[i]] = -r(i, f);
    rows.push_back(std::move(v));
  }
  return Subspace::span(QMatrix::from_rows(std::move(rows), nc));
}

} // namespace reachlie

#endif
