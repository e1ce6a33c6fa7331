#ifndef REACHLIE_MATRIX_HPP
#define REACHLIE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reachlie/rational.hpp"

namespace reachlie {

using QVector = std::vector<Rat>;

/// Dense matrix over the rationals. Entries are always reduced fractions
/// (mpq_class keeps them canonical).
class QMatrix
{
public:
  QMatrix() : m_rows(0), m_cols(0) {}

  QMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

  QMatrix(std::initializer_list<std::initializer_list<long>> rows)
  {
    m_rows = rows.size();
    m_cols = m_rows == 0 ? 0 : rows.begin()->size();
    m_data.reserve(m_rows * m_cols);
    for (const auto& r : rows) {
      if (r.size() != m_cols)
        throw std::invalid_argument("QMatrix: ragged initializer");
      for (long v : r)
        m_data.emplace_back(v);
    }
  }

  static QMatrix identity(std::size_t n)
  {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(std::vector<QVector> rows, std::size_t cols)
  {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("QMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Rat& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

  QVector row(std::size_t i) const
  {
    return QVector(m_data.begin() + static_cast<long>(i * m_cols),
                   m_data.begin() + static_cast<long>((i + 1) * m_cols));
  }

  bool operator==(const QMatrix& o) const
  {
    return m_rows == o.m_rows && m_cols == o.m_cols && m_data == o.m_data;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  QVector apply(const QVector& v) const
  {
    if (v.size() != m_cols)
      throw std::invalid_argument("QMatrix::apply: size mismatch");
    QVector out(m_rows, Rat(0));
    for (std::size_t i = 0; i < m_rows; ++i) {
      Rat acc(0);
      for (std::size_t j = 0; j < m_cols; ++j) {
        const Rat& a = (*this)(i, j);
        if (!is_zero(a) && !is_zero(v[j]))
          acc += a * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  QMatrix multiply(const QMatrix& o) const
  {
    if (m_cols != o.m_rows)
      throw std::invalid_argument("QMatrix::multiply: size mismatch");
    QMatrix out(m_rows, o.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t k = 0; k < m_cols; ++k) {
        const Rat& a = (*this)(i, k);
        if (is_zero(a))
          continue;
        for (std::size_t j = 0; j < o.m_cols; ++j)
          if (!is_zero(o(k, j)))
            out(i, j) += a * o(k, j);
      }
    return out;
  }

  QMatrix transposed() const
  {
    QMatrix out(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
      for (std::size_t j = 0; j < m_cols; ++j)
        out(j, i) = (*this)(i, j);
    return out;
  }

  std::string str() const
  {
    std::string s;
    for (std::size_t i = 0; i < m_rows; ++i) {
      s += "[ ";
      for (std::size_t j = 0; j < m_cols; ++j) {
        s += to_string((*this)(i, j));
        s += ' ';
      }
      s += "]\n";
    }
    return s;
  }

private:
  std::size_t m_rows, m_cols;
  std::vector<Rat> m_data;
};

/// In-place Gauss-Jordan reduction to canonical reduced row-echelon form.
/// Returns the rank.
inline std::size_t rref_in_place(QMatrix& m)
{
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && is_zero(m(piv, c)))
      ++piv;
    if (piv == nr)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < nc; ++j)
        swap(m(r, j), m(piv, j));
    // normalize pivot to 1
    Rat inv = 1 / m(r, c);
    m(r, c) = 1;
    for (std::size_t j = c + 1; j < nc; ++j)
      if (!is_zero(m(r, j)))
        m(r, j) *= inv;
    // clear the column everywhere else
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || is_zero(m(i, c)))
        continue;
      Rat f = m(i, c);
      m(i, c) = 0;
      for (std::size_t j = c + 1; j < nc; ++j)
        if (!is_zero(m(r, j)))
          m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Canonical reduced row-echelon form and rank.
inline std::pair<QMatrix, std::size_t> rref(const QMatrix& m)
{
  QMatrix out = m;
  std::size_t rank = rref_in_place(out);
  return {std::move(out), rank};
}

inline std::size_t rank(const QMatrix& m)
{
  QMatrix tmp = m;
  return rref_in_place(tmp);
}

/// Pivot columns of a matrix already in RREF.
inline std::vector<std::size_t> pivot_columns(const QMatrix& r, std::size_t rank)
{
  std::vector<std::size_t> piv;
  piv.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (c < r.cols() && is_zero(r(i, c)))
      ++c;
    piv.push_back(c);
  }
  return piv;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: rhs length mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::size_t rank = rref_in_place(aug);
  auto piv = pivot_columns(aug, rank);
  if (!piv.empty() && piv.back() == m.cols())
    return std::nullopt; // pivot in the augmented column
  QVector x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[piv[i]] = aug(i, m.cols());
  return x;
}

} // namespace reachlie

#endif
