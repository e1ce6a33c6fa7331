#ifndef REACHLIE_GRADED_HPP
#define REACHLIE_GRADED_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reachlie/chevalley.hpp"
#include "reachlie/diagram.hpp"
#include "reachlie/matrix.hpp"
#include "reachlie/subspace.hpp"

namespace reachlie {

/// The eigenspace decomposition of ad h for the Cartan element h attached to
/// a weighted diagram. Every component is spanned by Chevalley basis vectors,
/// so it is stored as index lists; all heavy computations downstream run in
/// these small component coordinates.
struct GradedComponents
{
  const LieAlgebra* algebra = nullptr;
  WeightedDynkinDiagram diagram;
  std::vector<int> eig;    // ad h eigenvalue of each basis vector
  std::vector<int> pos;    // position of each basis vector inside its component
  std::map<int, std::vector<std::size_t>> comp;

  const std::vector<std::size_t>* component(int degree) const
  {
    auto it = comp.find(degree);
    return it == comp.end() ? nullptr : &it->second;
  }
  std::size_t component_dim(int degree) const
  {
    const auto* c = component(degree);
    return c ? c->size() : 0;
  }
};

inline GradedComponents grade_by_diagram(const LieAlgebra& L, const WeightedDynkinDiagram& d)
{
  if (d.rank() != static_cast<std::size_t>(L.rank()))
    throw std::invalid_argument("grade_by_diagram: diagram rank mismatch");
  GradedComponents g;
  g.algebra = &L;
  g.diagram = d;
  g.eig.resize(L.dim());
  g.pos.resize(L.dim());
  const RootSystem& rs = L.rootsystem();
  for (std::size_t a = 0; a < L.num_positive(); ++a) {
    int v = 0;
    for (int i = 0; i < L.rank(); ++i)
      v += rs.root(a).coords[static_cast<std::size_t>(i)] * d.weights[static_cast<std::size_t>(i)];
    g.eig[L.x_index(a)] = v;
    g.eig[L.y_index(a)] = -v;
  }
  for (int i = 0; i < L.rank(); ++i)
    g.eig[L.h_index(i)] = 0;
  for (std::size_t b = 0; b < L.dim(); ++b) {
    auto& list = g.comp[g.eig[b]];
    g.pos[b] = static_cast<int>(list.size());
    list.push_back(b);
  }
  return g;
}

/// Bracket of two vectors given in component coordinates; result in the
/// coordinates of the degree i+j component.
inline QVector bracket_in_components(const GradedComponents& g, int deg_u, const QVector& u,
                                     int deg_v, const QVector& v)
{
  const LieAlgebra& L = *g.algebra;
  const auto* cu = g.component(deg_u);
  const auto* cv = g.component(deg_v);
  const std::size_t out_dim = g.component_dim(deg_u + deg_v);
  QVector out(out_dim, Rat(0));
  if (!cu || !cv || out_dim == 0)
    return out;
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (is_zero(u[a]))
      continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (is_zero(v[b]))
        continue;
      for (const auto& [k, c] : L.bracket_basis((*cu)[a], (*cv)[b]))
        out[static_cast<std::size_t>(g.pos[static_cast<std::size_t>(k)])] +=
            u[a] * v[b] * c;
    }
  }
  return out;
}

/// Graded pieces g(k)_e = ker(ad e : g(k) -> g(k+2)) of the centralizer of
/// an element e of g(2). Pieces vanish for k < 0, which the computation
/// reproduces; only nonzero pieces are stored.
struct CentralizerPieces
{
  std::map<int, QMatrix> piece; // degree -> RREF basis rows in component coords

  std::size_t total_dim() const
  {
    std::size_t s = 0;
    for (const auto& [k, m] : piece)
      s += m.rows();
    return s;
  }
  std::size_t dim_at(int degree) const
  {
    auto it = piece.find(degree);
    return it == piece.end() ? 0 : it->second.rows();
  }
};

/// e is given in the coordinates of the degree-2 component.
inline CentralizerPieces centralizer_pieces(const GradedComponents& g, const QVector& e2)
{
  const LieAlgebra& L = *g.algebra;
  CentralizerPieces out;
  for (const auto& [k, members] : g.comp) {
    const auto* target = g.component(k + 2);
    if (!target || target->empty()) {
      // ad e is zero on this component: the whole component centralizes e
      out.piece.emplace(k, QMatrix::identity(members.size()));
      continue;
    }
    QMatrix m(target->size(), members.size());
    for (std::size_t c = 0; c < members.size(); ++c)
      for (std::size_t b = 0; b < e2.size(); ++b) {
        if (is_zero(e2[b]))
          continue;
        for (const auto& [idx, coef] :
             L.bracket_basis(members[c], (*g.component(2))[b]))
          m(static_cast<std::size_t>(g.pos[static_cast<std::size_t>(idx)]), c) +=
              e2[b] * coef;
      }
    Subspace ker = nullspace(m);
    if (ker.dim() > 0)
      out.piece.emplace(k, ker.basis());
  }
  return out;
}

/// Per-degree spans of [g_e, g_e], the derived subalgebra of the centralizer,
/// in component coordinates. Each degree is capped by dim g(d)_e, so spans
/// that fill their cap stop consuming bracket pairs.
struct DerivedPieces
{
  std::map<int, Subspace> piece;

  std::size_t total_dim() const
  {
    std::size_t s = 0;
    for (const auto& [k, sp] : piece)
      s += sp.dim();
    return s;
  }
  std::size_t dim_at(int degree) const
  {
    auto it = piece.find(degree);
    return it == piece.end() ? 0 : it->second.dim();
  }
};

inline DerivedPieces derived_pieces(const GradedComponents& g, const CentralizerPieces& z)
{
  std::map<int, SpanBuilder> spans;
  std::map<int, std::size_t> caps;
  for (const auto& [k, m] : z.piece)
    for (const auto& [l, m2] : z.piece) {
      int d = k + l;
      if (z.dim_at(d) == 0)
        continue;
      if (!spans.count(d)) {
        spans.emplace(d, SpanBuilder(g.component_dim(d)));
        caps[d] = z.dim_at(d);
      }
    }
  for (auto it = z.piece.begin(); it != z.piece.end(); ++it)
    for (auto jt = it; jt != z.piece.end(); ++jt) {
      int d = it->first + jt->first;
      auto st = spans.find(d);
      if (st == spans.end())
        continue;
      SpanBuilder& sb = st->second;
      const QMatrix& mu = it->second;
      const QMatrix& mv = jt->second;
      bool same = (it == jt);
      for (std::size_t a = 0; a < mu.rows() && sb.dim() < caps[d]; ++a) {
        QVector u = mu.row(a);
        std::size_t b0 = same ? a + 1 : 0;
        for (std::size_t b = b0; b < mv.rows() && sb.dim() < caps[d]; ++b)
          sb.insert(bracket_in_components(g, it->first, u, jt->first, mv.row(b)));
      }
    }
  DerivedPieces out;
  for (auto& [d, sb] : spans)
    if (sb.dim() > 0)
      out.piece.emplace(d, Subspace::from_builder(sb));
  return out;
}

/// Dimension of the subalgebra generated by g(1)_e inside g(>=1)_e, computed
/// degree by degree: the degree-d piece is [g(1)_e, C_{d-1}] (left-normed
/// brackets span a generated subalgebra).
inline std::size_t panyushev_closure_dim(const GradedComponents& g, const CentralizerPieces& z)
{
  auto p1 = z.piece.find(1);
  if (p1 == z.piece.end() || p1->second.rows() == 0)
    return 0;
  int maxdeg = z.piece.rbegin()->first;
  std::map<int, QMatrix> closure;
  closure.emplace(1, p1->second);
  std::size_t total = p1->second.rows();
  for (int d = 2; d <= maxdeg; ++d) {
    std::size_t cap = z.dim_at(d);
    auto prev = closure.find(d - 1);
    if (cap == 0 || prev == closure.end())
      continue;
    SpanBuilder sb(g.component_dim(d));
    const QMatrix& c1 = p1->second;
    const QMatrix& cp = prev->second;
    for (std::size_t a = 0; a < c1.rows() && sb.dim() < cap; ++a) {
      QVector u = c1.row(a);
      for (std::size_t b = 0; b < cp.rows() && sb.dim() < cap; ++b)
        sb.insert(bracket_in_components(g, 1, u, d - 1, cp.row(b)));
    }
    if (sb.dim() > 0) {
      closure.emplace(d, sb.basis());
      total += sb.dim();
    }
  }
  return total;
}

/// Span of [g(0)_e, g(1)_e] in the degree-1 component; equals g(1)_e for
/// every nilpotent orbit.
inline Subspace bracket_z0_z1(const GradedComponents& g, const CentralizerPieces& z)
{
  SpanBuilder sb(g.component_dim(1));
  auto p0 = z.piece.find(0);
  auto p1 = z.piece.find(1);
  if (p0 != z.piece.end() && p1 != z.piece.end())
    for (std::size_t a = 0; a < p0->second.rows(); ++a) {
      QVector u = p0->second.row(a);
      for (std::size_t b = 0; b < p1->second.rows(); ++b)
        sb.insert(bracket_in_components(g, 0, u, 1, p1->second.row(b)));
    }
  return Subspace::from_builder(sb);
}

} // namespace reachlie

#endif
