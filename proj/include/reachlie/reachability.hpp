#ifndef REACHLIE_REACHABILITY_HPP
#define REACHLIE_REACHABILITY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "reachlie/catalog.hpp"
#include "reachlie/graded.hpp"
#include "reachlie/orbits.hpp"

namespace reachlie {

/// Computed verdicts for one nilpotent orbit.
struct ReachabilityVerdict
{
  OrbitRecord orbit;
  bool reachable = false;
  bool strongly_reachable = false;
  bool panyushev_generated = false;
  std::size_t dim_centralizer = 0;
  std::size_t dim_derived = 0;
};

namespace detail {

inline QVector component_coords(const GradedComponents& g, int degree, const Element& e)
{
  const auto* c = g.component(degree);
  QVector out(c ? c->size() : 0, Rat(0));
  if (c)
    for (std::size_t s = 0; s < c->size(); ++s)
      out[s] = e.coeffs[(*c)[s]];
  return out;
}

struct OrbitAnalysis
{
  GradedComponents grade;
  QVector e2;
  CentralizerPieces centralizer;
  DerivedPieces derived;
};

inline OrbitAnalysis analyze(const LieAlgebra& L, const WeightedDynkinDiagram& d,
                             const Element& e)
{
  OrbitAnalysis a;
  a.grade = grade_by_diagram(L, d);
  a.e2 = component_coords(a.grade, 2, e);
  {
    // e must live in g(2) of its own grading
    Element rest = e;
    if (const auto* c2 = a.grade.component(2))
      for (std::size_t idx : *c2)
        rest.coeffs[idx] = 0;
    if (!rest.is_zero())
      throw std::invalid_argument("analyze: representative not in g(2)");
  }
  a.centralizer = centralizer_pieces(a.grade, a.e2);
  a.derived = derived_pieces(a.grade, a.centralizer);
  return a;
}

inline bool reachable_from(const OrbitAnalysis& a)
{
  auto it = a.derived.piece.find(2);
  return it != a.derived.piece.end() && it->second.contains(a.e2);
}

inline bool panyushev_from(const OrbitAnalysis& a)
{
  std::size_t positive = 0;
  for (const auto& [k, m] : a.centralizer.piece)
    if (k >= 1)
      positive += m.rows();
  return panyushev_closure_dim(a.grade, a.centralizer) == positive;
}

} // namespace detail

/// e in [g_e, g_e]?
inline bool is_reachable(const LieAlgebra& L, const OrbitRecord& o)
{
  return detail::reachable_from(detail::analyze(L, o.diagram, o.triple.e));
}

/// g_e = [g_e, g_e]?
inline bool is_strongly_reachable(const LieAlgebra& L, const OrbitRecord& o)
{
  auto a = detail::analyze(L, o.diagram, o.triple.e);
  return a.derived.total_dim() == a.centralizer.total_dim();
}

/// Is g(>=1)_e generated as a Lie algebra by g(1)_e?
inline bool panyushev_generated(const LieAlgebra& L, const OrbitRecord& o)
{
  return detail::panyushev_from(detail::analyze(L, o.diagram, o.triple.e));
}

inline ReachabilityVerdict orbit_verdict(const LieAlgebra& L, const OrbitRecord& o)
{
  auto a = detail::analyze(L, o.diagram, o.triple.e);
  ReachabilityVerdict v;
  v.orbit = o;
  v.dim_centralizer = a.centralizer.total_dim();
  v.dim_derived = a.derived.total_dim();
  v.reachable = detail::reachable_from(a);
  v.strongly_reachable = (v.dim_derived == v.dim_centralizer);
  v.panyushev_generated = detail::panyushev_from(a);
  return v;
}

/// Verdicts for every nonzero nilpotent orbit of the type, diagram-sorted.
/// Per-orbit work runs on a small thread pool; assembly order is fixed.
inline std::vector<ReachabilityVerdict>
check_type(const LieAlgebra& L, std::uint64_t seed = 0,
           const std::vector<CatalogEntry>* catalog = nullptr, unsigned threads = 0)
{
  if (threads == 0) {
    unsigned hc = std::thread::hardware_concurrency();
    threads = hc == 0 ? 1 : hc;
  }
  std::vector<OrbitRecord> orbits = classify_orbits(L, seed, catalog, threads);
  std::vector<ReachabilityVerdict> out(orbits.size());
  if (threads <= 1 || orbits.size() <= 1) {
    for (std::size_t i = 0; i < orbits.size(); ++i)
      out[i] = orbit_verdict(L, orbits[i]);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < orbits.size(); i += threads)
          out[i] = orbit_verdict(L, orbits[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool)
    th.join();
  for (auto& err : errors)
    if (err)
      std::rethrow_exception(err);
  return out;
}

inline std::vector<VerdictSummary> to_summaries(const std::vector<ReachabilityVerdict>& vs)
{
  std::vector<VerdictSummary> out;
  out.reserve(vs.size());
  for (const ReachabilityVerdict& v : vs)
    out.push_back(VerdictSummary{v.orbit.diagram, v.orbit.label, v.reachable,
                                 v.strongly_reachable, v.orbit.rigid, v.dim_centralizer,
                                 v.dim_derived});
  return out;
}

/// Structured report for the E7 orbit A3+A2: the derived algebra of the
/// centralizer has dimension 33 and meets g(2) in a 7-dimensional space that
/// contains a sign-variant of the representative but not the representative
/// itself.
struct E7ExampleReport
{
  WeightedDynkinDiagram diagram;
  std::string label;
  std::size_t dim_centralizer = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_g2_cap_derived = 0;
  bool e_in_derived = true;

  bool has_unit_support = false;           // 5 root vectors, coefficients 1
  std::vector<std::vector<int>> support;   // root coords of the representative
  std::size_t support_intersection_dim = 0;
  std::vector<int> sign_variant;           // signs on the support, when found
  bool sign_variant_in_derived = false;
};

namespace detail {

/// Do the roots (by component position) form a simple system of type
/// A3 + A2? All mutual Cartan integers must be nonpositive and the bond
/// graph two simple chains of sizes 3 and 2.
inline bool support_is_a3_plus_a2(const RootSystem& rs,
                                  const std::vector<std::vector<int>>& roots)
{
  const std::size_t n = roots.size();
  if (n != 5)
    return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long p = rs.pairing(roots[i], roots[j]);
      if (p > 0)
        return false;
      if (p != 0) {
        adj[i][j] = adj[j][i] = true;
        ++edges;
      }
    }
  if (edges != 3)
    return false;
  // connected components by size, each a path (max degree <= 2)
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    std::vector<std::size_t> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (adj[u][v] && comp[v] < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  if (nc != 2)
    return false;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(nc), 0);
  for (std::size_t i = 0; i < n; ++i)
    ++sizes[static_cast<std::size_t>(comp[i])];
  std::sort(sizes.begin(), sizes.end());
  if (sizes != std::vector<std::size_t>{2, 3})
    return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      deg += adj[i][j] ? 1 : 0;
    if (deg > 2)
      return false;
  }
  return true;
}

} // namespace detail

inline E7ExampleReport e7_example(const LieAlgebra& L, const std::vector<CatalogEntry>& catalog,
                                  std::uint64_t seed = 0)
{
  if (L.rootsystem().type() != LieType(Family::E, 7))
    throw std::invalid_argument("e7_example: needs the E7 algebra");
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& c : catalog)
    if (c.label == "A3+A2")
      entry = &c;
  if (!entry)
    throw CatalogError("e7_example: no catalog entry labeled A3+A2");

  E7ExampleReport rep;
  rep.diagram = entry->diagram;
  rep.label = entry->label;

  GradedComponents g = grade_by_diagram(L, entry->diagram);
  const auto* c2 = g.component(2);
  const std::size_t d2 = c2->size();
  const RootSystem& rs = L.rootsystem();

  // search for a representative that is a sum of 5 root vectors whose
  // mutual Dynkin diagram is A3+A2
  std::optional<std::vector<std::size_t>> found;
  std::vector<std::size_t> idx{0, 1, 2, 3, 4};
  if (d2 >= 5) {
    for (;;) {
      std::vector<std::vector<int>> roots;
      for (std::size_t i : idx)
        roots.push_back(rs.root((*c2)[i]).coords);
      if (detail::support_is_a3_plus_a2(rs, roots)) {
        std::vector<long> e2(d2, 0);
        for (std::size_t i : idx)
          e2[i] = 1;
        if (detail::sl2_solvable_modp(g, e2) && detail::sl2_solvable_exact(g, e2)) {
          found = idx;
          break;
        }
      }
      std::size_t i = 5;
      while (i > 0 && idx[i - 1] == d2 - 5 + i - 1)
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t j = i; j < 5; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }

  Element e = found ? detail::element_from_component(
                          g, 2,
                          [&] {
                            std::vector<long> e2(d2, 0);
                            for (std::size_t i : *found)
                              e2[i] = 1;
                            return e2;
                          }())
                    : find_representative(L, entry->diagram, seed);
  Element h = h_from_diagram(L, entry->diagram);
  sl2_complete(L, h, e); // relations must hold for the representative

  auto a = detail::analyze(L, entry->diagram, e);
  rep.dim_centralizer = a.centralizer.total_dim();
  rep.dim_derived = a.derived.total_dim();
  rep.dim_g2_cap_derived = a.derived.dim_at(2);
  rep.e_in_derived = detail::reachable_from(a);

  if (found) {
    rep.has_unit_support = true;
    for (std::size_t i : *found)
      rep.support.push_back(rs.root((*c2)[i]).coords);
    // intersection of [g_e,g_e] with the span of the support root vectors
    QMatrix sel(5, d2);
    for (std::size_t r = 0; r < 5; ++r)
      sel(r, (*found)[r]) = 1;
    Subspace v = Subspace::span(sel);
    auto der2 = a.derived.piece.find(2);
    Subspace w = der2 == a.derived.piece.end() ? Subspace(d2) : v.intersect(der2->second);
    rep.support_intersection_dim = w.dim();
    if (w.dim() == 1) {
      QVector gen = w.basis().row(0);
      bool unit_signs = true;
      std::vector<int> signs;
      for (std::size_t r = 0; r < 5; ++r) {
        const Rat& cval = gen[(*found)[r]];
        if (cval == Rat(1))
          signs.push_back(1);
        else if (cval == Rat(-1))
          signs.push_back(-1);
        else
          unit_signs = false;
      }
      for (std::size_t j = 0; j < d2 && unit_signs; ++j) {
        bool in_support = false;
        for (std::size_t r = 0; r < 5; ++r)
          in_support = in_support || (*found)[r] == j;
        if (!in_support && !is_zero(gen[j]))
          unit_signs = false;
      }
      bool proportional_to_e = unit_signs;
      for (std::size_t r = 1; r < signs.size() && proportional_to_e; ++r)
        proportional_to_e = (signs[r] == signs[0]);
      if (unit_signs && !proportional_to_e) {
        rep.sign_variant = signs;
        rep.sign_variant_in_derived = true; // the generator lies in [g_e,g_e] by construction
      }
    }
  }
  return rep;
}

} // namespace reachlie

#endif
