#ifndef REACHLIE_ORBITS_HPP
#define REACHLIE_ORBITS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "reachlie/catalog.hpp"
#include "reachlie/chevalley.hpp"
#include "reachlie/diagram.hpp"
#include "reachlie/graded.hpp"
#include "reachlie/modp.hpp"
#include "reachlie/rng.hpp"

namespace reachlie {

/// (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct SL2Triple
{
  Element e, h, f;
};

/// ad h eigenspace decomposition; components keyed by integer degree.
struct Grading
{
  std::map<long, Subspace> components;

  std::size_t dim_at(long k) const
  {
    auto it = components.find(k);
    return it == components.end() ? 0 : it->second.dim();
  }
};

/// A classified nilpotent orbit: characteristic, a completed sl2-triple and
/// computed/catalog metadata.
struct OrbitRecord
{
  WeightedDynkinDiagram diagram;
  SL2Triple triple;
  std::size_t centralizer_dim = 0;
  std::string label;       // from the catalog; empty when not found
  bool rigid = false;      // from the catalog
  bool in_catalog = false;

  std::size_t orbit_dim() const
  {
    return triple.e.algebra->dim() - centralizer_dim;
  }
};

/// The Cartan element h with alpha_i(h) = weights[i] for every simple root.
inline Element h_from_diagram(const LieAlgebra& L, const WeightedDynkinDiagram& d)
{
  const int n = L.rank();
  if (d.rank() != static_cast<std::size_t>(n))
    throw std::invalid_argument("h_from_diagram: rank mismatch");
  // alpha_j(sum_i c_i h_i) = sum_i c_i C[i][j]
  QMatrix ct(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ct(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
          L.rootsystem().cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  QVector rhs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    rhs[static_cast<std::size_t>(j)] = d.weights[static_cast<std::size_t>(j)];
  auto c = solve(ct, rhs);
  if (!c)
    throw std::logic_error("h_from_diagram: Cartan matrix is singular");
  Element h = L.zero();
  for (int i = 0; i < n; ++i)
    h.coeffs[L.h_index(i)] = (*c)[static_cast<std::size_t>(i)];
  return h;
}

namespace detail {

/// Eigenvalue of ad h on each basis vector; throws unless ad h is diagonal
/// on the Chevalley basis with the required integrality.
inline std::vector<Rat> ad_eigenvalues(const LieAlgebra& L, const Element& h)
{
  std::vector<Rat> eig(L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    Element v = L.bracket(h, L.basis_element(j));
    Rat lambda = v.coeffs[j];
    v.coeffs[j] = 0;
    if (!v.is_zero())
      throw std::invalid_argument("ad h is not diagonal on the Chevalley basis");
    eig[j] = lambda;
  }
  return eig;
}

} // namespace detail

/// Eigenspace decomposition of ad h. Demands integer eigenvalues, which is
/// what characteristic elements provide.
inline Grading grading(const LieAlgebra& L, const Element& h)
{
  auto eig = detail::ad_eigenvalues(L, h);
  std::map<long, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    if (!is_integer(eig[j]))
      throw std::invalid_argument("grading: non-integer ad h eigenvalue");
    groups[to_long(eig[j])].push_back(j);
  }
  Grading g;
  for (const auto& [k, members] : groups) {
    QMatrix b(members.size(), L.dim());
    for (std::size_t r = 0; r < members.size(); ++r)
      b(r, members[r]) = 1;
    g.components.emplace(k, Subspace::span(b));
  }
  return g;
}

namespace detail {

/// Density test for a candidate diagram with witness e in g(2): the diagram
/// is kept exactly when [e, f] = h has a solution f in g(-2). Any solution
/// yields an honest sl2-triple (e, h, f), and a dominant h is then the
/// characteristic of the orbit of e; conversely every characteristic admits
/// such (e, f) for generic e. The equation lives entirely in g(0).
///
/// The mod-p screen decides consistency modulo 2^61 - 1; spurious answers
/// need p to divide specific minors, which random coefficients make
/// vanishingly unlikely, and accepted representatives are re-checked exactly
/// before use.
inline void fill_sl2_system(const GradedComponents& g, const std::vector<long>& e2,
                            QMatrix* exact, ModPMatrix* screen)
{
  const LieAlgebra& L = *g.algebra;
  const auto* cm2 = g.component(-2);
  const auto* c2 = g.component(2);
  for (std::size_t s = 0; s < cm2->size(); ++s)
    for (std::size_t t = 0; t < e2.size(); ++t) {
      if (e2[t] == 0)
        continue;
      // column s of [e, . ] : g(-2) -> g(0)
      for (const auto& [idx, coef] : L.bracket_basis((*c2)[t], (*cm2)[s])) {
        auto row = static_cast<std::size_t>(g.pos[static_cast<std::size_t>(idx)]);
        if (exact)
          (*exact)(row, s) += Rat(e2[t]) * coef;
        if (screen)
          screen->add(row, s, e2[t] * coef);
      }
    }
  // right-hand side h in the coordinates of g(0)
  const Element h = h_from_diagram(L, g.diagram);
  for (int i = 0; i < L.rank(); ++i) {
    auto row = static_cast<std::size_t>(g.pos[L.h_index(i)]);
    const Rat& v = h.coeffs[L.h_index(i)];
    if (exact)
      (*exact)(row, cm2->size()) = v;
    if (screen)
      screen->set(row, cm2->size(), v);
  }
}

inline bool sl2_solvable_modp(const GradedComponents& g, const std::vector<long>& e2)
{
  const std::size_t d0 = g.component_dim(0);
  const std::size_t dm2 = g.component_dim(-2);
  ModPMatrix m(d0, dm2 + 1);
  fill_sl2_system(g, e2, nullptr, &m);
  return m.consistent_as_augmented();
}

inline bool sl2_solvable_exact(const GradedComponents& g, const std::vector<long>& e2)
{
  const std::size_t d0 = g.component_dim(0);
  const std::size_t dm2 = g.component_dim(-2);
  QMatrix aug(d0, dm2 + 1);
  fill_sl2_system(g, e2, &aug, nullptr);
  QMatrix a(d0, dm2);
  QVector b(d0);
  for (std::size_t i = 0; i < d0; ++i) {
    for (std::size_t j = 0; j < dm2; ++j)
      a(i, j) = aug(i, j);
    b[i] = aug(i, dm2);
  }
  return solve(a, b).has_value();
}

inline Element element_from_component(const GradedComponents& g, int degree,
                                      const std::vector<long>& coeffs)
{
  Element e = g.algebra->zero();
  const auto* c = g.component(degree);
  for (std::size_t s = 0; s < coeffs.size(); ++s)
    if (coeffs[s] != 0)
      e.coeffs[(*c)[s]] = coeffs[s];
  return e;
}

/// One probabilistic density trial; a failing trial is retried by callers.
inline std::optional<std::vector<long>> density_trial(const GradedComponents& g, Rng& rng)
{
  std::vector<long> e2(g.component_dim(2));
  for (auto& v : e2)
    v = rng.range(-1000, 1000);
  if (sl2_solvable_modp(g, e2))
    return e2;
  return std::nullopt;
}

} // namespace detail

/// A representative e of the orbit with characteristic d: an element of g(2)
/// with dim [g(0), e] = dim g(2). Searches sums of distinct root vectors with
/// coefficient 1 by increasing support size (readable representatives), then
/// falls back to random integer coefficients.
inline Element find_representative(const LieAlgebra& L, const WeightedDynkinDiagram& d,
                                   std::uint64_t seed = 0)
{
  GradedComponents g = grade_by_diagram(L, d);
  const std::size_t d2 = g.component_dim(2);
  if (d2 == 0)
    throw std::invalid_argument("find_representative: empty degree-2 component");
  constexpr std::size_t budget = 20000;
  std::size_t tried = 0;
  const std::size_t max_support = std::min<std::size_t>(6, d2);
  for (std::size_t s = 1; s <= max_support && tried < budget; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i)
      idx[i] = i;
    for (;;) {
      if (tried++ >= budget)
        break;
      std::vector<long> e2(d2, 0);
      for (std::size_t i : idx)
        e2[i] = 1;
      if (detail::sl2_solvable_modp(g, e2) && detail::sl2_solvable_exact(g, e2))
        return detail::element_from_component(g, 2, e2);
      // next lexicographic combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == d2 - s + i - 1)
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng(derive_seed(seed, d.weights, 10000 + static_cast<std::uint64_t>(attempt)));
    if (auto e2 = detail::density_trial(g, rng))
      if (detail::sl2_solvable_exact(g, *e2))
        return detail::element_from_component(g, 2, *e2);
  }
  throw std::logic_error("find_representative: no dense element found");
}

/// A representative with random integer coefficients, independent of the
/// nice-support search; used to confirm that verdicts do not depend on the
/// choice of representative.
inline Element random_representative(const LieAlgebra& L, const WeightedDynkinDiagram& d,
                                     std::uint64_t seed = 0)
{
  GradedComponents g = grade_by_diagram(L, d);
  if (g.component_dim(2) == 0)
    throw std::invalid_argument("random_representative: empty degree-2 component");
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rng rng(derive_seed(seed, d.weights, 20000 + static_cast<std::uint64_t>(attempt)));
    if (auto e2 = detail::density_trial(g, rng))
      if (detail::sl2_solvable_exact(g, *e2))
        return detail::element_from_component(g, 2, *e2);
  }
  throw std::logic_error("random_representative: no dense element found");
}

/// Complete (h, e) with [h,e] = 2e and e dense to an sl2-triple by solving
/// [e, f] = h for f in the -2 eigenspace of ad h. All three relations are
/// verified exactly before returning.
inline SL2Triple sl2_complete(const LieAlgebra& L, const Element& h, const Element& e)
{
  {
    Element he = L.bracket(h, e);
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (he.coeffs[i] != Rat(2) * e.coeffs[i])
        throw std::invalid_argument("sl2_complete: [h,e] != 2e");
  }
  auto eig = detail::ad_eigenvalues(L, h);
  std::vector<std::size_t> neg2;
  for (std::size_t j = 0; j < L.dim(); ++j)
    if (eig[j] == Rat(-2))
      neg2.push_back(j);
  QMatrix a(L.dim(), neg2.size());
  for (std::size_t s = 0; s < neg2.size(); ++s) {
    Element col = L.bracket(e, L.basis_element(neg2[s]));
    for (std::size_t i = 0; i < L.dim(); ++i)
      a(i, s) = col.coeffs[i];
  }
  auto phi = solve(a, h.coeffs);
  if (!phi)
    throw std::invalid_argument("sl2_complete: [e,f] = h has no solution in g(-2)");
  Element f = L.zero();
  for (std::size_t s = 0; s < neg2.size(); ++s)
    f.coeffs[neg2[s]] = (*phi)[s];
  // verify the remaining relations
  Element hf = L.bracket(h, f);
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (hf.coeffs[i] != Rat(-2) * f.coeffs[i])
      throw std::logic_error("sl2_complete: [h,f] != -2f");
  Element ef = L.bracket(e, f);
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (ef.coeffs[i] != h.coeffs[i])
      throw std::logic_error("sl2_complete: verification of [e,f] = h failed");
  return SL2Triple{e, h, f};
}

namespace detail {

/// Test one candidate diagram; returns the completed record when accepted.
inline std::optional<OrbitRecord> classify_candidate(const LieAlgebra& L,
                                                     const WeightedDynkinDiagram& d,
                                                     std::uint64_t seed,
                                                     const std::vector<CatalogEntry>* catalog)
{
  GradedComponents g = grade_by_diagram(L, d);
  if (g.component_dim(2) == 0)
    return std::nullopt;
  std::optional<std::vector<long>> witness;
  for (std::uint64_t trial = 0; trial < 5 && !witness; ++trial) {
    Rng rng(derive_seed(seed, d.weights, trial));
    witness = density_trial(g, rng);
  }
  if (!witness)
    return std::nullopt;

  OrbitRecord rec;
  rec.diagram = d;
  Element e;
  try {
    e = find_representative(L, d, seed);
  } catch (const std::logic_error&) {
    // no exactly-confirmed representative: the candidate was accepted by an
    // unlucky screen; treat as rejected
    return std::nullopt;
  }
  Element h = h_from_diagram(L, d);
  rec.triple = sl2_complete(L, h, e);
  QVector e2(g.component_dim(2), Rat(0));
  const auto* c2 = g.component(2);
  for (std::size_t s = 0; s < c2->size(); ++s)
    e2[s] = e.coeffs[(*c2)[s]];
  rec.centralizer_dim = centralizer_pieces(g, e2).total_dim();
  if (catalog)
    for (const CatalogEntry& entry : *catalog)
      if (entry.diagram == d) {
        rec.label = entry.label;
        rec.rigid = entry.rigid;
        rec.in_catalog = true;
        break;
      }
  return rec;
}

} // namespace detail

/// Enumerate all 3^rank weighted diagrams and keep those passing the density
/// test; each kept record carries a completed sl2-triple and the centralizer
/// dimension. Deterministic for a fixed seed regardless of the thread count
/// (per-candidate randomness is derived from (seed, diagram)); records come
/// out diagram-sorted.
inline std::vector<OrbitRecord> classify_orbits(const LieAlgebra& L, std::uint64_t seed = 0,
                                                const std::vector<CatalogEntry>* catalog = nullptr,
                                                unsigned threads = 0)
{
  const int n = L.rank();
  std::vector<WeightedDynkinDiagram> candidates;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (;;) {
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == 2)
      w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0)
      break;
    ++w[static_cast<std::size_t>(i)];
    candidates.emplace_back(w);
  }

  std::vector<std::optional<OrbitRecord>> slots(candidates.size());
  if (threads == 0) {
    unsigned hc = std::thread::hardware_concurrency();
    threads = hc == 0 ? 1 : hc;
  }
  if (threads <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      slots[i] = detail::classify_candidate(L, candidates[i], seed, catalog);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t]() {
        try {
          for (std::size_t i = t; i < candidates.size(); i += threads)
            slots[i] = detail::classify_candidate(L, candidates[i], seed, catalog);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool)
      th.join();
    for (auto& err : errors)
      if (err)
        std::rethrow_exception(err);
  }
  std::vector<OrbitRecord> out;
  for (auto& s : slots)
    if (s)
      out.push_back(std::move(*s));
  // candidates were generated in lexicographic order already
  return out;
}

} // namespace reachlie

#endif
