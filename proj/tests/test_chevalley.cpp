#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reachlie/chevalley.hpp"
#include "reachlie/rng.hpp"

using namespace reachlie;

namespace {

Element random_element(const LieAlgebra& L, Rng& rng, long lo = -5, long hi = 5)
{
  Element e = L.zero();
  for (std::size_t i = 0; i < L.dim(); ++i)
    e.coeffs[i] = rng.range(lo, hi);
  return e;
}

Rat killing(const LieAlgebra& L, const Element& x, const Element& y)
{
  QMatrix ax = L.ad_matrix(x), ay = L.ad_matrix(y);
  QMatrix p = ax.multiply(ay);
  Rat tr(0);
  for (std::size_t i = 0; i < L.dim(); ++i)
    tr += p(i, i);
  return tr;
}

} // namespace

TEST_CASE("A1 is sl2")
{
  LieAlgebra L(LieType(Family::A, 1));
  CHECK(L.dim() == 3);
  Element x = L.basis_element(L.x_index(0));
  Element y = L.basis_element(L.y_index(0));
  Element h = L.basis_element(L.h_index(0));
  Element hx = L.bracket(h, x);
  Element hy = L.bracket(h, y);
  Element xy = L.bracket(x, y);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(hx.coeffs[i] == Rat(2) * x.coeffs[i]);
    CHECK(hy.coeffs[i] == Rat(-2) * y.coeffs[i]);
    CHECK(xy.coeffs[i] == h.coeffs[i]);
  }
}

TEST_CASE("dimensions")
{
  CHECK(LieAlgebra(LieType(Family::A, 2)).dim() == 8);
  CHECK(LieAlgebra(LieType(Family::G, 2)).dim() == 14);
  CHECK(LieAlgebra(LieType(Family::F, 4)).dim() == 52);
  CHECK(LieAlgebra(LieType(Family::E, 7)).dim() == 133);
}

TEST_CASE("antisymmetry on all basis pairs of G2 and F4")
{
  for (const char* name : {"G2", "F4"}) {
    LieAlgebra L(LieType::parse(name));
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j) {
        Element a = L.bracket(L.basis_element(i), L.basis_element(j));
        Element b = L.bracket(L.basis_element(j), L.basis_element(i));
        for (std::size_t k = 0; k < L.dim(); ++k)
          CHECK(a.coeffs[k] == -b.coeffs[k]);
      }
  }
}

TEST_CASE("Jacobi identity, exhaustive on G2")
{
  LieAlgebra L(LieType(Family::G, 2));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j)
      for (std::size_t k = j + 1; k < L.dim(); ++k)
        CHECK(L.jacobi_holds(i, j, k));
}

TEST_CASE("Jacobi identity, sampled on E6")
{
  LieAlgebra L(LieType(Family::E, 6));
  Rng rng(17);
  for (int t = 0; t < 2000; ++t) {
    auto i = static_cast<std::size_t>(rng.range(0, static_cast<long>(L.dim()) - 1));
    auto j = static_cast<std::size_t>(rng.range(0, static_cast<long>(L.dim()) - 1));
    auto k = static_cast<std::size_t>(rng.range(0, static_cast<long>(L.dim()) - 1));
    CHECK(L.jacobi_holds(i, j, k));
  }
}

TEST_CASE("bracket is alternating and Cartan acts diagonally")
{
  LieAlgebra L(LieType(Family::F, 4));
  Rng rng(23);
  for (int t = 0; t < 10; ++t)
    CHECK(L.bracket(random_element(L, rng), random_element(L, rng)).is_zero() == false);
  for (int t = 0; t < 10; ++t) {
    Element x = random_element(L, rng);
    CHECK(L.bracket(x, x).is_zero());
  }
  // ad of a Cartan element is diagonal in the Chevalley basis
  Element h = L.zero();
  for (int i = 0; i < L.rank(); ++i)
    h.coeffs[L.h_index(i)] = rng.range(-3, 3);
  QMatrix ad = L.ad_matrix(h);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (i != j)
        CHECK(is_zero(ad(i, j)));
}

TEST_CASE("Cartan eigenvalues are the Cartan integers")
{
  LieAlgebra L(LieType(Family::G, 2));
  const RootSystem& rs = L.rootsystem();
  for (int i = 0; i < L.rank(); ++i)
    for (std::size_t a = 0; a < L.num_positive(); ++a) {
      Element v = L.bracket(L.basis_element(L.h_index(i)), L.basis_element(L.x_index(a)));
      Rat expected(rs.pairing_with_simple_coroot(rs.root(a).coords, i));
      CHECK(v.coeffs[L.x_index(a)] == expected);
    }
}

TEST_CASE("Killing form is symmetric")
{
  LieAlgebra L(LieType(Family::A, 2));
  Rng rng(3);
  for (int t = 0; t < 6; ++t) {
    Element x = random_element(L, rng), y = random_element(L, rng);
    CHECK(killing(L, x, y) == killing(L, y, x));
  }
}

TEST_CASE("centralizer of zero is everything; centralizers are subalgebras")
{
  LieAlgebra L(LieType(Family::G, 2));
  CHECK(L.centralizer(L.zero()).space.dim() == L.dim());

  Element e = L.basis_element(L.x_index(0)); // simple root vector
  Subalgebra c = L.centralizer(e);
  const QMatrix& b = c.space.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.rows(); ++j) {
      Element br = L.bracket(L.element(b.row(i)), L.element(b.row(j)));
      CHECK(c.space.contains(br.coeffs));
    }
}

TEST_CASE("derived subalgebra of the Cartan is zero")
{
  LieAlgebra L(LieType(Family::F, 4));
  QMatrix gen(static_cast<std::size_t>(L.rank()), L.dim());
  for (int i = 0; i < L.rank(); ++i)
    gen(static_cast<std::size_t>(i), L.h_index(i)) = 1;
  Subalgebra cartan{&L, Subspace::span(gen)};
  CHECK(L.derived_subalgebra(cartan).space.dim() == 0);
}

TEST_CASE("derived subalgebra is contained in its parent and bracket-closed")
{
  LieAlgebra L(LieType(Family::G, 2));
  Element e = L.zero();
  e.coeffs[L.x_index(0)] = 1;
  e.coeffs[L.x_index(1)] = 1;
  Subalgebra c = L.centralizer(e);
  Subalgebra d = L.derived_subalgebra(c);
  CHECK(d.space.dim() <= c.space.dim());
  const QMatrix& b = d.space.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    CHECK(c.space.contains(b.row(i)));
    for (std::size_t j = i + 1; j < b.rows(); ++j)
      CHECK(d.space.contains(L.bracket(L.element(b.row(i)), L.element(b.row(j))).coeffs));
  }
}

TEST_CASE("subalgebra closure")
{
  LieAlgebra L(LieType(Family::G, 2));
  Element x0 = L.basis_element(L.x_index(0));
  Element y0 = L.basis_element(L.y_index(0));
  CHECK(L.subalgebra_closure({x0}).space.dim() == 1);
  CHECK(L.subalgebra_closure({x0, y0}).space.dim() == 3);

  std::vector<Element> gens;
  for (int i = 0; i < L.rank(); ++i) {
    gens.push_back(L.basis_element(L.x_index(static_cast<std::size_t>(i))));
    gens.push_back(L.basis_element(L.y_index(static_cast<std::size_t>(i))));
  }
  CHECK(L.subalgebra_closure(gens).space.dim() == L.dim());
}

TEST_CASE("closure is idempotent and monotone")
{
  LieAlgebra L(LieType(Family::A, 3));
  Rng rng(77);
  std::vector<Element> gens{random_element(L, rng, -2, 2), random_element(L, rng, -2, 2)};
  Subalgebra c1 = L.subalgebra_closure(gens);
  std::vector<Element> basis_elems;
  for (std::size_t i = 0; i < c1.space.dim(); ++i)
    basis_elems.push_back(L.element(c1.space.basis().row(i)));
  CHECK(L.subalgebra_closure(basis_elems).space == c1.space);

  gens.push_back(random_element(L, rng, -2, 2));
  Subalgebra c2 = L.subalgebra_closure(gens);
  CHECK(c2.space.dim() >= c1.space.dim());
  for (std::size_t i = 0; i < c1.space.dim(); ++i)
    CHECK(c2.space.contains(c1.space.basis().row(i)));
}
