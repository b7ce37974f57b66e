#include <leibniz/algebra.hpp>
#include <leibniz/errors.hpp>
#include <leibniz/heisenberg.hpp>
#include <leibniz/minimal_rep.hpp>
#include <leibniz/rng.hpp>

#include "doctest.h"

using namespace leibniz;

namespace {

Matrix random_invertible(std::size_t n, Rng& rng) {
  Matrix m(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.rational(-3, 3);
  } while (m.rank() < n);
  return m;
}

std::vector<std::string> primed(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l + "'");
  return out;
}

}  // namespace

TEST_CASE("heisenberg H3 table and identity check") {
  Algebra h3 = make_heisenberg(3);
  CHECK(h3.dim() == 3);
  CHECK(h3.basis() == std::vector<std::string>{"one", "X1", "D1"});
  CHECK(h3.product(1, 2) == Vec{{0, Rational(1)}});
  CHECK(h3.product(2, 1) == Vec{{0, Rational(-1)}});
  CHECK(h3.product(0, 1).empty());
  CHECK(h3.index_of("D1") == 2);
  CHECK_THROWS_AS(h3.index_of("nope"), UnknownLabelError);

  CheckReport rep = leibniz_check(h3);
  CHECK(rep.ok);
  CHECK(rep.checked == 27);
  CHECK(rep.skipped == 0);
  CHECK(rep.violations.empty());
  CHECK(rep.first_violation() == nullptr);
  CHECK(is_lie(h3));
  CHECK(leibniz_residual(h3, 1, 2, 1).empty());
}

TEST_CASE("bracket is bilinear over the table") {
  Algebra h3 = make_heisenberg(3);
  Vec a{{1, Rational(2)}, {0, Rational(5)}};   // 5*one + 2*X1
  Vec b{{2, Rational(3)}, {1, Rational(-1)}};  // -X1 + 3*D1
  // [a, b] = 2*3*[X1,D1] = 6*one
  CHECK(h3.bracket(a, b) == Vec{{0, Rational(6)}});
  CHECK(h3.bracket(b, a) == Vec{{0, Rational(-6)}});
  CHECK(h3.bracket(a, a).empty());
}

TEST_CASE("a single broken product is located exactly") {
  Algebra bad = make_heisenberg(3);
  bad.set_product(1, 1, Vec{{2, Rational(1)}});  // [X1,X1] = D1
  CheckReport rep = leibniz_check(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.checked == 27);
  REQUIRE(rep.violations.size() == 1);
  const CheckViolation& v = rep.violations[0];
  CHECK(v.i == 1);
  CHECK(v.j == 1);
  CHECK(v.k == 1);
  // [[X1,X1],X1] - [[X1,X1],X1] - [X1,[X1,X1]] = -[X1,D1] = -one
  CHECK(v.residual == Vec{{0, Rational(-1)}});
  CHECK(leibniz_residual(bad, 1, 1, 1) == v.residual);
  CHECK_FALSE(is_lie(bad));
}

TEST_CASE("violation list is capped at the lexicographically first failures") {
  Algebra a("all-products-u0", {"u0", "u1", "u2"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      a.set_product(i, j, Vec{{0, Rational(1)}});
  CheckReport rep = leibniz_check(a);
  CHECK_FALSE(rep.ok);
  // Every triple fails with residual -u0; a worker stops once its local list
  // is full, so `checked` covers at least the reported failures and at most
  // all 27 triples.
  CHECK(rep.checked >= CheckReport::max_violations);
  CHECK(rep.checked <= 27);
  REQUIRE(rep.violations.size() == CheckReport::max_violations);
  // The kept 16 are exactly the first triples in (i, j, k) order.
  for (std::size_t t = 0; t < rep.violations.size(); ++t) {
    const CheckViolation& v = rep.violations[t];
    CHECK(v.i == t / 9);
    CHECK(v.j == (t / 3) % 3);
    CHECK(v.k == t % 3);
    CHECK(v.residual == Vec{{0, Rational(-1)}});
  }
}

TEST_CASE("leibniz but not lie") {
  Algebra a("square", {"a", "b"});
  a.set_product(0, 0, Vec{{1, Rational(1)}});  // [a,a] = b
  CHECK(leibniz_check(a).ok);
  CHECK_FALSE(is_lie(a));
}

TEST_CASE("change of basis rescales structure constants") {
  Algebra h3 = make_heisenberg(3);
  Matrix p = Matrix::identity(3);
  p.at(0, 0) = Rational(2);  // one' = 2 * one
  Algebra scaled = h3.change_of_basis(p, primed(h3.basis()));
  CHECK(scaled.product(1, 2) == Vec{{0, Rational(1, 2)}});
  CHECK(scaled.product(2, 1) == Vec{{0, Rational(-1, 2)}});

  Matrix sing(3, 3);  // zero matrix
  CHECK_THROWS_AS(h3.change_of_basis(sing, primed(h3.basis())),
                  SingularMatrixError);
}

TEST_CASE("random conjugation round trips") {
  Rng rng(2024);
  Algebra h5 = make_heisenberg(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix p = random_invertible(5, rng);
    Algebra moved = h5.change_of_basis(p, primed(h5.basis()));
    CHECK(leibniz_check(moved).ok);
    Algebra back = moved.change_of_basis(p.inverse(), h5.basis());
    CHECK(back.same_table(h5));
  }
}

TEST_CASE("subspace span, containment, sum, reduce") {
  Subspace s = Subspace::span(
      3, {Vec{{0, Rational(1)}, {1, Rational(1)}}, Vec{{1, Rational(1)}}});
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{{0, Rational(7)}}));
  CHECK_FALSE(s.contains(Vec{{2, Rational(1)}}));
  Subspace t = Subspace::span(3, {Vec{{2, Rational(3)}}});
  CHECK(s.sum(t).dim() == 3);
  CHECK(s.sum(t).contains(s));
  // Reduction modulo s kills the first two coordinates.
  Vec r = s.reduce(Vec{{0, Rational(1)}, {2, Rational(4)}});
  CHECK(r == Vec{{2, Rational(4)}});
  // Canonical RREF makes equal spans compare equal.
  Subspace s2 = Subspace::span(
      3, {Vec{{0, Rational(2)}}, Vec{{1, Rational(5)}, {0, Rational(-1)}}});
  CHECK(s == s2);
}

TEST_CASE("structural subspaces of H3") {
  Algebra h3 = make_heisenberg(3);
  CHECK(derived_subspace(h3).dim() == 1);
  CHECK(center(h3).dim() == 1);
  CHECK(center(h3) == derived_subspace(h3));
  CHECK(left_annihilator(h3).dim() == 1);
  CHECK(right_annihilator(h3).dim() == 1);
  CHECK(lower_central_dims(h3) == std::vector<std::size_t>{3, 1, 0});
  CHECK(squares_span(h3).dim() == 0);
  CHECK(squares_ideal(h3).dim() == 0);
}

TEST_CASE("squares span equals squares ideal on valid tables") {
  // For a table satisfying the identity, the polarized span of squares is
  // already a two-sided ideal: left products against squares vanish
  // ([a,[b,b]] = [[a,b],b] - [[a,b],b] = 0) and right products land back in
  // the span by polarization. The two subspaces may differ only on tables
  // violating the identity; on the family below they coincide in both cases.
  ParamFamilyM1 p1;  // e3 stays outside the ideal
  p1.alpha2 = Rational(1);
  p1.beta1 = Rational(1);
  p1.eta1 = Rational(1);
  Algebra a1 = build_L(p1);
  CHECK(squares_span(a1).dim() == 2);
  CHECK(squares_span(a1) == squares_ideal(a1));
  CHECK(is_ideal(a1, squares_span(a1)));

  ParamFamilyM1 p2;  // [x,x] = e3 pulls e3 into the ideal
  p2.alpha3 = Rational(1);
  p2.eta1 = Rational(1);
  Algebra a2 = build_L(p2);
  CHECK(squares_span(a2).dim() == 3);
  CHECK(squares_span(a2) == squares_ideal(a2));

  // A subspace that is not an ideal is rejected by quotient():
  // [e2, x] = e1 leaves span{e2}.
  Subspace just_e2 = Subspace::span(6, {Vec{{4, Rational(1)}}});
  CHECK_FALSE(is_ideal(a2, just_e2));
  CHECK_THROWS_AS(quotient(a2, just_e2), NotAnIdealError);

  Algebra q = quotient(a2, squares_ideal(a2));
  CHECK(q.dim() == 3);
  CHECK(q.basis() == std::vector<std::string>{"x~", "y~", "z~"});
  CHECK(is_lie(q));
  CHECK(q.product(0, 1) == Vec{{2, Rational(-1)}});  // [x~,y~] = -z~
}

TEST_CASE("fingerprint of H3 and invariance under conjugation") {
  Fingerprint fp = fingerprint(make_heisenberg(3));
  Fingerprint expect;
  expect.dim = 3;
  expect.lower_central = {3, 1, 0};
  expect.left_annihilator_dim = 1;
  expect.right_annihilator_dim = 1;
  expect.center_dim = 1;
  expect.squares_span_dim = 0;
  expect.squares_ideal_dim = 0;
  CHECK(fp == expect);
  CHECK_FALSE(fp.str().empty());

  Rng rng(77);
  ParamFamilyM1 p;
  p.alpha2 = Rational(3, 2);
  p.beta1 = Rational(-2);
  p.delta2 = Rational(1);
  p.theta1 = Rational(5);
  Algebra a = build_L(p);
  Fingerprint base = fingerprint(a);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_invertible(a.dim(), rng);
    CHECK(fingerprint(a.change_of_basis(m, primed(a.basis()))) == base);
  }
}

TEST_CASE("direct sum keeps parts independent") {
  Algebra h3 = make_heisenberg(3);
  Algebra two = direct_sum({h3, h3}, "H3+H3");
  CHECK(two.dim() == 6);
  CHECK(two.basis() == std::vector<std::string>{"one@1", "X1@1", "D1@1",
                                                "one@2", "X1@2", "D1@2"});
  CHECK(two.product(1, 2) == Vec{{0, Rational(1)}});
  CHECK(two.product(4, 5) == Vec{{3, Rational(1)}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) {
      CHECK(two.product(i, j).empty());
      CHECK(two.product(j, i).empty());
    }
  CHECK(leibniz_check(two).ok);
  CHECK(center(two).dim() == 2);

  Algebra one = direct_sum({h3}, "just-H3");
  CHECK(one.basis() == h3.basis());  // single part keeps labels
}
