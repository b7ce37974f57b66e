#include <leibniz/degenerations.hpp>
#include <leibniz/errors.hpp>
#include <leibniz/fock.hpp>
#include <leibniz/rng.hpp>

#include "doctest.h"

using namespace leibniz;

namespace {

Polynomial xpow(std::uint32_t k) {
  return Polynomial::monomial(Monomial(std::vector<std::uint32_t>{k}));
}

Polynomial parse_poly(std::vector<std::pair<std::uint32_t, Rational>> terms) {
  Polynomial p(1);
  for (auto& [e, c] : terms) p.add_term(Monomial(std::vector<std::uint32_t>{e}), c);
  return p;
}

/// Explicit table equal to the given spec on exponents 0..top.
std::map<std::uint64_t, Polynomial> table_of(const OmegaSpec& spec,
                                             std::uint64_t top) {
  std::map<std::uint64_t, Polynomial> t;
  for (std::uint64_t i = 0; i <= top; ++i) t[i] = omega_eval(spec, i);
  return t;
}

}  // namespace

TEST_CASE("omega closed forms") {
  OmegaSpec id = OmegaSpec::identity();
  CHECK(omega_eval(id, 3) == xpow(3));

  OmegaSpec w2 = OmegaSpec::psi2({Rational(2), Rational(-3)});
  CHECK(omega_eval(w2, 0) == parse_poly({{1, 1}, {0, 2}}));
  CHECK(omega_eval(w2, 1) == parse_poly({{2, 1}, {1, 2}, {0, -3}}));
  CHECK(omega_eval(w2, 2) == parse_poly({{3, 1}, {2, 2}, {1, -6}}));
  CHECK(w2.psi2_coeff(0) == Rational(2));
  CHECK(w2.psi2_coeff(7).is_zero());
  REQUIRE(w2.psi2_declared().has_value());
  CHECK(w2.psi2_declared()->size() == 2);

  OmegaSpec w3 = OmegaSpec::psi3(parse_poly({{0, 2}, {1, -1}}));  // c = 2 - x
  CHECK(omega_eval(w3, 0) == parse_poly({{0, 2}, {1, -1}}));
  CHECK(omega_eval(w3, 2) == parse_poly({{1, 2}, {2, 2}, {3, -1}}));

  OmegaSpec tab = OmegaSpec::arbitrary({{0, xpow(5)}});
  CHECK(omega_eval(tab, 0) == xpow(5));
  CHECK_THROWS_AS(omega_eval(tab, 1), MissingEntryError);

  // Linear extension.
  Polynomial p = xpow(1) * Rational(3) - xpow(0) * Rational(2);
  CHECK(omega_apply(id, p) == p);
  CHECK(omega_apply(w2, p) ==
        omega_eval(w2, 1) * Rational(3) - omega_eval(w2, 0) * Rational(2));
}

TEST_CASE("lazy psi2 coefficients are generated on demand") {
  int calls = 0;
  OmegaSpec lazy = OmegaSpec::psi2_lazy([&calls](std::size_t k) {
    ++calls;
    return Rational(static_cast<long>(k + 1));
  });
  CHECK_FALSE(lazy.psi2_declared().has_value());
  CHECK(lazy.psi2_coeff(2) == Rational(3));
  CHECK(lazy.psi2_coeff(2) == Rational(3));  // cached, not re-generated
  CHECK(calls == 3);                         // k = 0, 1, 2 exactly once
  // Same closed form as an eager spec with the same coefficients.
  OmegaSpec eager = OmegaSpec::psi2({Rational(1), Rational(2), Rational(3)});
  CHECK(omega_eval(lazy, 2) == omega_eval(eager, 2));
}

TEST_CASE("module axiom: correct omegas pass at degree 12") {
  Rng rng(808);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k < 13; ++k) c.push_back(rng.rational(-5, 5));
    ModuleAxiomReport rep =
        module_axiom_check({2, OmegaSpec::psi2(c)}, 12);
    CHECK(rep.ok);
    CHECK(rep.checked == 117);  // 13 exponents x 9 ordered generator pairs

    Polynomial cp(1);
    for (int e = 0; e < 4; ++e)
      cp.add_term(Monomial(std::vector<std::uint32_t>{(std::uint32_t)e}),
                  rng.rational(-5, 5));
    rep = module_axiom_check({3, OmegaSpec::psi3(cp)}, 12);
    CHECK(rep.ok);
    CHECK(rep.checked == 117);
  }
}

TEST_CASE("module axiom: psi1 admits only trivial omegas") {
  CHECK(module_axiom_check({1, OmegaSpec::identity()}, 12).ok);

  // A psi2-shaped omega in the one-slot breaks a zero-bracket instance.
  ModuleAxiomReport rep = module_axiom_check(
      {1, OmegaSpec::psi2({Rational(0), Rational(1)})}, 12);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->exponent == 0);
  CHECK(rep.witness->a == Gen::Kind::One);
  CHECK(rep.witness->b == Gen::Kind::X);

  // c1 = 0 pushes the first failure to the derivative pair.
  rep = module_axiom_check({1, OmegaSpec::psi2({Rational(5)})}, 12);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->exponent == 0);
  CHECK(rep.witness->a == Gen::Kind::One);
  CHECK(rep.witness->b == Gen::Kind::D);
}

TEST_CASE("module axiom: identity omega fails psi2 and psi3 at exponent 0") {
  ModuleAxiomReport rep = module_axiom_check({2, OmegaSpec::identity()}, 12);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->exponent == 0);
  CHECK(rep.witness->a == Gen::Kind::X);
  CHECK(rep.witness->b == Gen::Kind::D);
  CHECK(rep.witness->lhs.is_zero());
  CHECK(rep.witness->rhs == xpow(0));

  rep = module_axiom_check({3, OmegaSpec::identity()}, 12);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->exponent == 0);
}

TEST_CASE("module axiom: single-coefficient perturbations are caught") {
  const std::uint64_t dmax = 8;
  std::vector<Rational> c{Rational(1, 2), Rational(-3), Rational(0),
                          Rational(7)};
  OmegaSpec good2 = OmegaSpec::psi2(c);

  // Constant-term bump at exponent i0 surfaces one exponent later.
  {
    auto t = table_of(good2, dmax + 1);
    t[3] += xpow(0) * Rational(1, 5);
    ModuleAxiomReport rep =
        module_axiom_check({2, OmegaSpec::arbitrary(t)}, dmax);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->exponent == 4);
    CHECK(rep.witness->a == Gen::Kind::X);
    CHECK(rep.witness->b == Gen::Kind::D);
  }
  // Higher-order bump at exponent i0 surfaces at i0 itself.
  {
    auto t = table_of(good2, dmax + 1);
    t[3] += xpow(2) * Rational(1, 5);
    ModuleAxiomReport rep =
        module_axiom_check({2, OmegaSpec::arbitrary(t)}, dmax);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->exponent == 3);
  }
  // psi3: a bump at exponent i0 >= 1 surfaces at i0 - 1.
  {
    OmegaSpec good3 = OmegaSpec::psi3(parse_poly({{0, 2}, {1, -1}}));
    auto t = table_of(good3, dmax + 2);
    t[5] += xpow(1) * Rational(3);
    ModuleAxiomReport rep =
        module_axiom_check({3, OmegaSpec::arbitrary(t)}, dmax);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->exponent == 4);
    CHECK(rep.witness->a == Gen::Kind::X);
    CHECK(rep.witness->b == Gen::Kind::D);
  }
}

TEST_CASE("psi2 algebra with zero data is the Heisenberg-Fock table") {
  Materialized a = materialize(build_psi2_algebra({}, 4), 4);
  Materialized b = materialize(build_hfl(3, 4), 4);
  CHECK(a.algebra.same_table(b.algebra));
  CHECK(a.out_of_window == b.out_of_window);
}

TEST_CASE("psi2 and psi3 algebras pass the windowed identity check") {
  Rng rng(4242);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k < 7; ++k) c.push_back(rng.rational(-4, 4));
    Materialized m2 = materialize(build_psi2_algebra(c, 6), 6);
    CheckReport r2 = leibniz_check(m2);
    CHECK(r2.ok);
    CHECK(r2.checked > 0);

    Polynomial cp = parse_poly({{0, rng.rational(-4, 4)},
                                {1, rng.rational(-4, 4)},
                                {2, rng.rational(-4, 4)}});
    Materialized m3 = materialize(build_psi3_algebra(cp, 6), 6);
    CheckReport r3 = leibniz_check(m3);
    CHECK(r3.ok);
    CHECK(r3.checked > 0);
  }

  // The omega value itself appears as a table entry: [1, X1] = Omega(1).
  std::vector<Rational> c{Rational(1, 2)};
  Materialized m = materialize(build_psi2_algebra(c, 4), 4);
  std::size_t cpoly = m.algebra.index_of("1");
  std::size_t X1 = m.algebra.index_of("X1");
  std::size_t x1 = m.algebra.index_of("x1");
  Vec want{{x1, Rational(1)}, {cpoly, Rational(1, 2)}};
  CHECK(m.algebra.product(cpoly, X1) == want);
}
