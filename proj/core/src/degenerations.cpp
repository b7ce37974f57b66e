#include "leibniz/degenerations.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

std::string omega_variant_name(OmegaVariant v) {
  switch (v) {
    case OmegaVariant::Identity:
      return "identity";
    case OmegaVariant::Psi2Sequence:
      return "psi2";
    case OmegaVariant::Psi3Polynomial:
      return "psi3";
    case OmegaVariant::Arbitrary:
      return "arbitrary";
  }
  throw Error("unreachable omega variant");
}

OmegaSpec OmegaSpec::identity() { return OmegaSpec(); }

OmegaSpec OmegaSpec::psi2(std::vector<Rational> coeffs) {
  OmegaSpec s;
  s.m_variant = OmegaVariant::Psi2Sequence;
  s.m_psi2 = std::make_shared<Psi2Coeffs>();
  s.m_psi2->declared = coeffs;
  s.m_psi2->gen = [coeffs = std::move(coeffs)](std::size_t k) {
    return k < coeffs.size() ? coeffs[k] : Rational(0);
  };
  return s;
}

OmegaSpec OmegaSpec::psi2_lazy(std::function<Rational(std::size_t)> gen) {
  OmegaSpec s;
  s.m_variant = OmegaVariant::Psi2Sequence;
  s.m_psi2 = std::make_shared<Psi2Coeffs>();
  s.m_psi2->gen = std::move(gen);
  return s;
}

OmegaSpec OmegaSpec::psi3(Polynomial c) {
  if (c.nvars() != 1)
    throw BadDimensionError("the psi3 polynomial must be in one variable");
  OmegaSpec s;
  s.m_variant = OmegaVariant::Psi3Polynomial;
  s.m_c_poly = std::move(c);
  return s;
}

OmegaSpec OmegaSpec::arbitrary(std::map<std::uint64_t, Polynomial> table) {
  for (const auto& [i, p] : table)
    if (p.nvars() != 1)
      throw BadDimensionError("Omega table values must be one-variable polynomials");
  OmegaSpec s;
  s.m_variant = OmegaVariant::Arbitrary;
  s.m_table = std::move(table);
  return s;
}

Rational OmegaSpec::psi2_coeff(std::size_t k) const {
  if (m_variant != OmegaVariant::Psi2Sequence || !m_psi2)
    throw Error("psi2_coeff() queried on a non-psi2 Omega");
  auto& cache = m_psi2->cache;
  while (cache.size() <= k) cache.push_back(m_psi2->gen(cache.size()));
  return cache[k];
}

std::optional<std::vector<Rational>> OmegaSpec::psi2_declared() const {
  if (m_variant != OmegaVariant::Psi2Sequence || !m_psi2) return std::nullopt;
  return m_psi2->declared;
}

namespace {

Polynomial x_power(std::uint64_t i) {
  return Polynomial::monomial(
      Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)}));
}

}  // namespace

Polynomial omega_eval(const OmegaSpec& spec, std::uint64_t i) {
  switch (spec.variant()) {
    case OmegaVariant::Identity:
      return x_power(i);
    case OmegaVariant::Psi2Sequence: {
      Polynomial out = x_power(i + 1);
      for (std::uint64_t k = 0; k <= i; ++k)
        out += x_power(i - k) * (spec.psi2_coeff(k) * binomial(i, k));
      return out;
    }
    case OmegaVariant::Psi3Polynomial: {
      // i * x^{i-1} + x^i * c(x), with the convention 0 * x^{-1} = 0 at i=0.
      Polynomial out = x_power(i) * spec.psi3_poly();
      if (i > 0) out += x_power(i - 1) * Rational(static_cast<long>(i));
      return out;
    }
    case OmegaVariant::Arbitrary: {
      auto it = spec.table().find(i);
      if (it == spec.table().end())
        throw MissingEntryError("Omega table has no entry for exponent " +
                                std::to_string(i));
      return it->second;
    }
  }
  throw Error("unreachable omega variant");
}

Polynomial omega_apply(const OmegaSpec& spec, const Polynomial& p) {
  Polynomial out(1);
  for (const auto& [m, c] : p.terms()) out += omega_eval(spec, m.degree()) * c;
  return out;
}

Polynomial psi_act(const PsiAction& act, const Polynomial& p, Gen::Kind g) {
  if (act.which < 1 || act.which > 3)
    throw Error("psi action selector must be 1, 2 or 3");
  switch (g) {
    case Gen::Kind::One:
      return act.which == 1 ? omega_apply(act.omega, p) : p;
    case Gen::Kind::X:
      return act.which == 2 ? omega_apply(act.omega, p) : p.mul_var(0);
    case Gen::Kind::D:
      return act.which == 3 ? omega_apply(act.omega, p) : p.deriv(0);
  }
  throw Error("unreachable generator kind");
}

ModuleAxiomReport module_axiom_check(const PsiAction& act, std::uint64_t dmax) {
  ModuleAxiomReport rep;
  constexpr Gen::Kind kinds[] = {Gen::Kind::One, Gen::Kind::X, Gen::Kind::D};
  for (std::uint64_t i = 0; i <= dmax; ++i) {
    const Polynomial p = x_power(i);
    for (Gen::Kind a : kinds)
      for (Gen::Kind b : kinds) {
        Polynomial lhs = psi_act(act, psi_act(act, p, a), b);
        lhs -= psi_act(act, psi_act(act, p, b), a);
        // [X, D] = one and [D, X] = -one; every other bracket is zero.
        Polynomial rhs(1);
        if (a == Gen::Kind::X && b == Gen::Kind::D)
          rhs = psi_act(act, p, Gen::Kind::One);
        else if (a == Gen::Kind::D && b == Gen::Kind::X)
          rhs = psi_act(act, p, Gen::Kind::One) * Rational(-1);
        ++rep.checked;
        if (!(lhs == rhs)) {
          rep.ok = false;
          rep.witness = ModuleAxiomWitness{i, a, b, std::move(lhs), std::move(rhs)};
          return rep;
        }
      }
  }
  return rep;
}

namespace {

GradedAlgebra psi_skeleton(std::string name, PsiAction act, std::uint64_t d) {
  GradedAlgebra G;
  G.name = std::move(name);
  G.nvars = 1;
  G.gens = {Gen{Gen::Kind::One, 0, 1}, Gen{Gen::Kind::X, 1, 1},
            Gen{Gen::Kind::D, 1, 1}};
  for (const Gen& g : G.gens) G.gen_labels.push_back(gen_label(g, 1));
  G.gen_products[{1, 2}] = {{0, Rational(1)}};
  G.gen_products[{2, 1}] = {{0, Rational(-1)}};
  auto gens = G.gens;
  G.action = [gens, act = std::move(act)](const Polynomial& p, std::size_t b) {
    return psi_act(act, p, gens.at(b).kind);
  };
  G.default_window = d;
  return G;
}

}  // namespace

GradedAlgebra build_psi2_algebra(const std::vector<Rational>& c,
                                 std::uint64_t d) {
  return psi_skeleton("Psi2", PsiAction{2, OmegaSpec::psi2(c)}, d);
}

GradedAlgebra build_psi3_algebra(const Polynomial& c, std::uint64_t d) {
  return psi_skeleton("Psi3", PsiAction{3, OmegaSpec::psi3(c)}, d);
}

}  // namespace leibniz
