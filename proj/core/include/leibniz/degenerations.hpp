#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/fock.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

enum class OmegaVariant {
  Identity,        ///< Omega(x^i) = x^i
  Psi2Sequence,    ///< Omega(x^i) = x^{i+1} + sum_{k=0}^{i} c_k C(i,k) x^{i-k}
  Psi3Polynomial,  ///< Omega(x^i) = i x^{i-1} + x^i c(x)
  Arbitrary,       ///< explicit exponent -> polynomial table (for testing)
};

std::string omega_variant_name(OmegaVariant v);

/// Linear map Omega on one-variable polynomials, given by its values on the
/// monomial basis. Psi2Sequence data is a coefficient generator evaluated
/// lazily and cached, so the queried degree can grow without re-declaration.
class OmegaSpec {
 public:
  static OmegaSpec identity();
  /// c_k = coeffs[k], zero beyond the end of the vector.
  static OmegaSpec psi2(std::vector<Rational> coeffs);
  static OmegaSpec psi2_lazy(std::function<Rational(std::size_t)> gen);
  static OmegaSpec psi3(Polynomial c);  ///< c in one variable
  /// Explicit table; lookups outside it throw MissingEntryError.
  static OmegaSpec arbitrary(std::map<std::uint64_t, Polynomial> table);

  OmegaVariant variant() const { return m_variant; }
  Rational psi2_coeff(std::size_t k) const;  ///< Psi2Sequence only
  /// The explicit coefficient list when the spec was built by psi2(); empty
  /// for psi2_lazy() specs (which cannot be serialized faithfully).
  std::optional<std::vector<Rational>> psi2_declared() const;
  const Polynomial& psi3_poly() const { return m_c_poly; }
  const std::map<std::uint64_t, Polynomial>& table() const { return m_table; }

 private:
  OmegaVariant m_variant = OmegaVariant::Identity;
  struct Psi2Coeffs {
    std::function<Rational(std::size_t)> gen;
    std::vector<Rational> cache;
    std::optional<std::vector<Rational>> declared;
  };
  std::shared_ptr<Psi2Coeffs> m_psi2;
  Polynomial m_c_poly{1};
  std::map<std::uint64_t, Polynomial> m_table;
};

/// Value of Omega on the monomial x^i, per the variant's closed form (with
/// the convention 0*x^{-1} = 0 at i = 0). Arbitrary variant: table lookup,
/// MissingEntryError when absent.
Polynomial omega_eval(const OmegaSpec& spec, std::uint64_t i);

/// Omega extended linearly from monomials to a full polynomial.
Polynomial omega_apply(const OmegaSpec& spec, const Polynomial& p);

/// One of the three right actions of H_3 = span{one, X, D} on one-variable
/// polynomials; `which` selects the slot where Omega replaces the standard
/// Fock behaviour (1: the one-slot, 2: the X-slot, 3: the D-slot).
struct PsiAction {
  int which = 1;  ///< 1, 2 or 3
  OmegaSpec omega;
};

/// Applies the selected action to (p, g):
///   psi1: (p, one) -> Omega(p), (p, X) -> x p, (p, D) -> p'
///   psi2: (p, one) -> p,        (p, X) -> Omega(p), (p, D) -> p'
///   psi3: (p, one) -> p,        (p, X) -> x p, (p, D) -> Omega(p)
Polynomial psi_act(const PsiAction& act, const Polynomial& p, Gen::Kind g);

/// A failing instance of the module axiom: monomial exponent, ordered
/// generator pair, and both sides of the axiom.
struct ModuleAxiomWitness {
  std::uint64_t exponent = 0;
  Gen::Kind a = Gen::Kind::One;
  Gen::Kind b = Gen::Kind::One;
  Polynomial lhs{1};
  Polynomial rhs{1};
};

struct ModuleAxiomReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<ModuleAxiomWitness> witness;
};

/// Checks, for every monomial x^i with i <= dmax and every ordered generator
/// pair (a, b) of H_3, that
///   act(act(x^i, a), b) - act(act(x^i, b), a) = act(x^i, [a, b])
/// with [X, D] = one, [D, X] = -one and every other bracket zero. The zero
/// brackets are included: a bad Omega can break exactly those instances.
ModuleAxiomReport module_axiom_check(const PsiAction& act, std::uint64_t dmax);

/// Leibniz algebra of the second action: generators one, X1, D1 over
/// one-variable polynomials with [p, one] = p, [p, X1] = Omega(p),
/// [p, D1] = p' and the generator products [X1, D1] = one, [D1, X1] = -one,
/// where Omega is the Psi2Sequence map of coefficient data c. `d` becomes
/// the default materialization window.
GradedAlgebra build_psi2_algebra(const std::vector<Rational>& c,
                                 std::uint64_t d);

/// Leibniz algebra of the third action: [p, one] = p, [p, X1] = x p,
/// [p, D1] = Omega(p) with Omega the Psi3Polynomial map of c, plus the same
/// generator products.
GradedAlgebra build_psi3_algebra(const Polynomial& c, std::uint64_t d);

}  // namespace leibniz
