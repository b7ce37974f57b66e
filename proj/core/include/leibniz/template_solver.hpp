#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/fock.hpp"
#include "leibniz/linear_system.hpp"
#include "leibniz/rng.hpp"

namespace leibniz {

/// Sparse vector whose coordinates are affine expressions in unknown symbols.
using AffineVec = std::map<std::size_t, AffineExpr>;

/// Product table with unknown coefficients: a finite basis, a distinguished
/// abelian ideal part, and products that are affine in the unknowns.
///
/// Structural invariants (checked by validate()):
///   - unknown coefficients appear only on ideal-part coordinates;
///   - every product with an ideal-part element on either side is fully
///     known (constant);
///   - the ideal part is abelian under the known products.
/// Together these guarantee that expanding the Leibniz identity yields
/// equations of degree <= 1 in the unknowns; a violation surfaces as
/// NonlinearTemplateError during expansion (or from validate()).
///
/// Pairs listed in out_of_window have no representable product inside the
/// finite basis (windowed slices of graded algebras); they carry no unknowns
/// and every identity triple that would evaluate one is skipped and counted
/// rather than silently treated as zero.
struct TemplateAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::set<std::size_t> ideal;
  std::vector<std::string> unknowns;  ///< registration order = solve order
  std::map<std::pair<std::size_t, std::size_t>, AffineVec> products;
  std::set<std::pair<std::size_t, std::size_t>> out_of_window;
  std::uint64_t window_degree = 0;  ///< informational; nonzero for windowed slices

  std::size_t dim() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
  void set_product(std::size_t left, std::size_t right, AffineVec value);
  const AffineVec& product(std::size_t left, std::size_t right) const;
  void validate() const;
};

struct ExpandReport {
  LinearSystem system;
  std::uint64_t triples_expanded = 0;
  std::uint64_t triples_skipped = 0;  ///< touched an out-of-window pair
};

/// Expands the Leibniz residual [[a,b],c] - [[a,c],b] - [a,[b,c]] over every
/// ordered basis triple into one affine equation per output coordinate.
/// Throws NonlinearTemplateError if an unknown would multiply an unknown.
ExpandReport expand_constraints(const TemplateAlgebra& T);

/// Same expansion restricted to the given triples (basis indices); used to
/// attribute forced values to individual identity rows.
ExpandReport expand_constraints_subset(
    const TemplateAlgebra& T,
    const std::vector<std::array<std::size_t, 3>>& triples);

/// Solved parametric family: every unknown expressed affinely in the
/// surviving free parameters, plus the template with those assignments
/// substituted in.
struct SolvedFamily {
  TemplateAlgebra tmpl;  ///< products rewritten over free_params
  std::vector<std::string> free_params;
  std::map<std::string, AffineExpr> assignments;
  std::size_t rank = 0;
  std::uint64_t triples_expanded = 0;
  std::uint64_t triples_skipped = 0;
};

/// Expands and solves the template. Before returning, instantiates the
/// family at 10 random rational parameter points and re-checks the Leibniz
/// identity (windowed when the template has out-of-window pairs); a failure
/// is a logic error and throws InconsistentError, as does a template whose
/// constraints are unsatisfiable.
SolvedFamily solve_template(const TemplateAlgebra& T);

/// Concrete algebra at a rational parameter point. Values must cover every
/// free parameter (MissingParameterError). Out-of-window entries are left
/// zero in the returned table; instantiate_windowed preserves the flags.
Algebra instantiate(const SolvedFamily& F,
                    const std::map<std::string, Rational>& values);
Materialized instantiate_windowed(const SolvedFamily& F,
                                  const std::map<std::string, Rational>& values);

/// True when every unknown's solved assignment is identically zero.
bool all_unknowns_forced_zero(const SolvedFamily& F);

/// Heisenberg-Fock product template on k pairs: the window holds all
/// monomials of degree <= deg+1 so that every generator-generator-generator
/// triple stays evaluable, while the unknown polynomials live at degree
/// <= deg. Unknowns (after the preliminary change of basis absorbing
/// [Xi, one], [Di, one] and [one, one] into zero):
///   a_{i,j} = [Xi, Xj]          b_{i,j} = [Di, Dj]
///   c_{i,j} = [Di, Xj] (i != j) d_{i,j} = [Xi, Dj] (i != j)
///   e_i     = [Xi, Di] - one    f_i     = [Di, Xi] + one
///   h_i     = [one, Xi]         g_i     = [one, Di]
/// encoded coefficientwise ("a_1_2[x1*x2]").
TemplateAlgebra make_hfl_template(std::size_t k, std::uint64_t deg);

/// One forced-zero row of the HFL template's constraint table: the triples
/// whose identity forces the named unknown polynomials to vanish.
struct HflConstraintRow {
  std::string name;  ///< e.g. "{Xi,Xj,one} => a_{i,j} = 0"
  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<std::string> polys;  ///< unknown-poly prefixes, e.g. "a_1_2"
};

std::vector<HflConstraintRow> hfl_constraint_rows(const TemplateAlgebra& T,
                                                  std::size_t k);

/// Generalized template: within-summand products known (canonical
/// Heisenberg-Fock table), every cross-summand generator product an unknown
/// polynomial of degree <= deg.
TemplateAlgebra make_generalized_hfl_template(const std::vector<std::size_t>& ks,
                                              std::uint64_t deg);

/// The 24-unknown template over basis {x, y, z, e1, e2, e3} with known
/// module products [e2,x] = e1, [e3,y] = e2, [e3,z] = e1 and [y,x] = z.
/// Unknown registration puts the fifteen determined coefficients first and
/// alpha1, alpha2, alpha3, beta1, beta2, delta1, delta2, eta1, theta1 last,
/// so exactly those nine survive as the free parameters.
TemplateAlgebra make_minrep_m1_template();

/// The (3m+3)-dimensional analogue for m >= 2 pairs, after absorbing
/// [y1, x1] into z: unknowns alpha/gamma/delta/eta/beta/nu/theta/eps/tau/
/// lambda/mu encoded coefficientwise over e1..e_{m+2}, giving
/// (4m^2+4m)(m+2) unknowns (96 for m = 2). Throws BadDimensionError for
/// m < 2.
TemplateAlgebra make_minrep_general_template(std::size_t m);

}  // namespace leibniz
