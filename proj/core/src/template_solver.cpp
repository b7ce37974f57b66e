#include "leibniz/template_solver.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

std::size_t TemplateAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw UnknownLabelError("no basis element labelled '" + label + "' in " + name);
}

void TemplateAlgebra::set_product(std::size_t left, std::size_t right,
                                  AffineVec value) {
  if (left >= dim() || right >= dim())
    throw BadDimensionError("product index out of range");
  for (auto it = value.begin(); it != value.end();) {
    if (it->first >= dim())
      throw BadDimensionError("product coordinate out of range");
    if (it->second.is_zero())
      it = value.erase(it);
    else
      ++it;
  }
  if (value.empty())
    products.erase({left, right});
  else
    products[{left, right}] = std::move(value);
}

const AffineVec& TemplateAlgebra::product(std::size_t left,
                                          std::size_t right) const {
  static const AffineVec empty;
  auto it = products.find({left, right});
  return it == products.end() ? empty : it->second;
}

void TemplateAlgebra::validate() const {
  for (const auto& [key, vec] : products) {
    const auto& [l, r] = key;
    if (out_of_window.count(key))
      throw NonlinearTemplateError(
          "pair flagged out-of-window carries a product entry");
    const bool touches_ideal = ideal.count(l) || ideal.count(r);
    for (const auto& [coord, expr] : vec) {
      if (!expr.is_constant()) {
        if (!ideal.count(coord))
          throw NonlinearTemplateError(
              "unknown coefficient on non-ideal coordinate '" +
              labels.at(coord) + "'");
        if (touches_ideal)
          throw NonlinearTemplateError(
              "product with an ideal factor is not fully known");
      }
      if (ideal.count(l) && ideal.count(r))
        throw NonlinearTemplateError("the ideal part is not abelian");
    }
  }
}

namespace {

/// [v, c] (basis element c on the right); nullopt when an out-of-window pair
/// would be evaluated.
std::optional<AffineVec> bracket_vec_basis(const TemplateAlgebra& T,
                                           const AffineVec& v, std::size_t c) {
  AffineVec out;
  for (const auto& [m, e] : v) {
    if (T.out_of_window.count({m, c})) return std::nullopt;
    for (const auto& [coord, f] : T.product(m, c)) {
      AffineExpr& slot = out[coord];
      slot += e * f;
      if (slot.is_zero()) out.erase(coord);
    }
  }
  return out;
}

/// [a, v] (basis element a on the left).
std::optional<AffineVec> bracket_basis_vec(const TemplateAlgebra& T,
                                           std::size_t a, const AffineVec& v) {
  AffineVec out;
  for (const auto& [m, e] : v) {
    if (T.out_of_window.count({a, m})) return std::nullopt;
    for (const auto& [coord, f] : T.product(a, m)) {
      AffineExpr& slot = out[coord];
      slot += e * f;
      if (slot.is_zero()) out.erase(coord);
    }
  }
  return out;
}

void expand_triple(const TemplateAlgebra& T, std::size_t a, std::size_t b,
                   std::size_t c, ExpandReport& rep) {
  if (T.out_of_window.count({a, b}) || T.out_of_window.count({a, c}) ||
      T.out_of_window.count({b, c})) {
    ++rep.triples_skipped;
    return;
  }
  auto r1 = bracket_vec_basis(T, T.product(a, b), c);
  auto r2 = r1 ? bracket_vec_basis(T, T.product(a, c), b) : std::nullopt;
  auto r3 = r2 ? bracket_basis_vec(T, a, T.product(b, c)) : std::nullopt;
  if (!r3) {
    ++rep.triples_skipped;
    return;
  }
  AffineVec res = std::move(*r1);
  for (const auto& [coord, e] : *r2) {
    AffineExpr& slot = res[coord];
    slot -= e;
    if (slot.is_zero()) res.erase(coord);
  }
  for (const auto& [coord, e] : *r3) {
    AffineExpr& slot = res[coord];
    slot -= e;
    if (slot.is_zero()) res.erase(coord);
  }
  ++rep.triples_expanded;
  for (const auto& [coord, e] : res)
    if (!e.is_zero()) rep.system.add_equation(e);
}

}  // namespace

ExpandReport expand_constraints(const TemplateAlgebra& T) {
  ExpandReport rep;
  for (const std::string& u : T.unknowns) rep.system.add_variable(u);
  const std::size_t n = T.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) expand_triple(T, a, b, c, rep);
  return rep;
}

ExpandReport expand_constraints_subset(
    const TemplateAlgebra& T,
    const std::vector<std::array<std::size_t, 3>>& triples) {
  ExpandReport rep;
  for (const std::string& u : T.unknowns) rep.system.add_variable(u);
  for (const auto& t : triples) expand_triple(T, t[0], t[1], t[2], rep);
  return rep;
}

SolvedFamily solve_template(const TemplateAlgebra& T) {
  T.validate();
  ExpandReport rep = expand_constraints(T);
  const SolutionSpace sol = rep.system.solve();

  SolvedFamily F;
  F.tmpl = T;
  F.tmpl.unknowns = sol.free_params;
  for (auto& [key, vec] : F.tmpl.products) {
    AffineVec rewritten;
    for (const auto& [coord, e] : vec) {
      AffineExpr s = e.substitute(sol.assignment);
      if (!s.is_zero()) rewritten[coord] = std::move(s);
    }
    vec = std::move(rewritten);
  }
  // set_product() never stored empty vectors, but substitution can empty one.
  for (auto it = F.tmpl.products.begin(); it != F.tmpl.products.end();)
    it = it->second.empty() ? F.tmpl.products.erase(it) : std::next(it);
  F.free_params = sol.free_params;
  F.assignments = sol.assignment;
  F.rank = sol.rank;
  F.triples_expanded = rep.triples_expanded;
  F.triples_skipped = rep.triples_skipped;

  Rng rng(0x1e1b71a5u);
  for (int trial = 0; trial < 10; ++trial) {
    std::map<std::string, Rational> values;
    for (const std::string& p : F.free_params)
      values[p] = rng.rational(-5, 5);
    CheckReport check;
    if (T.out_of_window.empty())
      check = leibniz_check(instantiate(F, values));
    else
      check = leibniz_check(instantiate_windowed(F, values));
    if (!check.ok)
      throw InconsistentError(
          "internal: solved family fails the identity at a random point");
  }
  return F;
}

Algebra instantiate(const SolvedFamily& F,
                    const std::map<std::string, Rational>& values) {
  Algebra A(F.tmpl.name, F.tmpl.labels);
  for (const auto& [key, vec] : F.tmpl.products) {
    Vec v;
    for (const auto& [coord, e] : vec) {
      Rational val = e.evaluate(values);
      if (!val.is_zero()) v[coord] = std::move(val);
    }
    if (!v.empty()) A.set_product(key.first, key.second, std::move(v));
  }
  return A;
}

Materialized instantiate_windowed(
    const SolvedFamily& F, const std::map<std::string, Rational>& values) {
  return Materialized{instantiate(F, values), F.tmpl.window_degree,
                      F.tmpl.out_of_window};
}

bool all_unknowns_forced_zero(const SolvedFamily& F) {
  for (const auto& [name, expr] : F.assignments)
    if (!expr.is_zero()) return false;
  return true;
}

namespace {

/// Coefficientwise unknown polynomial: one symbol per monomial of degree
/// <= deg, living on the monomial coordinates of a windowed template.
AffineVec unknown_poly(const std::string& prefix,
                       const std::vector<Monomial>& mons,
                       std::size_t mono_base, std::uint64_t deg,
                       std::vector<std::string>& registry) {
  AffineVec v;
  for (std::size_t t = 0; t < mons.size(); ++t) {
    if (mons[t].degree() > deg) continue;
    const std::string sym = prefix + "[" + mons[t].label() + "]";
    registry.push_back(sym);
    v[mono_base + t] = AffineExpr::symbol(sym);
  }
  return v;
}

void add_affine(AffineVec& dst, const AffineVec& src) {
  for (const auto& [coord, e] : src) {
    AffineExpr& slot = dst[coord];
    slot += e;
    if (slot.is_zero()) dst.erase(coord);
  }
}

struct WindowedSkeleton {
  TemplateAlgebra T;
  std::vector<Monomial> mons;
  std::size_t mono_base = 0;  ///< basis index of the first monomial
};

/// Common windowed scaffolding: generator labels followed by all monomials of
/// degree <= deg + 1, known module action, Heisenberg pairs within summands.
WindowedSkeleton hfl_skeleton_template(const std::vector<std::size_t>& ks,
                                       std::uint64_t deg,
                                       const std::string& name) {
  if (ks.empty()) throw BadDimensionError("at least one summand is required");
  for (std::size_t k : ks)
    if (k == 0) throw BadDimensionError("summand pair counts must be >= 1");

  const std::size_t s = ks.size();
  std::vector<std::size_t> offsets(s, 0);
  for (std::size_t i = 1; i < s; ++i) offsets[i] = offsets[i - 1] + ks[i - 1];
  const std::size_t nvars = offsets.back() + ks.back();
  const std::uint64_t window = deg + 1;

  WindowedSkeleton W;
  W.T.name = name;
  W.T.window_degree = window;

  std::vector<Gen> gens;
  for (std::size_t sm = 1; sm <= s; ++sm) {
    gens.push_back({Gen::Kind::One, 0, sm});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i)
      gens.push_back({Gen::Kind::X, i, sm});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i)
      gens.push_back({Gen::Kind::D, i, sm});
  }
  for (const Gen& g : gens) W.T.labels.push_back(gen_label(g, s));
  W.mono_base = gens.size();
  W.mons = monomials_up_to(nvars, window);
  std::map<Monomial, std::size_t> mon_index;
  for (std::size_t t = 0; t < W.mons.size(); ++t) {
    mon_index[W.mons[t]] = W.mono_base + t;
    W.T.labels.push_back(W.mons[t].label());
    W.T.ideal.insert(W.mono_base + t);
  }

  // Heisenberg pairs within each summand.
  std::map<std::pair<Gen::Kind, std::pair<std::size_t, std::size_t>>,
           std::size_t>
      gidx;
  for (std::size_t g = 0; g < gens.size(); ++g)
    gidx[{gens[g].kind, {gens[g].summand, gens[g].i}}] = g;
  for (std::size_t sm = 1; sm <= s; ++sm) {
    const std::size_t one = gidx.at({Gen::Kind::One, {sm, 0}});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i) {
      const std::size_t xi = gidx.at({Gen::Kind::X, {sm, i}});
      const std::size_t di = gidx.at({Gen::Kind::D, {sm, i}});
      W.T.set_product(xi, di, AffineVec{{one, AffineExpr(Rational(1))}});
      W.T.set_product(di, xi, AffineVec{{one, AffineExpr(Rational(-1))}});
    }
  }

  // Module action rows (monomial, generator); every one acts as the identity.
  for (std::size_t t = 0; t < W.mons.size(); ++t) {
    const Polynomial p = Polynomial::monomial(W.mons[t]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Polynomial r = fock_action(p, gens[g], offsets);
      if (r.is_zero()) continue;
      if (r.degree() > window) {
        W.T.out_of_window.insert({W.mono_base + t, g});
        continue;
      }
      AffineVec v;
      for (const auto& [m, c] : r.terms())
        v[mon_index.at(m)] = AffineExpr(c);
      W.T.set_product(W.mono_base + t, g, std::move(v));
    }
  }
  return W;
}

}  // namespace

TemplateAlgebra make_hfl_template(std::size_t k, std::uint64_t deg) {
  if (k == 0) throw BadDimensionError("at least one pair is required");
  WindowedSkeleton W = hfl_skeleton_template(
      {k}, deg, "hfl-template-k" + std::to_string(k) + "-deg" + std::to_string(deg));
  TemplateAlgebra& T = W.T;
  const std::size_t one = 0;
  auto X = [&](std::size_t i) { return i; };
  auto D = [&](std::size_t i) { return k + i; };
  auto ij = [](const char* p, std::size_t i, std::size_t j) {
    return std::string(p) + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  auto only_i = [](const char* p, std::size_t i) {
    return std::string(p) + "_" + std::to_string(i);
  };
  auto poly = [&](const std::string& prefix) {
    return unknown_poly(prefix, W.mons, W.mono_base, deg, T.unknowns);
  };

  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      T.set_product(X(i), X(j), poly(ij("a", i, j)));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      T.set_product(D(i), D(j), poly(ij("b", i, j)));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (i != j) T.set_product(D(i), X(j), poly(ij("c", i, j)));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (i != j) T.set_product(X(i), D(j), poly(ij("d", i, j)));
  for (std::size_t i = 1; i <= k; ++i) {
    AffineVec v = poly(only_i("e", i));
    add_affine(v, AffineVec{{one, AffineExpr(Rational(1))}});
    T.set_product(X(i), D(i), std::move(v));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    AffineVec v = poly(only_i("f", i));
    add_affine(v, AffineVec{{one, AffineExpr(Rational(-1))}});
    T.set_product(D(i), X(i), std::move(v));
  }
  for (std::size_t i = 1; i <= k; ++i)
    T.set_product(one, X(i), poly(only_i("h", i)));
  for (std::size_t i = 1; i <= k; ++i)
    T.set_product(one, D(i), poly(only_i("g", i)));
  return T;
}

std::vector<HflConstraintRow> hfl_constraint_rows(const TemplateAlgebra& T,
                                                  std::size_t k) {
  (void)T;
  auto X = [&](std::size_t i) { return i; };
  auto D = [&](std::size_t i) { return k + i; };
  const std::size_t one = 0;
  auto ij = [](const char* p, std::size_t i, std::size_t j) {
    return std::string(p) + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  auto only_i = [](const char* p, std::size_t i) {
    return std::string(p) + "_" + std::to_string(i);
  };

  std::vector<HflConstraintRow> rows;
  {
    HflConstraintRow r{"{Xi,Xj,one} => a_{i,j} = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= k; ++j) {
        r.triples.push_back({X(i), X(j), one});
        r.polys.push_back(ij("a", i, j));
      }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{Di,Dj,one} => b_{i,j} = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= k; ++j) {
        r.triples.push_back({D(i), D(j), one});
        r.polys.push_back(ij("b", i, j));
      }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{Di,Xj,one} => c_{i,j} = 0 (i != j)", {}, {}};
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= k; ++j)
        if (i != j) {
          r.triples.push_back({D(i), X(j), one});
          r.polys.push_back(ij("c", i, j));
        }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{Xi,Dj,one} => d_{i,j} = 0 (i != j)", {}, {}};
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= k; ++j)
        if (i != j) {
          r.triples.push_back({X(i), D(j), one});
          r.polys.push_back(ij("d", i, j));
        }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{Xi,Di,one} => e_i = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i) {
      r.triples.push_back({X(i), D(i), one});
      r.polys.push_back(only_i("e", i));
    }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{Di,Xi,one} => f_i = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i) {
      r.triples.push_back({D(i), X(i), one});
      r.polys.push_back(only_i("f", i));
    }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{one,Xi,one} => h_i = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i) {
      r.triples.push_back({one, X(i), one});
      r.polys.push_back(only_i("h", i));
    }
    rows.push_back(std::move(r));
  }
  {
    HflConstraintRow r{"{one,Di,one} => g_i = 0", {}, {}};
    for (std::size_t i = 1; i <= k; ++i) {
      r.triples.push_back({one, D(i), one});
      r.polys.push_back(only_i("g", i));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

TemplateAlgebra make_generalized_hfl_template(
    const std::vector<std::size_t>& ks, std::uint64_t deg) {
  std::string name = "generalized-hfl-template";
  for (std::size_t k : ks) name += "-" + std::to_string(k);
  WindowedSkeleton W = hfl_skeleton_template(ks, deg, name);
  TemplateAlgebra& T = W.T;

  // Every cross-summand generator product is an unknown polynomial; within a
  // summand the canonical table (only the Heisenberg pairs nonzero) is known.
  std::vector<std::size_t> summand_of;
  {
    std::size_t g = 0;
    for (std::size_t sm = 1; sm <= ks.size(); ++sm)
      for (std::size_t c = 0; c < 2 * ks[sm - 1] + 1; ++c, ++g)
        summand_of.push_back(sm);
  }
  for (std::size_t a = 0; a < W.mono_base; ++a)
    for (std::size_t b = 0; b < W.mono_base; ++b) {
      if (summand_of[a] == summand_of[b]) continue;
      const std::string prefix = "p_" + T.labels[a] + "_" + T.labels[b];
      T.set_product(a, b,
                    unknown_poly(prefix, W.mons, W.mono_base, deg, T.unknowns));
    }
  return T;
}

namespace {

const char* kM1Determined[] = {"tau1",  "tau2",  "tau3",   "lambda1",
                               "lambda2", "lambda3", "mu1", "mu2",
                               "mu3",   "eta2",  "eta3",   "delta3",
                               "beta3", "theta2", "theta3"};
const char* kM1Free[] = {"alpha1", "alpha2", "alpha3", "beta1", "beta2",
                         "delta1", "delta2", "eta1",   "theta1"};

AffineVec m1_slot(const char* n1, const char* n2, const char* n3) {
  return AffineVec{{3, AffineExpr::symbol(n1)},
                   {4, AffineExpr::symbol(n2)},
                   {5, AffineExpr::symbol(n3)}};
}

}  // namespace

TemplateAlgebra make_minrep_m1_template() {
  TemplateAlgebra T;
  T.name = "one-pair-family-template";
  T.labels = {"x", "y", "z", "e1", "e2", "e3"};
  T.ideal = {3, 4, 5};
  for (const char* n : kM1Determined) T.unknowns.push_back(n);
  for (const char* n : kM1Free) T.unknowns.push_back(n);

  const Rational one(1);
  T.set_product(4, 0, AffineVec{{3, AffineExpr(one)}});   // [e2, x] = e1
  T.set_product(5, 1, AffineVec{{4, AffineExpr(one)}});   // [e3, y] = e2
  T.set_product(5, 2, AffineVec{{3, AffineExpr(one)}});   // [e3, z] = e1
  T.set_product(1, 0, AffineVec{{2, AffineExpr(one)}});   // [y, x] = z

  T.set_product(0, 0, m1_slot("alpha1", "alpha2", "alpha3"));  // [x, x]
  {
    AffineVec v = m1_slot("delta1", "delta2", "delta3");       // [x, y]
    v[2] = AffineExpr(Rational(-1));
    T.set_product(0, 1, std::move(v));
  }
  T.set_product(0, 2, m1_slot("eta1", "eta2", "eta3"));        // [x, z]
  T.set_product(1, 1, m1_slot("beta1", "beta2", "beta3"));     // [y, y]
  T.set_product(1, 2, m1_slot("theta1", "theta2", "theta3"));  // [y, z]
  T.set_product(2, 0, m1_slot("tau1", "tau2", "tau3"));        // [z, x]
  T.set_product(2, 1, m1_slot("lambda1", "lambda2", "lambda3"));  // [z, y]
  T.set_product(2, 2, m1_slot("mu1", "mu2", "mu3"));           // [z, z]
  return T;
}

TemplateAlgebra make_minrep_general_template(std::size_t m) {
  if (m < 2)
    throw BadDimensionError(
        "the general template needs m >= 2 (one pair has its own template)");
  TemplateAlgebra T;
  T.name = "general-family-template-m" + std::to_string(m);
  const std::size_t xi = 0, yi = m, zi = 2 * m, ei = 2 * m + 1;
  auto X = [&](std::size_t i) { return xi + i - 1; };
  auto Y = [&](std::size_t i) { return yi + i - 1; };
  auto E = [&](std::size_t s) { return ei + s - 1; };
  for (std::size_t i = 1; i <= m; ++i) T.labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) T.labels.push_back("y" + std::to_string(i));
  T.labels.push_back("z");
  for (std::size_t s = 1; s <= m + 2; ++s) {
    T.labels.push_back("e" + std::to_string(s));
    T.ideal.insert(E(s));
  }

  auto sym = [](const std::string& prefix, std::size_t s) {
    return prefix + "[e" + std::to_string(s) + "]";
  };
  auto p_ij = [](const char* p, std::size_t i, std::size_t j) {
    return std::string(p) + "_" + std::to_string(i) + "_" + std::to_string(j);
  };
  auto p_i = [](const char* p, std::size_t i) {
    return std::string(p) + "_" + std::to_string(i);
  };

  // Registration order: the coefficients the identity determines first, the
  // surviving free ones last, so the solver's pivots land on the former.
  for (std::size_t s = 1; s <= m + 2; ++s) T.unknowns.push_back(sym("mu", s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 1; s <= m + 2; ++s)
      T.unknowns.push_back(sym(p_i("lambda", i), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 1; s <= m + 2; ++s)
      if (!(i == 1 && s == 1)) T.unknowns.push_back(sym(p_i("tau", i), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 2; s <= m + 2; ++s)
      T.unknowns.push_back(sym(p_i("theta", i), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 2; s <= m + 2; ++s)
      T.unknowns.push_back(sym(p_i("eta", i), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t s = 2; s <= m + 2; ++s)
      T.unknowns.push_back(sym(p_i("delta", i), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j)
        for (std::size_t s = 2; s <= m + 2; ++s)
          T.unknowns.push_back(sym(p_ij("gamma", i, j), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t s = 2; s <= m + 2; ++s)
        T.unknowns.push_back(sym(p_ij("beta", i, j), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j) T.unknowns.push_back(sym(p_ij("nu", i, j), m + 2));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      T.unknowns.push_back(sym(p_ij("alpha", i, j), m + 2));
  for (std::size_t i = 2; i <= m; ++i)
    for (std::size_t s = 2; s <= m + 2; ++s)
      if (s != i + 1) T.unknowns.push_back(sym(p_i("eps", i), s));
  // Free group.
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t s = 1; s <= m + 1; ++s)
        T.unknowns.push_back(sym(p_ij("alpha", i, j), s));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      T.unknowns.push_back(sym(p_ij("beta", i, j), 1));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j) T.unknowns.push_back(sym(p_ij("gamma", i, j), 1));
  for (std::size_t i = 1; i <= m; ++i)
    T.unknowns.push_back(sym(p_i("delta", i), 1));
  for (std::size_t i = 1; i <= m; ++i)
    T.unknowns.push_back(sym(p_i("eta", i), 1));
  for (std::size_t i = 1; i <= m; ++i)
    T.unknowns.push_back(sym(p_i("theta", i), 1));
  T.unknowns.push_back(sym("tau_1", 1));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      if (i != j)
        for (std::size_t s = 1; s <= m + 1; ++s)
          T.unknowns.push_back(sym(p_ij("nu", i, j), s));
  for (std::size_t i = 2; i <= m; ++i) {
    T.unknowns.push_back(sym(p_i("eps", i), 1));
    T.unknowns.push_back(sym(p_i("eps", i), i + 1));
  }
  if (T.unknowns.size() != (4 * m * m + 4 * m) * (m + 2))
    throw Error("internal: unknown registry size mismatch");

  auto full_slot = [&](const std::string& prefix) {
    AffineVec v;
    for (std::size_t s = 1; s <= m + 2; ++s)
      v[E(s)] = AffineExpr::symbol(sym(prefix, s));
    return v;
  };

  const Rational one(1);
  // Known module action and the absorbed [y1, x1] = z.
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(E(i + 1), X(i), AffineVec{{E(1), AffineExpr(one)}});
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(E(m + 2), Y(i), AffineVec{{E(i + 1), AffineExpr(one)}});
  T.set_product(E(m + 2), zi, AffineVec{{E(1), AffineExpr(one)}});
  T.set_product(Y(1), X(1), AffineVec{{zi, AffineExpr(one)}});

  // Unknown products.
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      T.set_product(X(i), X(j), full_slot(p_ij("alpha", i, j)));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (i == j) {
        AffineVec v = full_slot(p_i("delta", i));
        v[zi] = AffineExpr(Rational(-1));
        T.set_product(X(i), Y(i), std::move(v));
      } else {
        T.set_product(X(i), Y(j), full_slot(p_ij("gamma", i, j)));
      }
    }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      T.set_product(Y(i), Y(j), full_slot(p_ij("beta", i, j)));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (i == j) {
        if (i == 1) continue;  // [y1, x1] = z is known
        AffineVec v = full_slot(p_i("eps", i));
        v[zi] = AffineExpr(one);
        T.set_product(Y(i), X(i), std::move(v));
      } else {
        T.set_product(Y(i), X(j), full_slot(p_ij("nu", i, j)));
      }
    }
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(X(i), zi, full_slot(p_i("eta", i)));
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(Y(i), zi, full_slot(p_i("theta", i)));
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(zi, X(i), full_slot(p_i("tau", i)));
  for (std::size_t i = 1; i <= m; ++i)
    T.set_product(zi, Y(i), full_slot(p_i("lambda", i)));
  T.set_product(zi, zi, full_slot("mu"));
  return T;
}

}  // namespace leibniz
