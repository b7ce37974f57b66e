#include "leibniz/fock.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/errors.hpp"
#include "leibniz/parallel.hpp"

namespace leibniz {

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

std::string Monomial::label() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (v + 1);
    if (e[v] > 1) out << '^' << e[v];
  }
  return first ? "1" : out.str();
}

Polynomial Polynomial::monomial(Monomial m, Rational coeff) {
  Polynomial p(m.nvars());
  p.add_term(m, coeff);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  return monomial(Monomial(nvars), std::move(c));
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : m_terms) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = m_terms.find(m);
  return it == m_terms.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (m.nvars() != m_nvars)
    throw BadDimensionError("monomial has " + std::to_string(m.nvars()) +
                            " variables, polynomial has " +
                            std::to_string(m_nvars));
  if (coeff.is_zero()) return;
  auto [it, inserted] = m_terms.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) m_terms.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.m_nvars != m_nvars && !o.is_zero() && !is_zero())
    throw BadDimensionError("polynomial variable counts differ");
  for (const auto& [m, c] : o.m_terms) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.m_terms) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (k.is_zero()) {
    m_terms.clear();
    return *this;
  }
  for (auto& [m, c] : m_terms) c *= k;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(m_nvars);
  for (const auto& [ma, ca] : m_terms)
    for (const auto& [mb, cb] : o.m_terms) {
      std::vector<std::uint32_t> e = ma.e;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += mb.e[v];
      out.add_term(Monomial(std::move(e)), ca * cb);
    }
  return out;
}

Polynomial Polynomial::mul_var(std::size_t var) const {
  Polynomial out(m_nvars);
  for (const auto& [m, c] : m_terms) {
    std::vector<std::uint32_t> e = m.e;
    e.at(var) += 1;
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial Polynomial::deriv(std::size_t var) const {
  Polynomial out(m_nvars);
  for (const auto& [m, c] : m_terms) {
    if (m.e.at(var) == 0) continue;
    std::vector<std::uint32_t> e = m.e;
    const Rational k = c * Rational(static_cast<long>(e[var]));
    e[var] -= 1;
    out.add_term(Monomial(std::move(e)), k);
  }
  return out;
}

std::string Polynomial::str() const {
  if (m_terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : m_terms) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const std::string ml = m.label();
    if (ml == "1") {
      out << mag.str();
    } else {
      if (!mag.is_one()) out << mag.str() << '*';
      out << ml;
    }
  }
  return out.str();
}

std::string gen_label(const Gen& g, std::size_t total_summands) {
  std::ostringstream out;
  switch (g.kind) {
    case Gen::Kind::One:
      out << "one";
      break;
    case Gen::Kind::X:
      out << 'X' << g.i;
      break;
    case Gen::Kind::D:
      out << 'D' << g.i;
      break;
  }
  if (total_summands > 1) out << '@' << g.summand;
  return out.str();
}

Polynomial fock_action(const Polynomial& p, const Gen& g,
                       const std::vector<std::size_t>& var_offsets) {
  switch (g.kind) {
    case Gen::Kind::One:
      return p;
    case Gen::Kind::X:
      return p.mul_var(var_offsets.at(g.summand - 1) + g.i - 1);
    case Gen::Kind::D:
      return p.deriv(var_offsets.at(g.summand - 1) + g.i - 1);
  }
  throw Error("unreachable generator kind");
}

namespace {

void enumerate_exponents(std::size_t pos, std::uint64_t remaining,
                         std::vector<std::uint32_t>& cur,
                         std::vector<Monomial>& out) {
  if (pos == cur.size()) {
    out.emplace_back(cur);
    return;
  }
  for (std::uint64_t v = 0; v <= remaining; ++v) {
    cur[pos] = static_cast<std::uint32_t>(v);
    enumerate_exponents(pos + 1, remaining - v, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars,
                                      std::uint64_t window) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  enumerate_exponents(0, window, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Materialized materialize(const GradedAlgebra& G, std::uint64_t window) {
  const std::size_t ng = G.gens.size();
  const std::vector<Monomial> mons = monomials_up_to(G.nvars, window);

  std::vector<std::string> labels = G.gen_labels;
  std::map<Monomial, std::size_t> mon_index;
  for (std::size_t t = 0; t < mons.size(); ++t) {
    mon_index[mons[t]] = ng + t;
    labels.push_back(mons[t].label());
  }

  Materialized M{Algebra(G.name, labels), window, {}};

  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b) {
      auto it = G.gen_products.find({a, b});
      if (it == G.gen_products.end()) continue;
      Vec v;
      for (const auto& [coord, c] : it->second)
        if (!c.is_zero()) v[coord] = c;
      if (!v.empty()) M.algebra.set_product(a, b, v);
    }

  for (std::size_t t = 0; t < mons.size(); ++t) {
    const Polynomial p = Polynomial::monomial(mons[t]);
    for (std::size_t b = 0; b < ng; ++b) {
      const Polynomial r = G.action(p, b);
      if (r.is_zero()) continue;
      if (r.degree() > window) {
        M.out_of_window.insert({ng + t, b});
        continue;
      }
      Vec v;
      for (const auto& [m, c] : r.terms()) v[mon_index.at(m)] = c;
      M.algebra.set_product(ng + t, b, v);
    }
  }
  return M;
}

namespace {

/// Bracket of a concrete vector with basis element k (on the chosen side),
/// refusing when any needed product is out of window.
bool guarded_bracket(const Materialized& M, const Vec& v, std::size_t k,
                     bool vector_on_left, Vec& out) {
  for (const auto& [c, coeff] : v) {
    const auto key = vector_on_left ? std::make_pair(c, k)
                                    : std::make_pair(k, c);
    if (M.out_of_window.count(key)) return false;
    vec_axpy(out, coeff, M.algebra.product(key.first, key.second));
  }
  return true;
}

}  // namespace

CheckReport leibniz_check(const Materialized& M) {
  const std::size_t n = M.algebra.dim();
  const std::size_t total = n * n * n;
  const std::size_t workers =
      total == 0 ? 1 : std::min(thread_budget(), total);
  std::vector<std::vector<std::pair<std::size_t, CheckViolation>>> found(
      workers == 0 ? 1 : workers);
  std::vector<std::uint64_t> checked(found.size(), 0),
      skipped(found.size(), 0);

  parallel_blocks(0, total, [&](std::size_t lo, std::size_t hi,
                                std::size_t w) {
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t i = t / (n * n);
      const std::size_t j = (t / n) % n;
      const std::size_t k = t % n;
      if (M.out_of_window.count({i, j}) || M.out_of_window.count({i, k}) ||
          M.out_of_window.count({j, k})) {
        ++skipped[w];
        continue;
      }
      Vec res;
      Vec tmp;
      bool ok = guarded_bracket(M, M.algebra.product(i, j), k, true, res);
      if (ok) {
        tmp.clear();
        ok = guarded_bracket(M, M.algebra.product(i, k), j, true, tmp);
        if (ok) vec_axpy(res, Rational(-1), tmp);
      }
      if (ok) {
        tmp.clear();
        ok = guarded_bracket(M, M.algebra.product(j, k), i, false, tmp);
        if (ok) vec_axpy(res, Rational(-1), tmp);
      }
      if (!ok) {
        ++skipped[w];
        continue;
      }
      ++checked[w];
      if (!res.empty() && found[w].size() < CheckReport::max_violations)
        found[w].push_back({t, CheckViolation{i, j, k, std::move(res)}});
    }
  });

  CheckReport rep;
  for (std::size_t w = 0; w < found.size(); ++w) {
    rep.checked += checked[w];
    rep.skipped += skipped[w];
  }
  std::vector<std::pair<std::size_t, CheckViolation>> merged;
  for (auto& f : found)
    for (auto& v : f) merged.push_back(std::move(v));
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (merged.size() > CheckReport::max_violations)
    merged.resize(CheckReport::max_violations);
  for (auto& v : merged) rep.violations.push_back(std::move(v.second));
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

GradedAlgebra hfl_skeleton(const std::vector<std::size_t>& ks,
                           const std::string& name, std::uint64_t d) {
  GradedAlgebra G;
  G.name = name;
  G.default_window = d;
  const std::size_t s = ks.size();
  std::vector<std::size_t> offsets(s, 0);
  for (std::size_t i = 1; i < s; ++i) offsets[i] = offsets[i - 1] + ks[i - 1];
  G.nvars = offsets.back() + ks.back();

  std::map<std::pair<Gen::Kind, std::pair<std::size_t, std::size_t>>,
           std::size_t>
      index;
  auto push = [&](Gen g) {
    index[{g.kind, {g.summand, g.i}}] = G.gens.size();
    G.gen_labels.push_back(gen_label(g, s));
    G.gens.push_back(g);
  };
  for (std::size_t sm = 1; sm <= s; ++sm) {
    push({Gen::Kind::One, 0, sm});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i) push({Gen::Kind::X, i, sm});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i) push({Gen::Kind::D, i, sm});
  }
  for (std::size_t sm = 1; sm <= s; ++sm) {
    const std::size_t one = index.at({Gen::Kind::One, {sm, 0}});
    for (std::size_t i = 1; i <= ks[sm - 1]; ++i) {
      const std::size_t xi = index.at({Gen::Kind::X, {sm, i}});
      const std::size_t di = index.at({Gen::Kind::D, {sm, i}});
      G.gen_products[{xi, di}] = {{one, Rational(1)}};
      G.gen_products[{di, xi}] = {{one, Rational(-1)}};
    }
  }
  auto gens = G.gens;  // copy for the closure; G.gens stays authoritative
  G.action = [gens, offsets](const Polynomial& p, std::size_t b) {
    return fock_action(p, gens.at(b), offsets);
  };
  return G;
}

}  // namespace

GradedAlgebra build_hfl(std::size_t n, std::uint64_t d) {
  if (n < 3 || n % 2 == 0)
    throw BadDimensionError("Heisenberg-Fock dimension must be odd and >= 3, got " +
                            std::to_string(n));
  return hfl_skeleton({(n - 1) / 2}, "HFL" + std::to_string(n), d);
}

GradedAlgebra build_generalized_hfl(const std::vector<std::size_t>& ks,
                                    std::uint64_t d) {
  if (ks.empty())
    throw BadDimensionError("at least one summand is required");
  std::string name = "HFL";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] == 0)
      throw BadDimensionError("summand pair counts must be >= 1");
    name += (i ? "+" : "") + std::to_string(2 * ks[i] + 1);
  }
  return hfl_skeleton(ks, name, d);
}

}  // namespace leibniz
