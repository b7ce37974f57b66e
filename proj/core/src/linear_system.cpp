#include "leibniz/linear_system.hpp"

#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  c += o.c;
  for (const auto& [name, coeff] : o.terms) {
    auto it = terms.find(name);
    if (it == terms.end()) {
      terms.emplace(name, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
  c -= o.c;
  for (const auto& [name, coeff] : o.terms) {
    auto it = terms.find(name);
    if (it == terms.end()) {
      terms.emplace(name, -coeff);
    } else {
      it->second -= coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    c = Rational();
    terms.clear();
    return *this;
  }
  c *= k;
  for (auto& [name, coeff] : terms) coeff *= k;
  return *this;
}

AffineExpr operator*(const AffineExpr& a, const AffineExpr& b) {
  if (a.is_constant()) return b * a.c;
  if (b.is_constant()) return a * b.c;
  throw NonlinearTemplateError(
      "product of two non-constant affine expressions ('" + a.str() +
      "' * '" + b.str() + "')");
}

Rational AffineExpr::evaluate(
    const std::map<std::string, Rational>& values) const {
  Rational out = c;
  for (const auto& [name, coeff] : terms) {
    auto it = values.find(name);
    if (it == values.end())
      throw MissingParameterError("no value given for parameter '" + name +
                                  "'");
    out += coeff * it->second;
  }
  return out;
}

AffineExpr AffineExpr::substitute(
    const std::map<std::string, AffineExpr>& repl) const {
  AffineExpr out(c);
  for (const auto& [name, coeff] : terms) {
    auto it = repl.find(name);
    if (it == repl.end()) {
      out += coeff * AffineExpr::symbol(name);
    } else {
      out += coeff * it->second;
    }
  }
  return out;
}

std::string AffineExpr::str() const {
  std::ostringstream os;
  bool wrote = false;
  if (!c.is_zero()) {
    os << c.str();
    wrote = true;
  }
  for (const auto& [name, coeff] : terms) {
    if (wrote) {
      if (coeff.sign() < 0) {
        os << " - ";
        Rational a = coeff.abs();
        if (!a.is_one()) os << a.str() << "*";
      } else {
        os << " + ";
        if (!coeff.is_one()) os << coeff.str() << "*";
      }
    } else {
      if (coeff == Rational(-1)) {
        os << "-";
      } else if (!coeff.is_one()) {
        os << coeff.str() << "*";
      }
    }
    os << name;
    wrote = true;
  }
  if (!wrote) return "0";
  return os.str();
}

std::map<std::string, Rational> SolutionSpace::instantiate(
    const std::map<std::string, Rational>& values) const {
  for (const auto& p : free_params)
    if (values.find(p) == values.end())
      throw MissingParameterError("no value given for free parameter '" + p +
                                  "'");
  std::map<std::string, Rational> out;
  for (const auto& [name, expr] : assignment) out[name] = expr.evaluate(values);
  return out;
}

std::size_t LinearSystem::add_variable(const std::string& name) {
  auto it = m_index.find(name);
  if (it != m_index.end()) return it->second;
  const std::size_t idx = m_names.size();
  m_names.push_back(name);
  m_index.emplace(name, idx);
  return idx;
}

std::size_t LinearSystem::var_index(const std::string& name) const {
  auto it = m_index.find(name);
  if (it == m_index.end())
    throw UnknownLabelError("unknown variable '" + name + "'");
  return it->second;
}

void LinearSystem::add_equation(const AffineExpr& expr) {
  Row row;
  row.constant = expr.c;
  for (const auto& [name, coeff] : expr.terms)
    row.coeffs[var_index(name)] = coeff;
  if (row.coeffs.empty() && row.constant.is_zero()) return;  // trivially true
  // Canonicalize: leading coefficient 1 (or constant 1 for coeff-free rows).
  Rational lead =
      row.coeffs.empty() ? row.constant : row.coeffs.begin()->second;
  const Rational inv = lead.inverse();
  for (auto& [idx, coeff] : row.coeffs) coeff *= inv;
  row.constant *= inv;
  std::ostringstream key;
  for (const auto& [idx, coeff] : row.coeffs)
    key << idx << ":" << coeff.str() << ";";
  key << "=" << row.constant.str();
  if (!m_row_keys.insert(key.str()).second) return;  // duplicate row
  m_rows.push_back(std::move(row));
}

SolutionSpace LinearSystem::solve() const {
  const std::size_t nvars = m_names.size();
  // Assemble [A | b] with b as the last column; rref pivots leftmost-first,
  // so earlier-registered variables become the determined ones.
  Matrix aug(m_rows.size(), nvars + 1);
  for (std::size_t r = 0; r < m_rows.size(); ++r) {
    for (const auto& [idx, coeff] : m_rows[r].coeffs) aug.at(r, idx) = coeff;
    aug.at(r, nvars) = m_rows[r].constant;
  }
  RrefResult red = rref(std::move(aug));
  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t c : red.pivot_cols) {
    if (c == nvars)
      throw InconsistentError("linear system has no solution");
    is_pivot[c] = true;
  }

  SolutionSpace sol;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!is_pivot[v]) sol.free_params.push_back(m_names[v]);
  sol.rank = red.rank;

  // Free variables map to themselves.
  for (const auto& name : sol.free_params)
    sol.assignment[name] = AffineExpr::symbol(name);
  // Pivot row i solves variable pivot_cols[i]:
  //   x_p = -constant - sum(R[i][j] * x_j) over free columns j.
  for (std::size_t i = 0; i < red.rank; ++i) {
    const std::size_t p = red.pivot_cols[i];
    AffineExpr expr(-red.R.at(i, nvars));
    for (std::size_t j = 0; j < nvars; ++j) {
      if (is_pivot[j]) continue;
      const Rational& coeff = red.R.at(i, j);
      if (!coeff.is_zero()) expr -= coeff * AffineExpr::symbol(m_names[j]);
    }
    sol.assignment[m_names[p]] = std::move(expr);
  }
  return sol;
}

}  // namespace leibniz
