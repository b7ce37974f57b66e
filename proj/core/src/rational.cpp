#include "leibniz/rational.hpp"

#include <cctype>
#include <ostream>

namespace leibniz {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("Rational: empty string");
  // Accept an optional sign, digits, optionally "/" and a signed integer.
  auto check_int = [&](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw ParseError("Rational: malformed '" + s + "'");
    return Rational(mpq_class(mpz_class(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw ParseError("Rational: malformed '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_square() const {
  if (sgn(v_) < 0) return false;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
  if (!is_square()) throw Error("Rational: sqrt of a non-square");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

namespace {

// Squarefree part of a positive integer by removing square prime factors.
// Values seen here come from human-scale family parameters, so trial division
// is adequate; a perfect-square check catches any large leftover square.
mpz_class squarefree_part(mpz_class n) {
  mpz_class result = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  // n is now 1 or a prime > sqrt(original reduced n): prime occurs once.
  return result * n;
}

}  // namespace

Rational Rational::squarefree_kernel() const {
  if (is_zero()) return Rational();
  // p/q in lowest terms has the same square class as the integer p*q.
  mpz_class pq = v_.get_num() * v_.get_den();
  const int s = sgn(pq);
  mpz_class k = squarefree_part(::abs(pq));
  return Rational(mpq_class(s < 0 ? mpz_class(-k) : k));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return Rational();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

}  // namespace leibniz
