#include "leibniz/rng.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error("Rng::integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(m_gen() % span);
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi,
                       std::int64_t max_den) {
  const std::int64_t p = integer(lo, hi);
  const std::int64_t q = integer(1, max_den);
  return Rational(p, q);
}

Rational Rng::nonzero_rational(std::int64_t lo, std::int64_t hi,
                               std::int64_t max_den) {
  if (lo == 0 && hi == 0) throw Error("Rng::nonzero_rational: empty range");
  for (;;) {
    Rational r = rational(lo, hi, max_den);
    if (!r.is_zero()) return r;
  }
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error("Rng::chance: zero denominator");
  return m_gen() % den < num;
}

}  // namespace leibniz
