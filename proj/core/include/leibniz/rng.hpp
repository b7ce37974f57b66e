#pragma once

#include <cstdint>
#include <random>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Deterministic random source for tests and sampling. Built on mt19937_64
/// with explicit modulo reduction instead of std::uniform_int_distribution,
/// whose output is implementation-defined; the stream is therefore identical
/// on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : m_gen(seed) {}

  std::uint64_t next_u64() { return m_gen(); }

  /// Uniform-ish integer in [lo, hi] (inclusive). The slight modulo bias is
  /// irrelevant at the ranges used here and keeps the stream reproducible.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  /// Random rational p/q with p in [lo, hi] and q in [1, max_den].
  Rational rational(std::int64_t lo, std::int64_t hi,
                    std::int64_t max_den = 6);

  /// Nonzero variant of rational(); retries until nonzero.
  Rational nonzero_rational(std::int64_t lo, std::int64_t hi,
                            std::int64_t max_den = 6);

  /// True with probability roughly num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 m_gen;
};

}  // namespace leibniz
