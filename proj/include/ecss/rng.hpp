#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace ecss {

/// Seeded 64-bit Mersenne Twister (std::mt19937_64, whose output sequence
/// is fixed by the C++ standard) with a portable bounded draw. Bounded
/// values use modulo rejection sampling: draws below 2^64 mod bound are
/// discarded, the rest are reduced modulo bound. std::uniform_int_distribution
/// is avoided because its algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Fisher-Yates, from the back.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ecss
