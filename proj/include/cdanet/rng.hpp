#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cdanet/types.hpp"

namespace cdanet {

// Self-contained counter RNG. Keeps every run bit-reproducible regardless of
// platform or standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  Scalar next_uniform() {
    return static_cast<Scalar>(next_u64() >> 11) * 0x1.0p-53;
  }

  Scalar next_uniform(Scalar lo, Scalar hi) {
    return lo + (hi - lo) * next_uniform();
  }

  // Box-Muller, one value per call (the pair partner is discarded).
  Scalar next_normal() {
    Scalar u1 = next_uniform();
    Scalar u2 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable sub-stream derivation: one master seed fans out to independent
// component streams keyed by name (and an optional index such as epoch).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ master;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline Mat random_uniform_matrix(Index rows, Index cols, Scalar lo, Scalar hi,
                                 Rng& rng) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = rng.next_uniform(lo, hi);
  return m;
}

// Scale-stable init for a weight mapping fan_in -> fan_out.
inline Mat glorot_uniform(Index fan_in, Index fan_out, Index rows, Index cols,
                          Rng& rng) {
  const Scalar limit = std::sqrt(6.0 / static_cast<Scalar>(fan_in + fan_out));
  return random_uniform_matrix(rows, cols, -limit, limit, rng);
}

}  // namespace cdanet
