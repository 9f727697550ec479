#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bigrad/tensor.hpp"

namespace bigrad {

/// Counter-based generator: output k of stream `seed` is a pure function of
/// (seed, k), so identical (seed, call sequence) pairs reproduce bit-for-bit
/// on every platform. Derived streams (`split`) are independent of the parent
/// stream's position, which keeps runs reproducible when parameters are
/// sharded across owners.
class RngState {
 public:
  explicit RngState(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double next_double();
  double next_uniform(double lo, double hi);
  /// Uniform in [0, n) without modulo bias (fixed-point multiply).
  int64_t next_below(int64_t n);
  /// Standard normal via Box-Muller; consumes two draws.
  double next_normal();

  /// Child stream derived from (seed, stream id); does not touch the counter.
  RngState split(uint64_t stream) const;

 private:
  uint64_t seed_ = 0;
  uint64_t counter_ = 0;
};

/// Fresh tensor with i.i.d. entries uniform in [lo, hi). Throws ValueError
/// when lo >= hi.
Tensor rng_uniform(RngState& rng, const std::vector<int64_t>& shape, double lo, double hi);

/// In-place Fisher-Yates shuffle.
void shuffle_indices(RngState& rng, std::span<int64_t> idx);

}  // namespace bigrad
