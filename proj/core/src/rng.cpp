#include "bigrad/rng.hpp"

#include <cmath>

#include "bigrad/errors.hpp"

namespace bigrad {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer
uint64_t mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1E3DCE4DULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t RngState::next_u64() {
  ++counter_;
  return mix(seed_ + counter_ * kGolden);
}

double RngState::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngState::next_uniform(double lo, double hi) {
  return lo + next_double() * (hi - lo);
}

int64_t RngState::next_below(int64_t n) {
  if (n <= 0) throw ValueError("next_below: n must be positive");
  const auto x = static_cast<unsigned __int128>(next_u64());
  return static_cast<int64_t>((x * static_cast<unsigned __int128>(n)) >> 64);
}

double RngState::next_normal() {
  // Box-Muller; u1 nudged away from 0 so log stays finite.
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-53));
  return r * std::cos(2.0 * M_PI * u2);
}

RngState RngState::split(uint64_t stream) const {
  // XOR structure differs from the additive value stream, so child seeds do
  // not collide with parent outputs.
  return RngState(mix(seed_ ^ mix(stream + kGolden)));
}

Tensor rng_uniform(RngState& rng, const std::vector<int64_t>& shape, double lo, double hi) {
  if (!(lo < hi)) throw ValueError("rng_uniform: requires lo < hi");
  Tensor out(shape, 0.0);
  for (int64_t i = 0; i < out.size(); ++i) out[i] = rng.next_uniform(lo, hi);
  return out;
}

void shuffle_indices(RngState& rng, std::span<int64_t> idx) {
  for (int64_t i = static_cast<int64_t>(idx.size()) - 1; i > 0; --i) {
    const int64_t j = rng.next_below(i + 1);
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
}

}  // namespace bigrad
