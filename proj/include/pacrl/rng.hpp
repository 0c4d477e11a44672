#pragma once

#include <cmath>
#include <cstdint>

namespace pacrl {

// SplitMix64 step. Used both as a mixer for seed derivation and as the
// core of the counter-based generator below; byte-identical output on
// every platform, unlike the std <random> distributions.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed. Nested calls
// (master, iteration, sample, ...) give per-unit streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : counter_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return splitmix64(counter_++); }

  // Uniform double in [0, 1).
  double uniform01() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

  // Uniform int in [0, n). Modulo bias is negligible for the tiny n used here.
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::uint64_t counter_;
};

}  // namespace pacrl
