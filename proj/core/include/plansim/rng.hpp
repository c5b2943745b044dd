#pragma once

#include <cstdint>
#include <random>

namespace plansim {

// SplitMix64 finalizer (Steele, Lea & Flood 2014).
std::uint64_t mix64(std::uint64_t x);

// Seed for stream `index` derived from `base`: the index-th output of a
// SplitMix64 sequence started at `base`, i.e.
//   mix64(base + (index + 1) * 0x9E3779B97F4A7C15).
// mix64 is a bijection, so distinct indices give distinct seeds.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

// Portable random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the conversions below are written out
// here instead of using <random> distributions, whose algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace plansim
