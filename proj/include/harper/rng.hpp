// Deterministic counter-based random numbers.
//
// Every (seed, stream) pair yields an independent substream whose j-th
// variate depends only on (seed, stream, j). Monte Carlo drivers assign one
// stream per trial, so estimates are bit-reproducible for any thread count
// and any scheduling of trials. The generator applies the splitmix64
// finalizer to key + j*gamma, i.e. each stream is a splitmix64 sequence
// with a hashed per-stream seed.
#pragma once

#include <cmath>
#include <cstdint>

#include "harper/common.hpp"

namespace harper {

namespace detail {
inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(detail::mix64(detail::mix64(seed + detail::golden_gamma) ^
                           detail::mix64(stream * 0xd1342543de82ef95ull + 1))),
        counter_(0) {}

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (++counter_) * detail::golden_gamma);
  }

  // Uniform on (0,1): 53-bit grid offset by half a step, so 0 and 1 never
  // occur and log(u) is always finite.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_exponential(double rate) { return -std::log(next_unit()) / rate; }

  // Uniform integer in [0, m) via the 128-bit multiply reduction.
  std::uint64_t next_below(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * m) >> 64);
  }

  double next_normal() {  // Box–Muller, cosine branch
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace harper
