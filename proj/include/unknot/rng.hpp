#pragma once

#include <cstdint>

namespace unknot {

/// Counter-based generator (SplitMix64 finalizer over a Weyl sequence).
/// `split` derives independent child streams, so parallel workers stay reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : state_(mix(seed)) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  Rng split(std::uint64_t stream) const { return Rng(mix(state_ ^ mix(stream + 0x632be59bd9b4e019ULL))); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

}  // namespace unknot
