#pragma once

#include <cstdint>
#include <random>

namespace cvxgap {

/// Seedable generator with platform-independent output. mt19937_64 has a
/// fully specified sequence; the uniform mappings below avoid
/// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n). Modulo bias is negligible for test-scale n.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 gen_;
};

/// splitmix64 step; used to derive independent sub-seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cvxgap
