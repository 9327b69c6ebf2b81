#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cvxgap/campaign.hpp"
#include "cvxgap/generator.hpp"
#include "cvxgap/rng.hpp"

namespace testutil {

struct PoolEntry {
  std::uint64_t seed;
  cvxgap::Interval interval;
  cvxgap::ConvexFunction f;
};

// Mixed pool of random convex functions on random intervals, mirroring the
// draws the campaigns make.
inline std::vector<PoolEntry> make_pool(int count, std::uint64_t master_seed,
                                        double a_lo = -3.0, double a_hi = 2.0,
                                        double len_lo = 0.5, double len_hi = 3.0,
                                        int max_hinges = 5) {
  std::vector<PoolEntry> pool;
  pool.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::uint64_t sub = cvxgap::mix_seed(master_seed, static_cast<std::uint64_t>(i));
    cvxgap::Rng rng(sub);
    const double a = rng.uniform(a_lo, a_hi);
    const cvxgap::Interval I(a, a + rng.uniform(len_lo, len_hi));
    cvxgap::ConvexGeneratorSpec spec;
    spec.n_hinges = rng.uniform_int(0, max_hinges);
    spec.seed = cvxgap::mix_seed(sub, 0x1001);
    pool.push_back(PoolEntry{sub, I, cvxgap::generate_convex(spec, I)});
  }
  return pool;
}

class TempFile {
public:
  explicit TempFile(const std::string& name, const std::string& contents) {
    path_ = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path_, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace testutil
