// rng.hpp - counter-based random streams for reproducible parallel sampling.
#pragma once

#include <cmath>
#include <cstdint>

namespace qivar {

inline std::uint64_t avalanche64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Draw i of stream (seed, stream, block) is a pure function of those integers,
// so chunked parallel runs reproduce bit-for-bit for any worker count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0,
                     std::uint64_t block = 0)
      : key_(derive_key(seed, stream, block)) {}

  std::uint64_t next_u64() {
    return avalanche64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1], safe under log()
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Box-Muller pair of standard normals
  void normal_pair(double& n0, double& n1) {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    n0 = r * std::cos(t);
    n1 = r * std::sin(t);
  }

 private:
  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t block) {
    std::uint64_t k = avalanche64(seed ^ 0x6a09e667f3bcc909ULL);
    k = avalanche64(k ^ (stream + 0xbb67ae8584caa73bULL));
    k = avalanche64(k ^ (block + 0x3c6ef372fe94f82bULL));
    return k;
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace qivar
