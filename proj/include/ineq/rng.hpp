#ifndef INEQ_RNG_HPP
#define INEQ_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace ineq {

/// Counter-based generator: every draw is a hash of (key, counter), where the
/// key mixes a global seed with a stream index.  Streams keyed by sample index
/// are independent of evaluation order, so parallel fuzzing stays
/// deterministic for any worker count.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (fixed two-draw consumption).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  std::size_t pick_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[pick_index(items.size())];
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ineq

#endif
