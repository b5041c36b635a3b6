#ifndef HRW_RNG_HPP
#define HRW_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace hrw {

// Seed for shard k of a sharded run, derived from the master seed by a fixed
// 64-bit mix (splitmix64 finalizer). Sharded results depend on (seed, shard
// count) only, never on thread scheduling.
std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard);

// Seeded generator used by every sampler in the library. The engine is
// mt19937_64; uniforms are built from the top 53 bits of one engine output so
// the stream is reproducible from (generator name, seed) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1]. Never returns 0, so -log(uniform()) is finite.
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * kInv53;
  }

  // One Box-Muller pair of independent standard normals (two uniforms in,
  // two normals out; no hidden cache, so the draw count per call is fixed).
  std::pair<double, double> gaussian_pair() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  }

  std::uint64_t raw() { return engine_(); }

  static constexpr const char* kName = "mt19937_64";

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  static constexpr double kTwoPi = 6.28318530717958647692528676655900577;
  std::mt19937_64 engine_;
};

}  // namespace hrw

#endif  // HRW_RNG_HPP
