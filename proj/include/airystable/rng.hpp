#ifndef AIRYSTABLE_RNG_HPP
#define AIRYSTABLE_RNG_HPP

#include <cstdint>
#include <random>

namespace airystable {

/// Seeded random stream with platform-independent output.  The engine is
/// mt19937_64 (standard-defined sequence) and all variates are derived by
/// explicit inversion, never through implementation-defined
/// std distributions.  One stream must not be shared across threads;
/// derive one substream per worker instead.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0) {}

  /// Substream w of a master seed; distinct w give independent streams.
  RandomStream(std::uint64_t seed, std::uint64_t substream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(substream),
                      static_cast<std::uint32_t>(substream >> 32),
                      0x9e3779b9u};
    engine_.seed(seq);
  }

  /// Uniform on the open interval (0,1); never returns 0 or 1.
  double u01() {
    const std::uint64_t r = engine_() >> 11;  // 53 random bits
    return (static_cast<double>(r) + 0.5) * 0x1p-53;
  }

  /// Unit exponential by inversion.
  double exp1() { return -std::log(u01()); }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Worker count for parallel Monte Carlo: explicit request, else the
/// AIRYSTABLE_THREADS environment variable, else hardware concurrency.
int mc_worker_count(int requested = 0);

}  // namespace airystable

#endif
