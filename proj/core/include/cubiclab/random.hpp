#pragma once

#include <cstdint>
#include <random>

namespace cubiclab {

/// Reproducible random source: a 64-bit Mersenne twister whose state is
/// derived from (seed, stream) through std::seed_seq, so every stream is
/// fully determined by the standard. Ranges are mapped by rejection
/// sampling rather than std distributions, whose output is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  /// Independent generator for a sub-computation.
  Rng split(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x9e3779b97f4a7c15ull + stream + 1); }

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace cubiclab
