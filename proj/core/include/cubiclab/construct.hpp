#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubiclab/catalog.hpp"
#include "cubiclab/geometry.hpp"
#include "cubiclab/random.hpp"

namespace cubiclab {

struct RsciConfig {
  /// Coefficients of random combinations are uniform in [-bound, bound].
  long bound = 1;
  int max_attempts = 64;
  std::uint64_t seed = 0;
  /// Smoothness runs on the reduction modulo this prime when set.
  std::optional<std::uint32_t> filter_prime = 10007;
  /// Confirm smoothness over the ideal's own field after the filter.
  bool exact_check = false;
};

struct RsciResult {
  Ideal ideal;
  int attempts = 0;
  /// Smoothness was checked over the ideal's own field.
  bool certified = false;
};

/// e random combinations of the degree-d part of saturate(I), redrawn until
/// they cut a smooth complete intersection of codimension e. The zero ideal
/// imposes no condition (all forms of degree d are used). The field is
/// the one of I's ring. Throws RetriesExhausted after cfg.max_attempts and
/// PreconditionError when the degree-d part is empty but e ≥ 1.
RsciResult rsci(const Ideal& I, int d, int e, const RsciConfig& cfg);
RsciResult rsci(const Ideal& I, int d, int e, const RsciConfig& cfg, Rng& rng);

/// Smoothness as rsci decides it: the modular filter when configured,
/// followed by the exact check when requested.
SmoothnessResult filtered_smoothness(const Ideal& I, const RsciConfig& cfg);

struct PointSearch {
  Ideal points;
  int attempts = 0;
};

/// Ideal of i reduced, linearly independent points on the image of h, taken
/// as images of random parameter points with coordinates in
/// [-point_bound, point_bound]. i = 0 gives the unit ideal.
/// Throws RetriesExhausted after 32 draws.
PointSearch find_points_on_image(const RingMap& h, int i, Rng& rng, long point_bound = 10);

struct MergedPlane {
  /// I(image of h) ∩ I(plane).
  Ideal merged;
  Ideal plane;
  int attempts = 0;
};

/// A random plane P through Y with saturate(Z + P) = saturate(Y), Z the
/// image of h, together with Z ∩ P. Throws PreconditionError unless Y lies
/// on Z and RetriesExhausted after max_attempts planes.
MergedPlane merge_plane(const RingMap& h, const Ideal& Y, Rng& rng, long bound = 10, int max_attempts = 64);

/// Residual scheme saturate(total : part). Throws PreconditionError unless
/// part is a subscheme of total.
Ideal link(const Ideal& total, const Ideal& part);

struct Check {
  std::string name;
  /// The mathematical statement the check verifies.
  std::string claim;
  bool passed = false;
  std::string witness;
  double seconds = 0;
};

struct VerificationReport {
  std::string name;
  std::vector<Check> checks;

  bool passed() const;
  /// First failing check, if any.
  const Check* first_failure() const;
};

/// For two quartic scrolls in the cubic X meeting in finitely many points:
/// exactly one quadric contains both, it has rank 4, and its vertex line lies
/// in X and meets each scroll in a length-2 scheme. Hypothesis violations
/// are reported as failed checks.
VerificationReport verify_rank4_quadric(const Ideal& X, const Ideal& T1, const Ideal& T2);

/// Bundled fixtures: "dp-a".."dp-e" and "skew-planes".
std::vector<std::string> fixture_names();

struct FixtureOptions {
  /// Prime for the smoothness filter of the cubic; exact check when unset.
  std::optional<std::uint32_t> smoothness_prime = 10007;
};

/// Runs every check of a bundled fixture. Throws PreconditionError for an
/// unknown name; parse errors propagate.
VerificationReport run_fixture(const std::string& name, const FixtureOptions& options = {});

}  // namespace cubiclab
