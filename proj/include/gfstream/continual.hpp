#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "gfstream/ratgf.hpp"
#include "gfstream/streamkit.hpp"

namespace gfs {

// Rational-valued noise: either a seeded deterministic generator of small
// rationals (k/8 with k uniform in [-8, 8], reproducible across platforms)
// or an explicit recorded list that throws when exhausted.
class NoiseSource {
 public:
  static NoiseSource seeded(std::uint64_t seed);
  static NoiseSource recorded(std::vector<Rat> values);

  Rat next();

 private:
  NoiseSource() = default;
  bool use_rng_ = false;
  std::mt19937_64 rng_;
  std::vector<Rat> values_;
  std::size_t pos_ = 0;
};

// Correlated-noise continual counting scaffold: on each input z_t the
// mechanism draws y_t and outputs (T_1 z)_t + (L y)_t, where T_1 is the
// prefix-sum streamer and L is the caller's noise-shaping streamer. The
// total buffer is 1 + buffer(L). Privacy calibration is out of scope; the
// point here is bit-exact streaming of the mechanism's linear algebra.
class Mechanism {
 public:
  Mechanism(std::unique_ptr<Streamer> noise_shaper, NoiseSource noise);

  Rat step(const Rat& z);
  std::size_t buffer_size() const;
  long long time() const { return counter_->time(); }
  const std::vector<Rat>& noise_used() const { return noise_used_; }

 private:
  std::unique_ptr<Streamer> counter_;
  std::unique_ptr<Streamer> shaper_;
  NoiseSource noise_;
  std::vector<Rat> noise_used_;
};

struct MechanismReport {
  std::vector<Rat> outputs;
  std::vector<Rat> noise;
  std::size_t max_buffer = 0;
  Rat coeff_error;       // max deviation of the shaper from 1/sqrt(1-x)
  RationalGF shaper_gf;  // the Pade approximant backing L
};

/// Runs the mechanism with L = rational_streamer(pade(g_half, approx_degree))
/// and seeded noise over the first `length` entries of z (which must be at
/// least that long). Requires approx_degree >= 1.
MechanismReport mechanism_run(std::size_t length, std::size_t approx_degree,
                              std::uint64_t seed, const std::vector<Rat>& z);

}  // namespace gfs
