#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gfstream/ratgf.hpp"
#include "gfstream/series.hpp"

namespace gfs {

// Online evaluator of (Tz)_t for a lower-triangular Toeplitz matrix T. A
// streamer owns a buffer of exact rationals; step() feeds z_t, applies the
// update map and returns the readout. buffer_size() reports the number of
// stored scalars after the most recent update, which is the quantity the
// space-complexity statements are about. Single-owner: not safe for
// concurrent stepping.
class Streamer {
 public:
  virtual ~Streamer() = default;

  /// Feeds z_t for t = time() + 1 and returns (Tz)_t.
  Rat step(const Rat& z);

  /// Index of the last input processed; -1 before the first step.
  long long time() const { return time_; }

  /// Number of stored scalars, beta(time()).
  virtual std::size_t buffer_size() const = 0;

  virtual std::unique_ptr<Streamer> clone() const = 0;

 protected:
  virtual Rat do_step(const Rat& z) = 0;

 private:
  long long time_ = -1;
};

struct StreamRun {
  std::vector<Rat> inputs;
  std::vector<Rat> outputs;
  std::size_t max_buffer = 0;
};

/// Reference streamer: keeps the raw prefix z_0..z_t (buffer t+1) and
/// outputs the convolution sum_{j<=t} a_{t-j} z_j directly. Throws
/// std::domain_error when the run outlives the order of a.
std::unique_ptr<Streamer> dense_streamer(const Series& a);

/// Constant-buffer streamer for a rational generating function of degree d:
/// buffer min{t+1, d}. For t < d the state is the raw input prefix; from
/// t = d on it is the d-vector (y_t, r_1, ..., r_{d-1}) of the transposed
/// direct-form realization of P/Q, seeded at the switchover by replaying
/// the stored prefix through the registers. Degree 0 (the zero function)
/// degenerates to a buffer-1 scaler.
std::unique_ptr<Streamer> rational_streamer(const RationalGF& g);

/// Streamer for M = LR: feeds each input through `right` and its readout
/// through `left`; buffer is the sum of the two. Both arguments are cloned.
std::unique_ptr<Streamer> compose_seq(const Streamer& left,
                                      const Streamer& right);

/// Streamer for M = A + B: runs both on the input and sums the readouts;
/// buffer is the sum of the two. Both arguments are cloned.
std::unique_ptr<Streamer> compose_par(const Streamer& a, const Streamer& b);

/// Feeds z in order, recording outputs and the peak buffer size.
StreamRun run(Streamer& s, const std::vector<Rat>& z);

}  // namespace gfs
