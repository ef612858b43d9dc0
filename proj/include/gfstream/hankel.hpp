#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfstream/series.hpp"

namespace gfs {

// The (I+1) x (J+1) truncation of the Hankel matrix of a sequence:
// entry(i, j) = a_{i+j}. Entries are read from the series on demand; no
// dense copy exists until an elimination routine builds its own scratch.
class HankelView {
 public:
  /// Requires order(a) >= I + J so every entry exists.
  HankelView(Series source, std::size_t I, std::size_t J);

  const Rat& entry(std::size_t i, std::size_t j) const;
  std::size_t rows() const { return I_ + 1; }
  std::size_t cols() const { return J_ + 1; }
  bool square() const { return I_ == J_; }

 private:
  Series source_;
  std::size_t I_, J_;
};

/// Exact determinant by fraction-free (Bareiss) elimination over integers
/// after clearing denominators column-wise. Requires a square view.
Rat det(const HankelView& h);

/// Exact rank over the rationals (same fraction-free elimination).
std::size_t rank(const HankelView& h);

/// Rank plus the column indices of the pivot columns, which form a maximal
/// linearly independent set.
struct RankWitness {
  std::size_t rank = 0;
  std::vector<std::size_t> columns;
};
RankWitness rank_with_witness(const HankelView& h);

// Space-complexity lower-bound certificate: any streaming algorithm for
// T[a] that is correct through time t+I stores at least `rank` scalars at
// some time t' <= t, because rank(H^{(I,t)}) bounds the buffer from below.
struct RankCertificate {
  std::size_t t = 0;
  std::size_t I = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> witness;  // independent column indices
};

/// Certificate for the pair (t, I); requires order(a) >= t + I.
RankCertificate space_lower_bound(const Series& a, std::size_t t,
                                  std::size_t I);

// Finite-truncation rationality report: ranks[k] = rank(H^{(k,k)}) for
// k = 0..n. `degree` is set when the ranks stabilize at a value d with
// rank(H^{(d-1,d-1)}) = d, the Kronecker pattern; this is evidence at the
// available truncation, never a proof of (ir)rationality.
struct DegreeReport {
  std::size_t truncation = 0;  // n, where order(a) = 2n
  std::vector<std::size_t> ranks;
  std::optional<std::size_t> degree;
  std::string message;
};

/// Requires order(a) = 2n for some n >= 1.
DegreeReport detect_degree(const Series& a);

}  // namespace gfs
