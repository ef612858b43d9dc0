#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gfstream/series.hpp"

namespace gfs {

// A multiplicative relation f*g = alpha*g + beta*x*g + gamma between two
// series, with the hypotheses f_0 != alpha and g_0 != 0. The identity is
// checked, never assumed; such a relation transfers Hankel rank from g to f
// up to a co-rank loss of three (two when beta = 0).
struct CompRelation {
  Series f;
  Series g;
  Rat alpha, beta, gamma;
};

struct ReportLine {
  std::size_t d = 0;
  std::string expected;
  std::string got;
  bool ok = true;
  std::string detail;  // extra computed values, for diagnosis
};

struct Report {
  std::string suite;
  std::vector<ReportLine> lines;
  bool ok() const;
};

/// Verifies the series identity to the full shared order (required to be at
/// least 2*d_max), then for each d <= d_max checks
///   rank(H[f]^{(d,d)}) >= rank(H[g]^{(d,d)}) - 3
/// (minus two when beta = 0). Throws std::domain_error on a hypothesis
/// violation or a non-zero identity residual.
Report check_comp_relation(const CompRelation& rel, std::size_t d_max);

/// det(H_C^{(d,d)}) = 1 for all d <= d_max.
Report verify_catalan_dets(std::size_t d_max);

/// det(H[1/sqrt(1-4x)]^{(d,d)}) = 2^d and full rank of H[1/sqrt(1-x)]^{(d,d)}
/// for all d <= d_max.
Report verify_sqrt_dets(std::size_t d_max);

/// Builds G = 8/(b-c)^2 * (1 - (b+c)/2 x - sqrt((1-bx)(1-cx)))/x^2 through
/// series operations and asserts det(H[G]^{(d,d)}) = ((b-c)^2/16)^{d(d+1)/2}
/// for d <= d_max. Requires b != c, both non-zero. The x^2-division
/// precondition and W(0) = 0 for W = 1 - 1/G are checked along the way.
Report verify_junod(const Rat& b, const Rat& c, std::size_t d_max);

/// rank(H[sqrt(G_{lambda,mu})]^{(d,d)}) >= (d+1) - 5 for d <= d_max, with
/// the observed co-rank reported per line. Requires 0 <= mu < lambda <= 1.
Report verify_corank(const Rat& lambda, const Rat& mu, std::size_t d_max);

}  // namespace gfs
