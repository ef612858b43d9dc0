#pragma once

#include <cstddef>

#include "gfstream/poly.hpp"
#include "gfstream/series.hpp"

namespace gfs {

// Rational generating function P/Q in canonical form: gcd(P, Q) = 1,
// q_0 = 1, and deg(P) <= deg(Q) - 1 whenever deg(Q) >= 1 (the constant and
// polynomial cases carry Q = 1). degree() is the minimal d with
// deg(Q) <= d and deg(P) <= d - 1 over equivalent representations, i.e.
// max(deg Q, deg P + 1), with the zero function assigned degree 0.
class RationalGF {
 public:
  /// The zero function: P = 0, Q = 1.
  RationalGF();

  /// Normalizes and reduces. Throws std::domain_error when q_0 = 0 or when
  /// the reduced form still has deg(P) >= deg(Q) with non-constant Q.
  RationalGF(const Poly& numerator, const Poly& denominator);

  const Poly& numerator() const { return p_; }
  const Poly& denominator() const { return q_; }
  std::size_t degree() const;

  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  Poly p_, q_;
};

/// Taylor coefficients of P/Q to the requested order via the linear
/// recurrence a_k = p_k - sum_{j=1..deg Q} q_j a_{k-j}.
Series expand(const RationalGF& g, std::size_t order);

/// Coefficient-matching rational approximant of degree at most d: solves
/// Q * f = P (mod x^{2d}) exactly with q_0 = 1, deg Q <= d, deg P <= d-1.
/// Requires order(f) >= 2d - 1. When the linear system for Q is singular the
/// degree is stepped down and retried (the Pade-table stairstep), so the
/// result's degree() reports what was achieved.
RationalGF pade(const Series& f, std::size_t d);

/// max_{0<=k<=n} |f_k - expand(g)_k|, exact. Requires order(f) >= n.
Rat approx_error(const Series& f, const RationalGF& g, std::size_t n);

}  // namespace gfs
