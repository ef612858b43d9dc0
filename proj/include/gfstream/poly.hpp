#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gfstream/rat.hpp"

namespace gfs {

// Dense univariate polynomial over Rat. Stored without trailing zeros; the
// zero polynomial is the empty coefficient list and has degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs);
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t k) const;  // 0 beyond the degree
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rat> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, const Poly& a);

/// Euclidean division; requires b != 0. Returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& p);  // "[c0, c1, ...]" in num/den form

}  // namespace gfs
