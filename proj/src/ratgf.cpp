#include "gfstream/ratgf.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfs {

RationalGF::RationalGF() : p_(), q_({Rat(1)}) {}

RationalGF::RationalGF(const Poly& numerator, const Poly& denominator) {
  if (denominator.is_zero() || denominator.coeff(0) == 0)
    throw std::domain_error(
        "rational generating function needs an invertible denominator");
  if (numerator.is_zero()) {
    p_ = Poly();
    q_ = Poly({Rat(1)});
    return;
  }
  Poly g = gcd(numerator, denominator);
  Poly p = divmod(numerator, g).first;
  Poly q = divmod(denominator, g).first;
  Rat q0 = q.coeff(0);  // non-zero: the gcd divides out no invertible factor
  p_ = (Rat(1) / q0) * p;
  q_ = (Rat(1) / q0) * q;
  if (q_.degree() >= 1 && p_.degree() >= q_.degree())
    throw std::domain_error(
        "numerator degree must stay below denominator degree");
}

std::size_t RationalGF::degree() const {
  if (p_.is_zero()) return 0;
  return static_cast<std::size_t>(
      std::max(q_.degree(), p_.degree() + 1));
}

Series expand(const RationalGF& g, std::size_t order) {
  const Poly& p = g.numerator();
  const Poly& q = g.denominator();
  std::vector<Rat> a(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rat acc = p.coeff(k);
    std::size_t jmax = std::min<std::size_t>(k, q.coeffs().empty()
                                                    ? 0
                                                    : q.coeffs().size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= q.coeff(j) * a[k - j];
    a[k] = acc;
  }
  return Series(std::move(a));
}

namespace {

// Solves the d x d system sum_{j=1..d} q_j f_{k-j} = -f_k for k = d..2d-1
// by exact Gaussian elimination. Returns false when singular.
bool solve_denominator(const Series& f, std::size_t d, std::vector<Rat>& q) {
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
  for (std::size_t r = 0; r < d; ++r) {
    std::size_t k = d + r;
    for (std::size_t j = 1; j <= d; ++j) m[r][j - 1] = f.coeff(k - j);
    m[r][d] = -f.coeff(k);
  }
  for (std::size_t col = 0, row = 0; col < d; ++col, ++row) {
    std::size_t piv = row;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return false;
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= d; ++c) m[r][c] -= factor * m[row][c];
    }
  }
  q.assign(d + 1, Rat(0));
  q[0] = 1;
  for (std::size_t r = 0; r < d; ++r) q[r + 1] = m[r][d] / m[r][r];
  return true;
}

}  // namespace

RationalGF pade(const Series& f, std::size_t d) {
  if (d == 0 || f.is_zero()) return RationalGF();
  if (f.order() < 2 * d - 1)
    throw std::domain_error("pade of degree " + std::to_string(d) +
                            " needs the series to order " +
                            std::to_string(2 * d - 1));
  for (std::size_t dd = d; dd >= 1; --dd) {
    std::vector<Rat> q;
    if (!solve_denominator(f, dd, q)) continue;
    // p_k = sum_j q_j f_{k-j} for k < dd; beyond that the system zeroed it.
    std::vector<Rat> p(dd, Rat(0));
    for (std::size_t k = 0; k < dd; ++k)
      for (std::size_t j = 0; j <= k; ++j) p[k] += q[j] * f.coeff(k - j);
    try {
      return RationalGF(Poly(std::move(p)), Poly(std::move(q)));
    } catch (const std::domain_error&) {
      // q_dd solved to zero and left deg P >= deg Q, which the canonical
      // proper form cannot hold; step down like the singular case.
      continue;
    }
  }
  throw std::domain_error("pade system is singular at every degree; the "
                          "series has a zero constant term");
}

Rat approx_error(const Series& f, const RationalGF& g, std::size_t n) {
  if (f.order() < n)
    throw std::domain_error("approx_error needs the series to order " +
                            std::to_string(n));
  Series e = expand(g, n);
  Rat worst(0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat diff = f.coeff(k) - e.coeff(k);
    Rat mag = abs(diff);
    if (mag > worst) worst = mag;
  }
  return worst;
}

}  // namespace gfs
