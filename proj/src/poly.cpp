#include "gfstream/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gfs {

namespace {

void trim(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
  trim(coeffs_);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Poly Poly::constant(const Rat& c) {
  return c == 0 ? Poly() : Poly({c});
}

Rat Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Rat> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Rat> out(a.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -a.coeff(k);
  return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(out));
}

Poly operator*(const Rat& c, const Poly& a) {
  std::vector<Rat> out(a.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = c * a.coeffs()[k];
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
  const Rat& lead = b.coeffs().back();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat c = rem[k + db] / lead;
    quot[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeff(j);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = divmod(r0, r1).second;
    r0 = r1;
    r1 = r2;
  }
  if (r0.is_zero()) return r0;
  return (Rat(1) / r0.coeffs().back()) * r0;  // monic
}

std::string to_string(const Poly& p) {
  std::ostringstream out;
  out << "[";
  if (p.is_zero()) {
    out << "0";
  } else {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (k > 0) out << ", ";
      out << to_string(p.coeffs()[k]);
    }
  }
  out << "]";
  return out.str();
}

}  // namespace gfs
