#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfstream/rat.hpp"

namespace gfs {

// Truncated formal power series with exact rational coefficients.
// A Series of order n knows the coefficients a_0..a_n and nothing beyond;
// arithmetic never extends the known range (two operands of orders n and m
// combine to order min(n, m)). Values are immutable after construction.
class Series {
 public:
  explicit Series(std::vector<Rat> coeffs);

  static Series zero(std::size_t order);
  static Series constant(const Rat& c, std::size_t order);
  static Series x(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& coeff(std::size_t k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Restriction to the first m+1 coefficients; requires m <= order().
  Series truncated(std::size_t m) const;

  bool is_zero() const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rat> coeffs_;  // coeffs_[k] = a_k, size = order + 1
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series negate(const Series& f);

/// Cauchy product truncated to min(order f, order g).
Series mul(const Series& f, const Series& g);

/// Multiplicative inverse; requires f_0 != 0 (throws std::domain_error).
Series inv(const Series& f);

/// Square root with positive constant term; requires f_0 to be the square
/// of a positive rational (throws std::domain_error otherwise). Computed by
/// the coefficient recurrence from the squaring identity.
Series sqrt(const Series& f);

/// Multiplication by x truncated to the same order: (0, f_0, ..., f_{n-1}).
/// One coefficient of information is lost, matching the min-order rule.
Series shift_mul_x(const Series& f);

/// Exact division by x^k: requires the first k coefficients to be zero
/// (throws std::domain_error). Order decreases by k.
Series shift_div_x(const Series& f, std::size_t k);

Series scale(const Rat& c, const Series& f);

/// f / g. When g has valuation v > 0 (v leading zero coefficients), the
/// division is legal exactly when f's first v coefficients are zero; both
/// sides shift down by v and the order decreases by v.
Series div(const Series& f, const Series& g);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator-(const Series& f) { return negate(f); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }
inline Series operator*(const Rat& c, const Series& f) { return scale(c, f); }

/// Renders as "c0 + c1*x + c2*x^2 + ..." with "num/den" coefficients; the
/// output re-parses to the same series at the same order.
std::string render(const Series& f);

// --- catalog -------------------------------------------------------------

Series g_one(std::size_t order);               // 1/(1-x): all ones
Series g_exp(std::size_t order);               // 1/(1-2x): 2^k
Series g_half(std::size_t order);              // 1/sqrt(1-x)
Series g_catalan(std::size_t order);           // (1-sqrt(1-4x))/(2x)
Series central_binomial(std::size_t order);    // 1/sqrt(1-4x)
Series g_lm(const Rat& lambda, const Rat& mu, std::size_t order);
Series sqrt_g_lm(const Rat& lambda, const Rat& mu, std::size_t order);
Series junod_g(const Rat& b, const Rat& c, std::size_t order);

/// Looks up a catalog entry by name, e.g. "g_half" or "g_lm(1,1/2)".
/// Throws std::invalid_argument for unknown names and std::domain_error for
/// parameter domain violations.
Series catalog(const std::string& spec, std::size_t order);

// --- expression parser ----------------------------------------------------

/// Syntax error with the offending position in the input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an expression over the grammar
///   Expr   := Term (('+'|'-') Term)*
///   Term   := Factor (('*'|'/') Factor)*
///   Factor := 'sqrt' '(' Expr ')' | '(' Expr ')' | Rational | 'x'
///           | Factor '^' UInt
///   Rational := Int ('/' UInt)?
/// and evaluates it to the requested order. Division by a series with zero
/// constant term is permitted exactly when the numerator's low-order
/// coefficients vanish accordingly (the working order is raised internally
/// so the result still reaches the requested order).
Series parse(std::string_view text, std::size_t order);

}  // namespace gfs
