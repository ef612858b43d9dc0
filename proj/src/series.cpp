#include "gfstream/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gfs {

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("series needs at least the constant term");
}

Series Series::zero(std::size_t order) {
  return Series(std::vector<Rat>(order + 1, Rat(0)));
}

Series Series::constant(const Rat& c, std::size_t order) {
  std::vector<Rat> v(order + 1, Rat(0));
  v[0] = c;
  return Series(std::move(v));
}

Series Series::x(std::size_t order) {
  std::vector<Rat> v(order + 1, Rat(0));
  if (order >= 1) v[1] = 1;
  return Series(std::move(v));
}

const Rat& Series::coeff(std::size_t k) const {
  if (k >= coeffs_.size())
    throw std::out_of_range("series coefficient index " + std::to_string(k) +
                            " beyond order " + std::to_string(order()));
  return coeffs_[k];
}

Series Series::truncated(std::size_t m) const {
  if (m > order())
    throw std::out_of_range("cannot truncate order " + std::to_string(order()) +
                            " series to order " + std::to_string(m));
  return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

Series add(const Series& f, const Series& g) {
  std::size_t n = std::min(f.order(), g.order());
  std::vector<Rat> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f.coeff(k) + g.coeff(k);
  return Series(std::move(out));
}

Series sub(const Series& f, const Series& g) {
  std::size_t n = std::min(f.order(), g.order());
  std::vector<Rat> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f.coeff(k) - g.coeff(k);
  return Series(std::move(out));
}

Series negate(const Series& f) {
  std::vector<Rat> out(f.order() + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = -f.coeff(k);
  return Series(std::move(out));
}

Series mul(const Series& f, const Series& g) {
  std::size_t n = std::min(f.order(), g.order());
  std::vector<Rat> out(n + 1, Rat(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      out[i + j] += f.coeff(i) * g.coeff(j);
  }
  return Series(std::move(out));
}

Series inv(const Series& f) {
  if (f.coeff(0) == 0)
    throw std::domain_error("series with zero constant term is not invertible");
  std::vector<Rat> g(f.order() + 1);
  g[0] = Rat(1) / f.coeff(0);
  for (std::size_t k = 1; k <= f.order(); ++k) {
    Rat s(0);
    for (std::size_t j = 1; j <= k; ++j) s += f.coeff(j) * g[k - j];
    g[k] = -s / f.coeff(0);
  }
  return Series(std::move(g));
}

Series sqrt(const Series& f) {
  const Rat& c = f.coeff(0);
  if (!(c > 0) || mpz_perfect_square_p(c.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(c.get_den().get_mpz_t()) == 0)
    throw std::domain_error(
        "series sqrt needs a positive rational square as constant term");
  Rat r0;
  mpz_sqrt(r0.get_num().get_mpz_t(), c.get_num().get_mpz_t());
  mpz_sqrt(r0.get_den().get_mpz_t(), c.get_den().get_mpz_t());

  // g_k from the squaring identity f_k = sum_{i} g_i g_{k-i}.
  std::vector<Rat> g(f.order() + 1);
  g[0] = r0;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    Rat s(0);
    for (std::size_t i = 1; i < k; ++i) s += g[i] * g[k - i];
    g[k] = (f.coeff(k) - s) / (2 * g[0]);
  }
  return Series(std::move(g));
}

Series shift_mul_x(const Series& f) {
  std::vector<Rat> out(f.order() + 1, Rat(0));
  for (std::size_t k = 1; k <= f.order(); ++k) out[k] = f.coeff(k - 1);
  return Series(std::move(out));
}

Series shift_div_x(const Series& f, std::size_t k) {
  if (k == 0) return f;
  if (k > f.order())
    throw std::domain_error("division by x^" + std::to_string(k) +
                            " exceeds series order");
  for (std::size_t i = 0; i < k; ++i)
    if (f.coeff(i) != 0)
      throw std::domain_error("division by x^" + std::to_string(k) +
                              " of a series with non-zero coefficient at x^" +
                              std::to_string(i));
  return Series(
      std::vector<Rat>(f.coeffs().begin() + k, f.coeffs().end()));
}

Series scale(const Rat& c, const Series& f) {
  std::vector<Rat> out(f.order() + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) out[k] = c * f.coeff(k);
  return Series(std::move(out));
}

Series div(const Series& f, const Series& g) {
  std::size_t v = 0;
  while (v <= g.order() && g.coeff(v) == 0) ++v;
  if (v > g.order())
    throw std::domain_error("division by a series that is zero to its order");
  if (v == 0) return mul(f, inv(g));
  return mul(shift_div_x(f, v), inv(shift_div_x(g, v)));
}

std::string render(const Series& f) {
  std::ostringstream out;
  for (std::size_t k = 0; k <= f.order(); ++k) {
    if (k > 0) out << " + ";
    out << to_string(f.coeff(k));
    if (k == 1) out << "*x";
    if (k > 1) out << "*x^" << k;
  }
  return out.str();
}

// --- catalog -------------------------------------------------------------

Series g_one(std::size_t order) {
  return Series(std::vector<Rat>(order + 1, Rat(1)));
}

Series g_exp(std::size_t order) {
  std::vector<Rat> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) v[k] = 2 * v[k - 1];
  return Series(std::move(v));
}

Series g_half(std::size_t order) {
  // a_k = 2^{-2k} C(2k, k) via a_k = a_{k-1} (2k-1)/(2k)
  std::vector<Rat> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k <= order; ++k)
    v[k] = v[k - 1] * make_rat(2 * static_cast<long>(k) - 1,
                               2 * static_cast<long>(k));
  return Series(std::move(v));
}

Series g_catalan(std::size_t order) {
  // C_{k+1} = C_k * 2(2k+1)/(k+2)
  std::vector<Rat> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k <= order; ++k)
    v[k] = v[k - 1] * make_rat(2 * (2 * static_cast<long>(k) - 1),
                               static_cast<long>(k) + 1);
  return Series(std::move(v));
}

Series central_binomial(std::size_t order) {
  // C(2k, k) via a_k = a_{k-1} (4k-2)/k
  std::vector<Rat> v(order + 1);
  v[0] = 1;
  for (std::size_t k = 1; k <= order; ++k)
    v[k] = v[k - 1] * make_rat(4 * static_cast<long>(k) - 2,
                               static_cast<long>(k));
  return Series(std::move(v));
}

namespace {

void require_lm_domain(const Rat& lambda, const Rat& mu) {
  if (!(0 <= mu && mu < lambda && lambda <= 1))
    throw std::domain_error("g_lm parameters need 0 <= mu < lambda <= 1, got "
                            "lambda=" + to_string(lambda) +
                            " mu=" + to_string(mu));
}

}  // namespace

Series g_lm(const Rat& lambda, const Rat& mu, std::size_t order) {
  require_lm_domain(lambda, mu);
  // a_k = (lambda+mu) a_{k-1} - lambda*mu a_{k-2}, the convolution of the
  // two geometric sequences.
  std::vector<Rat> v(order + 1);
  v[0] = 1;
  if (order >= 1) v[1] = lambda + mu;
  for (std::size_t k = 2; k <= order; ++k)
    v[k] = (lambda + mu) * v[k - 1] - lambda * mu * v[k - 2];
  return Series(std::move(v));
}

Series sqrt_g_lm(const Rat& lambda, const Rat& mu, std::size_t order) {
  return sqrt(g_lm(lambda, mu, order));
}

Series junod_g(const Rat& b, const Rat& c, std::size_t order) {
  if (b == c || b == 0 || c == 0)
    throw std::domain_error("junod_g needs distinct non-zero parameters");
  // 8/(b-c)^2 * (1 - (b+c)/2 x - sqrt((1-bx)(1-cx))) / x^2; the numerator's
  // first two coefficients vanish identically, which shift_div_x asserts.
  std::size_t w = order + 2;
  std::vector<Rat> base(w + 1, Rat(0));
  base[0] = 1;
  base[1] = -(b + c);
  base[2] = b * c;
  Series root = sqrt(Series(std::move(base)));
  Series num = sub(sub(Series::constant(1, w),
                       scale((b + c) / 2, Series::x(w))),
                   root);
  return scale(Rat(8) / ((b - c) * (b - c)), shift_div_x(num, 2));
}

namespace {

// Splits "name" or "name(arg1,arg2)" into the identifier and rational args.
std::pair<std::string, std::vector<Rat>> split_catalog_spec(
    const std::string& spec) {
  std::size_t open = spec.find('(');
  if (open == std::string::npos) return {spec, {}};
  if (spec.back() != ')')
    throw std::invalid_argument("malformed catalog entry: '" + spec + "'");
  std::string name = spec.substr(0, open);
  std::vector<Rat> args;
  std::string body = spec.substr(open + 1, spec.size() - open - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string item = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    args.push_back(rat_from_string(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {name, args};
}

void require_arity(const std::string& name, const std::vector<Rat>& args,
                   std::size_t n) {
  if (args.size() != n)
    throw std::invalid_argument("catalog entry '" + name + "' takes " +
                                std::to_string(n) + " parameter(s)");
}

}  // namespace

Series catalog(const std::string& spec, std::size_t order) {
  auto [name, args] = split_catalog_spec(spec);
  if (name == "g_one") {
    require_arity(name, args, 0);
    return g_one(order);
  }
  if (name == "g_exp") {
    require_arity(name, args, 0);
    return g_exp(order);
  }
  if (name == "g_half") {
    require_arity(name, args, 0);
    return g_half(order);
  }
  if (name == "g_catalan") {
    require_arity(name, args, 0);
    return g_catalan(order);
  }
  if (name == "central_binomial") {
    require_arity(name, args, 0);
    return central_binomial(order);
  }
  if (name == "g_lm") {
    require_arity(name, args, 2);
    return g_lm(args[0], args[1], order);
  }
  if (name == "sqrt_g_lm") {
    require_arity(name, args, 2);
    return sqrt_g_lm(args[0], args[1], order);
  }
  if (name == "junod_g") {
    require_arity(name, args, 2);
    return junod_g(args[0], args[1], order);
  }
  throw std::invalid_argument("unknown catalog entry: '" + name + "'");
}

}  // namespace gfs
