#include "gfstream/rat.hpp"

#include <stdexcept>

namespace gfs {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  Rat r(raw);
  mpq_clear(raw);
  if (r.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text +
                                "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    return pow_rat(Rat(1) / base, -e);
  }
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e));
  return r;  // base canonical => powers are canonical
}

}  // namespace gfs
