#include "gfstream/hankel.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gfs {

HankelView::HankelView(Series source, std::size_t I, std::size_t J)
    : source_(std::move(source)), I_(I), J_(J) {
  if (source_.order() < I_ + J_)
    throw std::domain_error(
        "Hankel view H^(" + std::to_string(I_) + "," + std::to_string(J_) +
        ") needs the series to order " + std::to_string(I_ + J_) +
        ", have " + std::to_string(source_.order()));
}

const Rat& HankelView::entry(std::size_t i, std::size_t j) const {
  return source_.coeff(i + j);
}

namespace {

// Integer copy of the view with column j scaled by colscale[j] (the lcm of
// the column's denominators), so det(rat) = det(int) / prod(colscale) and
// ranks coincide.
struct IntMatrix {
  std::vector<std::vector<Int>> m;
  std::vector<Int> colscale;
};

IntMatrix clear_denominators(const HankelView& h) {
  IntMatrix out;
  out.m.assign(h.rows(), std::vector<Int>(h.cols()));
  out.colscale.assign(h.cols(), Int(1));
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Int& l = out.colscale[j];
    for (std::size_t i = 0; i < h.rows(); ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              h.entry(i, j).get_den().get_mpz_t());
    for (std::size_t i = 0; i < h.rows(); ++i) {
      const Rat& e = h.entry(i, j);
      out.m[i][j] = e.get_num() * (l / e.get_den());
    }
  }
  return out;
}

// One fraction-free (Bareiss) elimination pass. Columns without a pivot are
// skipped; every interior division by the previous pivot is exact because
// the working entries are minors of the original integer matrix.
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;            // row-swap parity
  Int last_pivot = 1;      // final pivot = det for full square elimination
};

Elimination eliminate(std::vector<std::vector<Int>>& m) {
  Elimination out;
  if (m.empty()) return out;
  std::size_t rows = m.size(), cols = m[0].size();
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && m[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      out.sign = -out.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t c = j + 1; c < cols; ++c) {
        Int num = m[i][c] * m[r][j] - m[i][j] * m[r][c];
        mpz_divexact(m[i][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][j] = 0;
    }
    prev = m[r][j];
    out.pivot_cols.push_back(j);
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

}  // namespace

Rat det(const HankelView& h) {
  if (!h.square())
    throw std::domain_error("determinant of a non-square Hankel view");
  IntMatrix im = clear_denominators(h);
  Elimination e = eliminate(im.m);
  if (e.rank < h.rows()) return Rat(0);
  Int scale(1);
  for (const Int& l : im.colscale) scale *= l;
  Rat out(e.sign > 0 ? e.last_pivot : Int(-e.last_pivot), scale);
  out.canonicalize();
  return out;
}

RankWitness rank_with_witness(const HankelView& h) {
  IntMatrix im = clear_denominators(h);
  Elimination e = eliminate(im.m);
  return RankWitness{e.rank, std::move(e.pivot_cols)};
}

std::size_t rank(const HankelView& h) { return rank_with_witness(h).rank; }

RankCertificate space_lower_bound(const Series& a, std::size_t t,
                                  std::size_t I) {
  HankelView h(a, I, t);
  RankWitness w = rank_with_witness(h);
  return RankCertificate{t, I, w.rank, std::move(w.columns)};
}

DegreeReport detect_degree(const Series& a) {
  if (a.order() < 2 || a.order() % 2 != 0)
    throw std::domain_error(
        "degree detection needs a series of order 2n with n >= 1");
  std::size_t n = a.order() / 2;
  DegreeReport report;
  report.truncation = n;
  report.ranks.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    report.ranks.push_back(rank(HankelView(a, k, k)));

  std::size_t d = report.ranks[n];
  bool stabilized =
      d == 0 || (d <= n && report.ranks[d - 1] == d);
  std::ostringstream msg;
  if (stabilized) {
    report.degree = d;
    msg << "consistent with rational degree " << d << " at truncation " << n;
  } else {
    msg << "no rational degree <= " << n
        << " detected (rank still growing)";
  }
  report.message = msg.str();
  return report;
}

}  // namespace gfs
