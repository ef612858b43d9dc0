#include "gfstream/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "gfstream/hankel.hpp"

namespace gfs {

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const ReportLine& l) { return l.ok; });
}

namespace {

ReportLine line(std::size_t d, std::string expected, std::string got, bool ok,
                std::string detail = "") {
  return ReportLine{d, std::move(expected), std::move(got), ok,
                    std::move(detail)};
}

}  // namespace

Report check_comp_relation(const CompRelation& rel, std::size_t d_max) {
  if (rel.f.coeff(0) == rel.alpha)
    throw std::domain_error("relation hypothesis violated: f_0 = alpha");
  if (rel.g.coeff(0) == 0)
    throw std::domain_error("relation hypothesis violated: g_0 = 0");
  std::size_t identity_order = std::min(rel.f.order(), rel.g.order());
  if (identity_order < 2 * d_max)
    throw std::domain_error("relation check to d_max " + std::to_string(d_max) +
                            " needs both series to order " +
                            std::to_string(2 * d_max));

  // f*g - alpha*g - beta*x*g - gamma must vanish identically.
  Series residual =
      sub(sub(sub(mul(rel.f, rel.g), scale(rel.alpha, rel.g)),
              scale(rel.beta, shift_mul_x(rel.g))),
          Series::constant(rel.gamma, identity_order));
  for (std::size_t k = 0; k <= residual.order(); ++k)
    if (residual.coeff(k) != 0)
      throw std::domain_error("relation identity fails at x^" +
                              std::to_string(k) + " with residual " +
                              to_string(residual.coeff(k)));

  std::size_t slack = rel.beta == 0 ? 2 : 3;
  Report report{"comp", {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    std::size_t rf = rank(HankelView(rel.f, d, d));
    std::size_t rg = rank(HankelView(rel.g, d, d));
    std::size_t bound = rg > slack ? rg - slack : 0;
    report.lines.push_back(line(d, std::to_string(bound), std::to_string(rf),
                                rf >= bound,
                                "rank_g=" + std::to_string(rg)));
  }
  return report;
}

Report verify_catalan_dets(std::size_t d_max) {
  Series c = g_catalan(2 * d_max);
  Report report{"catalan", {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    Rat got = det(HankelView(c, d, d));
    report.lines.push_back(line(d, "1", to_string(got), got == 1));
  }
  return report;
}

Report verify_sqrt_dets(std::size_t d_max) {
  Series cb = central_binomial(2 * d_max);
  Series gh = g_half(2 * d_max);
  Report report{"sqrtdet", {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    Rat expected = pow_rat(Rat(2), static_cast<long>(d));
    Rat got = det(HankelView(cb, d, d));
    report.lines.push_back(
        line(d, to_string(expected), to_string(got), got == expected));
  }
  for (std::size_t d = 0; d <= d_max; ++d) {
    std::size_t r = rank(HankelView(gh, d, d));
    report.lines.push_back(line(d, std::to_string(d + 1), std::to_string(r),
                                r == d + 1, "full rank of H[1/sqrt(1-x)]"));
  }
  return report;
}

Report verify_junod(const Rat& b, const Rat& c, std::size_t d_max) {
  Series g = junod_g(b, c, 2 * d_max);  // validates b != c, both non-zero

  // W = 1 - 1/G has W(0) = 0; checked as a series identity.
  Series w = sub(Series::constant(1, g.order()), inv(g));
  if (w.coeff(0) != 0)
    throw std::domain_error("junod construction broken: W(0) != 0");

  Rat alpha = (b - c) * (b - c) / 16;
  Report report{"junod", {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    Rat expected = pow_rat(alpha, static_cast<long>(d * (d + 1) / 2));
    Rat got = det(HankelView(g, d, d));
    report.lines.push_back(
        line(d, to_string(expected), to_string(got), got == expected));
  }
  return report;
}

Report verify_corank(const Rat& lambda, const Rat& mu, std::size_t d_max) {
  Series s = sqrt_g_lm(lambda, mu, 2 * d_max);  // validates 0 <= mu < lambda <= 1
  Report report{"corank", {}};
  for (std::size_t d = 0; d <= d_max; ++d) {
    std::size_t r = rank(HankelView(s, d, d));
    std::size_t bound = d + 1 > 5 ? d + 1 - 5 : 0;
    report.lines.push_back(line(d, std::to_string(bound), std::to_string(r),
                                r >= bound,
                                "corank=" + std::to_string(d + 1 - r)));
  }
  return report;
}

}  // namespace gfs
