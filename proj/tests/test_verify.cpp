#include "gfstream/verify.hpp"

#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace gfs;
using namespace gfs::test;

namespace {

// The Corollary-style relation: f = sqrt((1-lx)(1-mx)) against
// G = (1 - (l+m)/2 x - f)/x^2 with f*G = ((l+m)/2 x - 1)G + (l-m)^2/4.
CompRelation weighted_sqrt_relation(const Rat& l, const Rat& m,
                                    std::size_t order) {
  std::size_t w = order + 2;
  std::vector<Rat> base(w + 1, Rat(0));
  base[0] = 1;
  base[1] = -(l + m);
  base[2] = l * m;
  Series f = sqrt(Series(std::move(base)));
  Series num = sub(sub(Series::constant(1, w), scale((l + m) / 2, Series::x(w))), f);
  Series g = shift_div_x(num, 2);
  return CompRelation{f.truncated(order), g, Rat(-1), (l + m) / 2,
                      (l - m) * (l - m) / 4};
}

}  // namespace

TEST_CASE("comp relation checker") {
  SUBCASE("the weighted square-root instance at (1, 1/2)") {
    CompRelation rel = weighted_sqrt_relation(rat("1"), rat("1/2"), 24);
    // frozen heads of both series
    CHECK(rel.f.truncated(4) == series({"1", "-3/4", "-1/32", "-3/128", "-37/2048"}));
    CHECK(rel.g.truncated(4) == series({"1/32", "3/128", "37/2048", "117/8192", "757/65536"}));
    Report r = check_comp_relation(rel, 8);
    CHECK(r.ok());
    CHECK(r.lines.size() == 9);
    for (const auto& line : r.lines) CHECK(line.ok);
  }

  SUBCASE("trivial relations") {
    // f = g = 1 with alpha = 0, beta = 0, gamma = 1
    CompRelation one{Series::constant(1, 8), Series::constant(1, 8), Rat(0),
                     Rat(0), Rat(1)};
    Report r = check_comp_relation(one, 4);
    CHECK(r.ok());

    // (1-x) * G_1 = 1: f = 1-x, g = G_1, alpha = beta = 0, gamma = 1
    std::vector<Rat> fm(13, Rat(0));
    fm[0] = 1;
    fm[1] = -1;
    CompRelation counting{Series(fm), g_one(12), Rat(0), Rat(0), Rat(1)};
    Report r2 = check_comp_relation(counting, 6);
    CHECK(r2.ok());
  }

  SUBCASE("hypothesis and residual violations throw") {
    CompRelation bad_alpha{Series::constant(1, 8), Series::constant(1, 8),
                           Rat(1), Rat(0), Rat(1)};
    CHECK_THROWS_AS(check_comp_relation(bad_alpha, 2), std::domain_error);

    CompRelation bad_g0{Series::constant(1, 8), Series::x(8), Rat(0), Rat(0),
                        Rat(1)};
    CHECK_THROWS_AS(check_comp_relation(bad_g0, 2), std::domain_error);

    CompRelation bad_identity{g_half(8), g_one(8), Rat(0), Rat(0), Rat(1)};
    CHECK_THROWS_AS(check_comp_relation(bad_identity, 2), std::domain_error);

    CompRelation short_series{Series::constant(1, 3), Series::constant(1, 3),
                              Rat(0), Rat(0), Rat(1)};
    CHECK_THROWS_AS(check_comp_relation(short_series, 4), std::domain_error);
  }
}

TEST_CASE("catalan determinant suite") {
  Report r = verify_catalan_dets(12);
  CHECK(r.ok());
  CHECK(r.lines.size() == 13);
  for (const auto& line : r.lines) {
    CHECK(line.expected == "1");
    CHECK(line.got == "1");
  }
  CHECK(verify_catalan_dets(0).ok());
}

TEST_CASE("central binomial determinant suite") {
  Report r = verify_sqrt_dets(10);
  CHECK(r.ok());
  // 11 determinant lines (2^d) followed by 11 full-rank lines
  REQUIRE(r.lines.size() == 22);
  CHECK(r.lines[0].expected == "1");
  CHECK(r.lines[2].expected == "4");
  CHECK(r.lines[10].expected == "1024");
  CHECK(r.lines[21].got == "11");
}

TEST_CASE("junod determinant suite") {
  SUBCASE("(5,1): alpha = 1, every determinant is 1") {
    Report r = verify_junod(rat("5"), rat("1"), 8);
    CHECK(r.ok());
    for (const auto& line : r.lines) CHECK(line.got == "1");
  }

  SUBCASE("(3,2): alpha = 1/16") {
    Report r = verify_junod(rat("3"), rat("2"), 6);
    CHECK(r.ok());
    CHECK(r.lines[0].got == "1");         // d = 0: det [G_0] = 1
    CHECK(r.lines[1].got == "1/16");
    CHECK(r.lines[2].got == "1/4096");    // (1/16)^3
  }

  SUBCASE("negative parameter (2,-1)") {
    Report r = verify_junod(rat("2"), rat("-1"), 6);
    CHECK(r.ok());
    CHECK(r.lines[1].expected == "9/16");
  }

  CHECK_THROWS_AS(verify_junod(rat("2"), rat("2"), 4), std::domain_error);
  CHECK_THROWS_AS(verify_junod(rat("0"), rat("1"), 4), std::domain_error);
}

TEST_CASE("corank suite") {
  SUBCASE("(1,0) reduces to g_half: full rank, corank 0") {
    Report r = verify_corank(rat("1"), rat("0"), 10);
    CHECK(r.ok());
    for (const auto& line : r.lines) {
      CHECK(line.got == std::to_string(line.d + 1));
      CHECK(line.detail == "corank=0");
    }
  }

  SUBCASE("(1,1/2) and (3/4,1/4) stay within corank 5") {
    CHECK(verify_corank(rat("1"), rat("1/2"), 10).ok());
    CHECK(verify_corank(rat("3/4"), rat("1/4"), 10).ok());
  }

  CHECK_THROWS_AS(verify_corank(rat("1/2"), rat("1"), 4), std::domain_error);
}
