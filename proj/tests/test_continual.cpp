#include "gfstream/continual.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"

using namespace gfs;
using namespace gfs::test;

TEST_CASE("noise sources") {
  SUBCASE("seeded generation is deterministic and small") {
    NoiseSource a = NoiseSource::seeded(42);
    NoiseSource b = NoiseSource::seeded(42);
    for (int i = 0; i < 100; ++i) {
      Rat y = a.next();
      CHECK(y == b.next());
      CHECK(abs(y) <= 1);
      CHECK(y.get_den() <= 8);
    }
    NoiseSource c = NoiseSource::seeded(43);
    bool all_same = true;
    NoiseSource a2 = NoiseSource::seeded(42);
    for (int i = 0; i < 100; ++i) all_same = all_same && (a2.next() == c.next());
    CHECK_FALSE(all_same);
  }

  SUBCASE("recorded lists replay and exhaust") {
    NoiseSource r = NoiseSource::recorded({rat("1/2"), rat("-3")});
    CHECK(r.next() == rat("1/2"));
    CHECK(r.next() == rat("-3"));
    CHECK_THROWS_AS(r.next(), std::domain_error);
  }
}

TEST_CASE("mechanism with zero noise is exact continual counting") {
  RationalGF shaper = pade(g_half(8), 3);
  Mechanism m(rational_streamer(shaper),
              NoiseSource::recorded(std::vector<Rat>(5, Rat(0))));
  std::vector<Rat> z = {Rat(1), Rat(2), Rat(3), Rat(-1), Rat(7)};
  std::vector<Rat> expected = {Rat(1), Rat(3), Rat(6), Rat(5), Rat(12)};
  for (std::size_t t = 0; t < z.size(); ++t) CHECK(m.step(z[t]) == expected[t]);
}

TEST_CASE("mechanism equals the dense computation T1 z + T[expand(pade)] y") {
  std::mt19937_64 rng(301);
  for (std::size_t d : {1u, 2u, 4u}) {
    std::vector<Rat> z = rand_int_stream(rng, 30);
    std::vector<Rat> y;
    for (int i = 0; i < 30; ++i) y.push_back(rand_rat(rng));

    RationalGF shaper = pade(g_half(std::max<std::size_t>(30, 2 * d)), d);
    Mechanism m(rational_streamer(shaper), NoiseSource::recorded(y));

    std::vector<Rat> prefix = toeplitz_apply(g_one(30), z);
    std::vector<Rat> shaped = toeplitz_apply(expand(shaper, 30), y);
    for (std::size_t t = 0; t < z.size(); ++t)
      CHECK(m.step(z[t]) == prefix[t] + shaped[t]);
    CHECK(m.buffer_size() == 1 + d);
  }
}

TEST_CASE("mechanism output is bilinear") {
  std::mt19937_64 rng(307);
  RationalGF shaper = pade(g_half(12), 2);
  std::vector<Rat> z1 = rand_int_stream(rng, 10), z2 = rand_int_stream(rng, 10);
  std::vector<Rat> y(10);
  for (auto& v : y) v = rand_rat(rng);
  Rat c = rat("5/3");

  auto outputs = [&](const std::vector<Rat>& z, const std::vector<Rat>& noise) {
    Mechanism m(rational_streamer(shaper), NoiseSource::recorded(noise));
    std::vector<Rat> out;
    for (const Rat& zt : z) out.push_back(m.step(zt));
    return out;
  };

  SUBCASE("linear in z with y fixed") {
    std::vector<Rat> mix(10);
    for (std::size_t i = 0; i < 10; ++i) mix[i] = c * z1[i] + z2[i];
    std::vector<Rat> o1 = outputs(z1, y), o2 = outputs(z2, y),
                     om = outputs(mix, y), oy = outputs(std::vector<Rat>(10, Rat(0)), y);
    // A(c z1 + z2, y) = c A(z1, 0) + A(z2, y) because the noise path is shared
    for (std::size_t i = 0; i < 10; ++i)
      CHECK(om[i] == c * (o1[i] - oy[i]) + o2[i]);
  }

  SUBCASE("linear in y with z fixed") {
    std::vector<Rat> y2(10), mix(10);
    for (auto& v : y2) v = rand_rat(rng);
    for (std::size_t i = 0; i < 10; ++i) mix[i] = c * y[i] + y2[i];
    std::vector<Rat> oy = outputs(z1, y), oy2 = outputs(z1, y2),
                     om = outputs(z1, mix), oz = outputs(z1, std::vector<Rat>(10, Rat(0)));
    for (std::size_t i = 0; i < 10; ++i)
      CHECK(om[i] == c * (oy[i] - oz[i]) + oy2[i]);
  }
}

TEST_CASE("mechanism_run") {
  std::vector<Rat> ones(40, Rat(1));

  SUBCASE("buffer report is 1 + approx_degree for long runs") {
    for (std::size_t d : {1u, 3u, 5u}) {
      MechanismReport r = mechanism_run(40, d, 7, ones);
      CHECK(r.outputs.size() == 40);
      CHECK(r.max_buffer == 1 + d);
      CHECK(r.noise.size() == 40);
      CHECK(r.shaper_gf.degree() == d);
    }
  }

  SUBCASE("seed determinism") {
    MechanismReport a = mechanism_run(25, 2, 99, ones);
    MechanismReport b = mechanism_run(25, 2, 99, ones);
    CHECK(a.outputs == b.outputs);
    CHECK(a.noise == b.noise);
  }

  SUBCASE("coefficient error for degree 1 is 1/8 at length >= 2") {
    MechanismReport r = mechanism_run(2, 1, 5, std::vector<Rat>(2, Rat(0)));
    CHECK(r.coeff_error == rat("1/8"));
  }

  SUBCASE("outputs decompose into counting plus shaped noise") {
    MechanismReport r = mechanism_run(30, 3, 123, ones);
    std::vector<Rat> first30(ones.begin(), ones.begin() + 30);
    std::vector<Rat> prefix = toeplitz_apply(g_one(30), first30);
    std::vector<Rat> shaped = toeplitz_apply(expand(r.shaper_gf, 30), r.noise);
    for (std::size_t t = 0; t < 30; ++t)
      CHECK(r.outputs[t] == prefix[t] + shaped[t]);
  }

  CHECK_THROWS_AS(mechanism_run(10, 0, 1, ones), std::domain_error);
  CHECK_THROWS_AS(mechanism_run(50, 2, 1, ones), std::domain_error);
}
