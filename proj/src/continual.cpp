#include "gfstream/continual.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfs {

NoiseSource NoiseSource::seeded(std::uint64_t seed) {
  NoiseSource s;
  s.use_rng_ = true;
  s.rng_.seed(seed);
  return s;
}

NoiseSource NoiseSource::recorded(std::vector<Rat> values) {
  NoiseSource s;
  s.values_ = std::move(values);
  return s;
}

Rat NoiseSource::next() {
  if (use_rng_) {
    // k/8 with k uniform in [-8, 8]; raw modulo keeps the stream identical
    // across standard library implementations.
    long k = static_cast<long>(rng_() % 17) - 8;
    return make_rat(k, 8);
  }
  if (pos_ >= values_.size())
    throw std::domain_error("recorded noise source exhausted after " +
                            std::to_string(values_.size()) + " samples");
  return values_[pos_++];
}

namespace {

RationalGF prefix_sum_gf() {
  return RationalGF(Poly({Rat(1)}), Poly({Rat(1), Rat(-1)}));  // 1/(1-x)
}

}  // namespace

Mechanism::Mechanism(std::unique_ptr<Streamer> noise_shaper, NoiseSource noise)
    : counter_(rational_streamer(prefix_sum_gf())),
      shaper_(std::move(noise_shaper)),
      noise_(std::move(noise)) {}

Rat Mechanism::step(const Rat& z) {
  Rat y = noise_.next();
  noise_used_.push_back(y);
  return counter_->step(z) + shaper_->step(y);
}

std::size_t Mechanism::buffer_size() const {
  return counter_->buffer_size() + shaper_->buffer_size();
}

MechanismReport mechanism_run(std::size_t length, std::size_t approx_degree,
                              std::uint64_t seed, const std::vector<Rat>& z) {
  if (approx_degree < 1)
    throw std::domain_error("mechanism needs approx_degree >= 1");
  if (z.size() < length)
    throw std::domain_error("mechanism input has " + std::to_string(z.size()) +
                            " entries, need " + std::to_string(length));

  Series gh = g_half(std::max(length, 2 * approx_degree));
  RationalGF shaper_gf = pade(gh, approx_degree);

  Mechanism m(rational_streamer(shaper_gf), NoiseSource::seeded(seed));
  MechanismReport report;
  report.shaper_gf = shaper_gf;
  report.outputs.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    report.outputs.push_back(m.step(z[t]));
    report.max_buffer = std::max(report.max_buffer, m.buffer_size());
  }
  report.noise = m.noise_used();
  report.coeff_error = approx_error(gh, shaper_gf, length);
  return report;
}

}  // namespace gfs
