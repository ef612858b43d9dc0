#include "gfstream/streamkit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gfs {

Rat Streamer::step(const Rat& z) {
  Rat out = do_step(z);
  ++time_;
  return out;
}

namespace {

class DenseStreamer final : public Streamer {
 public:
  explicit DenseStreamer(Series a) : a_(std::move(a)) {}

  std::size_t buffer_size() const override { return inputs_.size(); }

  std::unique_ptr<Streamer> clone() const override {
    return std::make_unique<DenseStreamer>(*this);
  }

 protected:
  Rat do_step(const Rat& z) override {
    if (inputs_.size() > a_.order())
      throw std::domain_error("dense streamer ran past the series order");
    inputs_.push_back(z);
    std::size_t t = inputs_.size() - 1;
    Rat out(0);
    for (std::size_t j = 0; j <= t; ++j) out += a_.coeff(t - j) * inputs_[j];
    return out;
  }

 private:
  Series a_;
  std::vector<Rat> inputs_;
};

// Buffer min{t+1, d} realization of P/Q with d = degree >= 1. While t < d
// the state is the raw prefix and the readout is a dense dot product with
// the first d expanded coefficients. From t = d on, the state is
// (y_t, r_1, ..., r_{d-1}): the transposed direct-form registers of P/Q,
// except that the last register always equals -q_d * y_t (because
// deg P <= d-1), so the output value itself takes that slot and the state
// stays d scalars with the readout a coordinate projection. The switchover
// replays the stored prefix through the registers, which keeps every update
// linear in (state, z_t).
class RationalStreamer final : public Streamer {
 public:
  explicit RationalStreamer(const RationalGF& g)
      : d_(std::max<std::size_t>(g.degree(), 1)),
        p_(d_, Rat(0)),
        q_(d_ + 1, Rat(0)),
        head_(expand(g, d_ - 1).coeffs()),
        registers_(d_ - 1, Rat(0)),
        next_registers_(d_ - 1, Rat(0)) {
    for (std::size_t k = 0; k < d_; ++k) p_[k] = g.numerator().coeff(k);
    for (std::size_t k = 0; k <= d_; ++k) q_[k] = g.denominator().coeff(k);
  }

  std::size_t buffer_size() const override {
    return steady_ ? d_ : prefix_.size();
  }

  std::unique_ptr<Streamer> clone() const override {
    return std::make_unique<RationalStreamer>(*this);
  }

 protected:
  Rat do_step(const Rat& z) override {
    if (!steady_) {
      if (prefix_.size() < d_) {
        prefix_.push_back(z);
        std::size_t t = prefix_.size() - 1;
        Rat out(0);
        for (std::size_t j = 0; j <= t; ++j) out += head_[t - j] * prefix_[j];
        return out;
      }
      // t = d: seed the registers by replaying the prefix, then continue.
      steady_ = true;
      for (const Rat& zj : prefix_) register_step(zj);
      prefix_.clear();
      prefix_.shrink_to_fit();
    }
    return register_step(z);
  }

 private:
  Rat register_step(const Rat& z) {
    Rat y = p_[0] * z + prev_register(1);
    for (std::size_t i = 1; i < d_; ++i)
      next_registers_[i - 1] = p_[i] * z - q_[i] * y + prev_register(i + 1);
    registers_.swap(next_registers_);
    y_ = y;
    return y_;
  }

  // r_1..r_{d-1} are stored; the would-be r_d always equals -q_d * y.
  Rat prev_register(std::size_t i) const {
    return i < d_ ? registers_[i - 1] : Rat(-q_[d_] * y_);
  }

  std::size_t d_;
  std::vector<Rat> p_;     // p_0..p_{d-1}
  std::vector<Rat> q_;     // q_0..q_d with q_0 = 1
  std::vector<Rat> head_;  // a_0..a_{d-1}, the phase-one readout weights
  std::vector<Rat> prefix_;
  std::vector<Rat> registers_;
  std::vector<Rat> next_registers_;  // scratch, same shape
  Rat y_ = 0;
  bool steady_ = false;
};

class SeqStreamer final : public Streamer {
 public:
  SeqStreamer(std::unique_ptr<Streamer> left, std::unique_ptr<Streamer> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  std::size_t buffer_size() const override {
    return left_->buffer_size() + right_->buffer_size();
  }

  std::unique_ptr<Streamer> clone() const override {
    return std::make_unique<SeqStreamer>(left_->clone(), right_->clone());
  }

 protected:
  Rat do_step(const Rat& z) override {
    return left_->step(right_->step(z));
  }

 private:
  std::unique_ptr<Streamer> left_, right_;
};

class ParStreamer final : public Streamer {
 public:
  ParStreamer(std::unique_ptr<Streamer> a, std::unique_ptr<Streamer> b)
      : a_(std::move(a)), b_(std::move(b)) {}

  std::size_t buffer_size() const override {
    return a_->buffer_size() + b_->buffer_size();
  }

  std::unique_ptr<Streamer> clone() const override {
    return std::make_unique<ParStreamer>(a_->clone(), b_->clone());
  }

 protected:
  Rat do_step(const Rat& z) override { return a_->step(z) + b_->step(z); }

 private:
  std::unique_ptr<Streamer> a_, b_;
};

}  // namespace

std::unique_ptr<Streamer> dense_streamer(const Series& a) {
  return std::make_unique<DenseStreamer>(a);
}

std::unique_ptr<Streamer> rational_streamer(const RationalGF& g) {
  return std::make_unique<RationalStreamer>(g);
}

std::unique_ptr<Streamer> compose_seq(const Streamer& left,
                                      const Streamer& right) {
  return std::make_unique<SeqStreamer>(left.clone(), right.clone());
}

std::unique_ptr<Streamer> compose_par(const Streamer& a, const Streamer& b) {
  return std::make_unique<ParStreamer>(a.clone(), b.clone());
}

StreamRun run(Streamer& s, const std::vector<Rat>& z) {
  StreamRun out;
  out.inputs = z;
  out.outputs.reserve(z.size());
  for (const Rat& zt : z) {
    out.outputs.push_back(s.step(zt));
    out.max_buffer = std::max(out.max_buffer, s.buffer_size());
  }
  return out;
}

}  // namespace gfs
