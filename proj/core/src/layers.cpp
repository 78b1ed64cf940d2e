#include "hsnet/layers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsnet/activation.hpp"
#include "hsnet/errors.hpp"
#include "hsnet/kernels.hpp"

namespace hsnet {
namespace {

constexpr std::size_t kKernel = 3;
constexpr std::size_t kWindow = 2;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string activation_suffix(const std::optional<ActivationKind>& act) {
  return act ? std::string(", ") + std::string(activation_name(*act)) : std::string();
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (double v : t.values()) m = std::max(m, std::abs(v));
  return m;
}

void check_batch_input(const Tensor& x, const Shape& per_sample, const char* layer) {
  const Shape& s = x.shape();
  if (s.size() != per_sample.size() + 1 || !std::equal(per_sample.begin(), per_sample.end(), s.begin() + 1)) {
    throw ShapeError(std::string(layer) + ": expected [batch]+" + shape_to_string(per_sample) +
                     ", got " + shape_to_string(s));
  }
}

}  // namespace

std::string describe(const LayerSpec& spec) {
  return std::visit(
      Overloaded{
          [](const DenseSpec& d) {
            std::string s = "Dense(" + std::to_string(d.units) + activation_suffix(d.activation);
            if (d.softmax_output) s += ", softmax";
            return s + ")";
          },
          [](const Conv2DSpec& c) {
            return "Conv2D(" + std::to_string(c.filters) + ", " + std::to_string(c.kernel) + "x" +
                   std::to_string(c.kernel) + activation_suffix(c.activation) + ")";
          },
          [](const MaxPool2DSpec& p) {
            return "MaxPool2D(" + std::to_string(p.window) + "x" + std::to_string(p.window) + ")";
          },
          [](const FlattenSpec&) { return std::string("Flatten"); },
          [](const DropoutSpec& d) {
            std::ostringstream os;
            os << "Dropout(" << d.rate << ")";
            return os.str();
          },
      },
      spec);
}

Parameter::Parameter(Tensor initial)
    : value(std::move(initial)),
      grad(value.shape()),
      first_moment(value.shape()),
      second_moment(value.shape()) {}

double glorot_limit(std::size_t fan_in, std::size_t fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

// ---------------------------------------------------------------- Dense

DenseLayer::DenseLayer(DenseSpec spec, std::size_t fan_in, Rng& init_rng)
    : spec_(spec), fan_in_(fan_in) {
  if (spec_.units == 0) throw ConfigError("Dense units must be positive");
  if (fan_in_ == 0) throw ConfigError("Dense fan-in must be positive");
  const double limit = glorot_limit(fan_in_, spec_.units);
  params_.emplace_back(seeded_uniform(init_rng, {fan_in_, spec_.units}, -limit, limit));
  params_.emplace_back(Tensor({spec_.units}, 0.0));
}

Tensor DenseLayer::forward(const Tensor& x, Mode, Rng&) {
  check_batch_input(x, {fan_in_}, "Dense");
  const std::size_t batch = x.dim(0);
  input_ = x;
  Tensor pre({batch, spec_.units});
  kernels::gemm_nn(x.values(), weights().values(), pre.values(), batch, fan_in_, spec_.units,
                   false);
  const Tensor& b = bias();
  for (std::size_t r = 0; r < batch; ++r) {
    double* row = pre.data() + r * spec_.units;
    for (std::size_t j = 0; j < spec_.units; ++j) row[j] += b[j];
  }
  if (!spec_.activation) {
    max_abs_pre_ = 0.0;
    pre_ = Tensor();
    return pre;
  }
  max_abs_pre_ = max_abs(pre);
  Tensor out = act_map(*spec_.activation, pre);
  pre_ = std::move(pre);
  return out;
}

Tensor DenseLayer::backward(const Tensor& grad_out, bool want_input_grad) {
  const std::size_t batch = input_.dim(0);
  if (grad_out.shape() != Shape{batch, spec_.units}) {
    throw ShapeError("Dense backward: gradient shape " + shape_to_string(grad_out.shape()));
  }
  const Tensor delta = spec_.activation ? act_backward(*spec_.activation, pre_, grad_out) : grad_out;

  kernels::gemm_tn(input_.values(), delta.values(), params_[0].grad.values(), batch, fan_in_,
                   spec_.units, false);
  Tensor& gb = params_[1].grad;
  gb.fill(0.0);
  for (std::size_t r = 0; r < batch; ++r) {
    const double* row = delta.data() + r * spec_.units;
    for (std::size_t j = 0; j < spec_.units; ++j) gb[j] += row[j];
  }

  if (!want_input_grad) return {};
  Tensor dx({batch, fan_in_});
  kernels::gemm_nt(delta.values(), weights().values(), dx.values(), batch, spec_.units, fan_in_,
                   false);
  return dx;
}

// ---------------------------------------------------------------- Conv2D

Conv2DLayer::Conv2DLayer(Conv2DSpec spec, const Shape& input_shape, Rng& init_rng) : spec_(spec) {
  if (spec_.kernel != kKernel) {
    throw ConfigError("Conv2D kernel must be 3x3, got " + std::to_string(spec_.kernel));
  }
  if (spec_.filters == 0) throw ConfigError("Conv2D filters must be positive");
  if (input_shape.size() != 3) {
    throw ConfigError("Conv2D expects [H, W, C] input, got " + shape_to_string(input_shape));
  }
  height_ = input_shape[0];
  width_ = input_shape[1];
  channels_ = input_shape[2];
  if (height_ < kKernel || width_ < kKernel) {
    throw ShapeError("Conv2D input " + shape_to_string(input_shape) + " is smaller than 3x3");
  }
  const std::size_t fan_in = kKernel * kKernel * channels_;
  const std::size_t fan_out = kKernel * kKernel * spec_.filters;
  const double limit = glorot_limit(fan_in, fan_out);
  params_.emplace_back(
      seeded_uniform(init_rng, {kKernel, kKernel, channels_, spec_.filters}, -limit, limit));
  params_.emplace_back(Tensor({spec_.filters}, 0.0));
}

Shape Conv2DLayer::output_shape() const {
  return {height_ - 2, width_ - 2, spec_.filters};
}

Tensor Conv2DLayer::forward(const Tensor& x, Mode, Rng&) {
  check_batch_input(x, {height_, width_, channels_}, "Conv2D");
  batch_ = x.dim(0);
  const std::size_t out_h = height_ - 2;
  const std::size_t out_w = width_ - 2;
  const std::size_t patch = kKernel * kKernel * channels_;
  const std::size_t rows = batch_ * out_h * out_w;

  columns_.resize(rows * patch);
  const double* src = x.data();
  for (std::size_t b = 0; b < batch_; ++b) {
    for (std::size_t oy = 0; oy < out_h; ++oy) {
      for (std::size_t ox = 0; ox < out_w; ++ox) {
        double* col = columns_.data() + ((b * out_h + oy) * out_w + ox) * patch;
        for (std::size_t ky = 0; ky < kKernel; ++ky) {
          const double* in_row = src + ((b * height_ + oy + ky) * width_ + ox) * channels_;
          std::copy(in_row, in_row + kKernel * channels_, col + ky * kKernel * channels_);
        }
      }
    }
  }

  Tensor pre({batch_, out_h, out_w, spec_.filters});
  kernels::gemm_nn(columns_, weights().values(), pre.values(), rows, patch, spec_.filters, false);
  const Tensor& bias_t = bias();
  for (std::size_t r = 0; r < rows; ++r) {
    double* row = pre.data() + r * spec_.filters;
    for (std::size_t f = 0; f < spec_.filters; ++f) row[f] += bias_t[f];
  }
  if (!spec_.activation) {
    max_abs_pre_ = 0.0;
    pre_ = Tensor();
    return pre;
  }
  max_abs_pre_ = max_abs(pre);
  Tensor out = act_map(*spec_.activation, pre);
  pre_ = std::move(pre);
  return out;
}

Tensor Conv2DLayer::backward(const Tensor& grad_out, bool want_input_grad) {
  const std::size_t out_h = height_ - 2;
  const std::size_t out_w = width_ - 2;
  const std::size_t patch = kKernel * kKernel * channels_;
  const std::size_t rows = batch_ * out_h * out_w;
  if (grad_out.shape() != Shape{batch_, out_h, out_w, spec_.filters}) {
    throw ShapeError("Conv2D backward: gradient shape " + shape_to_string(grad_out.shape()));
  }
  const Tensor delta = spec_.activation ? act_backward(*spec_.activation, pre_, grad_out) : grad_out;

  kernels::gemm_tn(columns_, delta.values(), params_[0].grad.values(), rows, patch, spec_.filters,
                   false);
  Tensor& gb = params_[1].grad;
  gb.fill(0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = delta.data() + r * spec_.filters;
    for (std::size_t f = 0; f < spec_.filters; ++f) gb[f] += row[f];
  }

  if (!want_input_grad) return {};
  std::vector<double> dcols(rows * patch);
  kernels::gemm_nt(delta.values(), weights().values(), dcols, rows, spec_.filters, patch, false);
  Tensor dx({batch_, height_, width_, channels_}, 0.0);
  double* dst = dx.data();
  for (std::size_t b = 0; b < batch_; ++b) {
    for (std::size_t oy = 0; oy < out_h; ++oy) {
      for (std::size_t ox = 0; ox < out_w; ++ox) {
        const double* col = dcols.data() + ((b * out_h + oy) * out_w + ox) * patch;
        for (std::size_t ky = 0; ky < kKernel; ++ky) {
          double* in_row = dst + ((b * height_ + oy + ky) * width_ + ox) * channels_;
          const double* c = col + ky * kKernel * channels_;
          for (std::size_t i = 0; i < kKernel * channels_; ++i) in_row[i] += c[i];
        }
      }
    }
  }
  return dx;
}

// ---------------------------------------------------------------- MaxPool2D

PoolResult maxpool2d_forward(const Tensor& x) {
  if (x.rank() != 4) throw ShapeError("maxpool expects [batch, H, W, C]");
  const std::size_t batch = x.dim(0), h = x.dim(1), w = x.dim(2), c = x.dim(3);
  if (h < kWindow || w < kWindow) {
    throw ShapeError("maxpool input " + shape_to_string(x.shape()) + " is smaller than 2x2");
  }
  const std::size_t oh = h / kWindow, ow = w / kWindow;
  PoolResult result{Tensor({batch, oh, ow, c}), std::vector<std::size_t>(batch * oh * ow * c)};
  std::size_t o = 0;
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t oy = 0; oy < oh; ++oy) {
      for (std::size_t ox = 0; ox < ow; ++ox) {
        for (std::size_t ch = 0; ch < c; ++ch, ++o) {
          std::size_t best = ((b * h + oy * kWindow) * w + ox * kWindow) * c + ch;
          for (std::size_t dy = 0; dy < kWindow; ++dy) {
            for (std::size_t dx = 0; dx < kWindow; ++dx) {
              const std::size_t idx = ((b * h + oy * kWindow + dy) * w + ox * kWindow + dx) * c + ch;
              if (x[idx] > x[best]) best = idx;
            }
          }
          result.output[o] = x[best];
          result.argmax[o] = best;
        }
      }
    }
  }
  return result;
}

MaxPool2DLayer::MaxPool2DLayer(const Shape& input_shape) : input_shape_(input_shape) {
  if (input_shape_.size() != 3) {
    throw ConfigError("MaxPool2D expects [H, W, C] input, got " + shape_to_string(input_shape_));
  }
  if (input_shape_[0] < kWindow || input_shape_[1] < kWindow) {
    throw ShapeError("MaxPool2D input " + shape_to_string(input_shape_) + " is smaller than 2x2");
  }
}

Shape MaxPool2DLayer::output_shape() const {
  return {input_shape_[0] / kWindow, input_shape_[1] / kWindow, input_shape_[2]};
}

Tensor MaxPool2DLayer::forward(const Tensor& x, Mode, Rng&) {
  check_batch_input(x, input_shape_, "MaxPool2D");
  batch_input_shape_ = x.shape();
  PoolResult r = maxpool2d_forward(x);
  argmax_ = std::move(r.argmax);
  return std::move(r.output);
}

Tensor MaxPool2DLayer::backward(const Tensor& grad_out, bool want_input_grad) {
  if (!want_input_grad) return {};
  if (grad_out.size() != argmax_.size()) throw ShapeError("MaxPool2D backward: gradient size");
  Tensor dx(batch_input_shape_, 0.0);
  for (std::size_t i = 0; i < argmax_.size(); ++i) dx[argmax_[i]] += grad_out[i];
  return dx;
}

// ---------------------------------------------------------------- Flatten

Tensor FlattenLayer::forward(const Tensor& x, Mode, Rng&) {
  check_batch_input(x, input_shape_, "Flatten");
  batch_input_shape_ = x.shape();
  return x.reshaped({x.dim(0), shape_size(input_shape_)});
}

Tensor FlattenLayer::backward(const Tensor& grad_out, bool want_input_grad) {
  if (!want_input_grad) return {};
  return grad_out.reshaped(batch_input_shape_);
}

// ---------------------------------------------------------------- Dropout

DropoutResult dropout_forward(const Tensor& x, double rate, Mode mode, Rng& rng) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ConfigError("dropout rate must be in [0, 1), got " + std::to_string(rate));
  }
  if (mode == Mode::Infer || rate == 0.0) return {x, {}};
  const double keep_scale = 1.0 / (1.0 - rate);
  DropoutResult r{x, std::vector<double>(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.scale[i] = rng.uniform01() < rate ? 0.0 : keep_scale;
    r.output[i] = x[i] * r.scale[i];
  }
  return r;
}

DropoutLayer::DropoutLayer(double rate, const Shape& input_shape)
    : rate_(rate), input_shape_(input_shape) {
  if (!(rate_ >= 0.0 && rate_ < 1.0)) {
    throw ConfigError("dropout rate must be in [0, 1), got " + std::to_string(rate_));
  }
}

Tensor DropoutLayer::forward(const Tensor& x, Mode mode, Rng& rng) {
  check_batch_input(x, input_shape_, "Dropout");
  DropoutResult r = dropout_forward(x, rate_, mode, rng);
  scale_ = std::move(r.scale);
  return std::move(r.output);
}

Tensor DropoutLayer::backward(const Tensor& grad_out, bool want_input_grad) {
  if (!want_input_grad) return {};
  if (scale_.empty()) return grad_out;
  if (grad_out.size() != scale_.size()) throw ShapeError("Dropout backward: gradient size");
  Tensor dx = grad_out;
  for (std::size_t i = 0; i < dx.size(); ++i) dx[i] *= scale_[i];
  return dx;
}

}  // namespace hsnet
