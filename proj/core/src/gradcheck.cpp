#include "hsnet/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "hsnet/loss.hpp"
#include "hsnet/network.hpp"

namespace hsnet {

double relative_error(double analytic, double numeric, double floor) noexcept {
  const double scale = std::max({floor, std::abs(analytic), std::abs(numeric)});
  return std::abs(analytic - numeric) / scale;
}

ActivationAudit audit_activation(ActivationKind kind, Rng& rng, std::size_t points, double h) {
  ActivationAudit out{kind, 0, 0.0, 0.0};
  while (out.points < points) {
    const double x = rng.uniform(-5.0, 5.0);
    if (std::abs(x) <= 1e-3) continue;
    ++out.points;
    const double numeric = (act_forward(kind, x + h) - act_forward(kind, x - h)) / (2.0 * h);
    const double analytic = act_derivative(kind, x);
    const double err = relative_error(analytic, numeric, 1.0);
    if (err > out.max_error) {
      out.max_error = err;
      out.worst_x = x;
    }
  }
  return out;
}

ModelConfig tiny_cnn_config(ActivationKind act) {
  ModelConfig m;
  m.input_shape = {4, 4, 1};
  m.num_classes = 2;
  m.layers = {Conv2DSpec{2, 3, act}, FlattenSpec{}, DenseSpec{2, std::nullopt, false}};
  return m;
}

NetworkGradCheck check_network_gradients(ActivationKind kind, std::uint64_t seed, double h,
                                         double floor) {
  Rng rng(seed);
  Network net(tiny_cnn_config(kind), rng);
  const std::size_t batch = 3;
  const Tensor x = seeded_uniform(rng, {batch, 4, 4, 1}, -1.0, 1.0);
  std::vector<int> y(batch);
  for (int& label : y) label = static_cast<int>(rng.below(2));

  const auto loss = [&] { return softmax_cross_entropy(net.forward(x, Mode::Train, rng), y).loss; };
  net.backward(softmax_cross_entropy(net.forward(x, Mode::Train, rng), y).grad_logits);

  NetworkGradCheck out{kind, 0, 0.0};
  for (Parameter* p : net.parameters()) {
    const Tensor analytic = p->grad;
    for (std::size_t i = 0; i < p->value.size(); ++i) {
      const double saved = p->value[i];
      p->value[i] = saved + h;
      const double up = loss();
      p->value[i] = saved - h;
      const double down = loss();
      p->value[i] = saved;
      out.max_rel_error =
          std::max(out.max_rel_error, relative_error(analytic[i], (up - down) / (2.0 * h), floor));
      ++out.parameters;
    }
  }
  return out;
}

}  // namespace hsnet
