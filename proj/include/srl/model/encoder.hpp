#pragma once

#include <string>
#include <vector>

#include "srl/numerics/init.hpp"
#include "srl/numerics/ops.hpp"
#include "srl/numerics/store.hpp"

namespace srl {

// Stacked unidirectional LSTM layers with alternating directions
// (forward, backward, forward, backward, ...). Each layer output mixes the
// LSTM state with a linear projection of the layer's input through a highway
// gate: out = t (.) h_lstm + (1 - t) (.) (Wh x), t = sigma(Wt x + bt).
// The representation of a token is the top (backward) layer's output.

struct LstmCellParams {
  Tensor *Wi, *Ui, *bi;
  Tensor *Wf, *Uf, *bf;
  Tensor *Wo, *Uo, *bo;
  Tensor *Wg, *Ug, *bg;
};

struct HighwayParams {
  Tensor *Wt, *bt, *Wh;
};

struct EncoderLayer {
  LstmCellParams cell;
  HighwayParams highway;
  bool reversed = false;
};

struct EncoderParams {
  std::vector<EncoderLayer> layers;
  int hidden = 0;
};

namespace detail {

inline LstmCellParams make_lstm_cell(ParameterStore& store, const std::string& prefix,
                                     int input_dim, int hidden, Rng& rng) {
  LstmCellParams c;
  auto mat = [&](const std::string& name, int rows, int cols) {
    Tensor& t = store.add(prefix + "." + name, rows, cols);
    init_scaled_gaussian(t, rng);
    return &t;
  };
  auto bias = [&](const std::string& name, double value) {
    Tensor& t = store.add(prefix + "." + name, hidden, 1);
    init_constant(t, value);
    return &t;
  };
  c.Wi = mat("Wi", hidden, input_dim); c.Ui = mat("Ui", hidden, hidden); c.bi = bias("bi", 0.0);
  c.Wf = mat("Wf", hidden, input_dim); c.Uf = mat("Uf", hidden, hidden); c.bf = bias("bf", 1.0);
  c.Wo = mat("Wo", hidden, input_dim); c.Uo = mat("Uo", hidden, hidden); c.bo = bias("bo", 0.0);
  c.Wg = mat("Wg", hidden, input_dim); c.Ug = mat("Ug", hidden, hidden); c.bg = bias("bg", 0.0);
  return c;
}

}  // namespace detail

inline EncoderParams make_encoder_params(ParameterStore& store, const std::string& prefix,
                                         int input_dim, int hidden, int num_layers, Rng& rng) {
  EncoderParams p;
  p.hidden = hidden;
  for (int k = 0; k < num_layers; ++k) {
    const int in_dim = k == 0 ? input_dim : hidden;
    EncoderLayer layer;
    layer.reversed = k % 2 == 1;
    const std::string lp = prefix + ".layer" + std::to_string(k);
    layer.cell = detail::make_lstm_cell(store, lp + ".lstm", in_dim, hidden, rng);
    layer.highway.Wt = &store.add(lp + ".hw.Wt", hidden, in_dim);
    layer.highway.bt = &store.add(lp + ".hw.bt", hidden, 1);
    layer.highway.Wh = &store.add(lp + ".hw.Wh", hidden, in_dim);
    init_scaled_gaussian(*layer.highway.Wt, rng);
    init_scaled_gaussian(*layer.highway.Wh, rng);
    p.layers.push_back(layer);
  }
  return p;
}

inline std::vector<Var> encode(Tape& tape, const std::vector<Var>& inputs,
                               const EncoderParams& params) {
  if (inputs.empty()) throw std::invalid_argument("encode: empty input sequence");
  const int n = static_cast<int>(inputs.size());
  std::vector<Var> xs = inputs;
  Var zero = tape.input(MatX::Zero(params.hidden, 1));

  for (const auto& layer : params.layers) {
    std::vector<Var> hs(n);
    Var h = zero, c = zero;
    for (int step = 0; step < n; ++step) {
      const int i = layer.reversed ? n - 1 - step : step;
      Var x = xs[i];
      const auto& p = layer.cell;
      Var gi = sigmoid(add(affine(tape.param(*p.Wi), x, tape.param(*p.bi)),
                           matmul(tape.param(*p.Ui), h)));
      Var gf = sigmoid(add(affine(tape.param(*p.Wf), x, tape.param(*p.bf)),
                           matmul(tape.param(*p.Uf), h)));
      Var go = sigmoid(add(affine(tape.param(*p.Wo), x, tape.param(*p.bo)),
                           matmul(tape.param(*p.Uo), h)));
      Var gg = tanh(add(affine(tape.param(*p.Wg), x, tape.param(*p.bg)),
                        matmul(tape.param(*p.Ug), h)));
      c = add(hadamard(gf, c), hadamard(gi, gg));
      h = hadamard(go, tanh(c));

      Var t = sigmoid(affine(tape.param(*layer.highway.Wt), x, tape.param(*layer.highway.bt)));
      Var transformed = matmul(tape.param(*layer.highway.Wh), x);
      hs[i] = add(hadamard(t, h), hadamard(one_minus(t), transformed));
    }
    xs = std::move(hs);
  }
  return xs;
}

}  // namespace srl
