#pragma once

#include <cstdint>
#include <string>

#include "bigrad/tensor.hpp"

namespace bigrad {

enum class InnerKind { adam, sgd, momentum, rmsprop };

const char* to_string(InnerKind kind);
InnerKind inner_kind_from_string(const std::string& name);

/// Hyperparameters shared by every first-order update rule. Defaults are the
/// usual ones; each rule reads only the fields it needs.
struct InnerHyper {
  InnerKind kind = InnerKind::adam;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double momentum_coef = 0.9;
  double decay = 0.9;

  void validate() const;  // throws ConfigError
};

/// Adam moment estimates for one parameter tensor.
struct AdamState {
  Tensor m;  // first moment
  Tensor v;  // second moment, elementwise >= 0
  int64_t t = 0;
};

/// Accumulator for the non-Adam baselines: momentum velocity or the RMSProp
/// mean-square, depending on the hyper kind.
struct BaselineState {
  Tensor acc;
  int64_t t = 0;
};

AdamState adam_init(const std::vector<int64_t>& shape);

/// One Adam step: advances the moments and returns the update value
/// u = lr * mhat / (sqrt(vhat) + eps). u is returned, never applied; the
/// caller decides what to do with it (apply directly, or feed the BSG rule).
Tensor adam_update(AdamState& state, const Tensor& g, const InnerHyper& h);

BaselineState baseline_init(const std::vector<int64_t>& shape);

/// sgd: u = lr*g. momentum: vel <- coef*vel + g, u = lr*vel.
/// rmsprop: s <- decay*s + (1-decay)*g^2, u = lr*g/(sqrt(s)+eps).
Tensor baseline_update(BaselineState& state, const Tensor& g, const InnerHyper& h);

/// Dispatcher holding whichever state the configured kind needs. One instance
/// per parameter tensor.
class InnerOptimizer {
 public:
  InnerOptimizer(const std::vector<int64_t>& shape, const InnerHyper& h);

  Tensor update(const Tensor& g);

  const InnerHyper& hyper() const { return hyper_; }
  int64_t steps() const;

 private:
  InnerHyper hyper_;
  AdamState adam_;
  BaselineState base_;
};

}  // namespace bigrad
