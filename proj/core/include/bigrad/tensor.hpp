#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bigrad {

/// Dense row-major tensor of 64-bit floats. The single value carrier used by
/// the optimizers, models and loaders. Every public operation validates that
/// the result is finite; a NaN/Inf anywhere is reported as ValueError.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<int64_t> shape, double fill);

  static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape), 0.0); }
  static Tensor full(std::vector<int64_t> shape, double fill) { return Tensor(std::move(shape), fill); }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::span<const double> values() const { return data_; }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // 2-D helpers; only valid for rank-2 tensors.
  int64_t rows() const;
  int64_t cols() const;
  double& at(int64_t r, int64_t c);
  double at(int64_t r, int64_t c) const;

  /// Same data, new shape; element count must be preserved.
  Tensor reshaped(std::vector<int64_t> new_shape) const;

  double sum() const;
  double mean() const;
  double max_value() const;
  /// Largest absolute entry; 0 for the empty tensor.
  double abs_max() const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  /// Throws ValueError naming `what` if any entry is NaN/Inf.
  void require_finite(const char* what) const;

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

// Elementwise arithmetic. Shapes must match exactly; results are checked finite.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
Tensor abs_of(const Tensor& a);

// Rank-2 products used by the models. `matmul_tn` computes A^T * B.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor matmul_tn(const Tensor& a, const Tensor& b);

int64_t shape_product(const std::vector<int64_t>& shape);
/// Throws ShapeError unless every dimension is >= 1 and the list is non-empty.
void validate_shape(const std::vector<int64_t>& shape);

}  // namespace bigrad
