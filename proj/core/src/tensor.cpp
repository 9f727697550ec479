#include "bigrad/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bigrad/errors.hpp"

namespace bigrad {

int64_t shape_product(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) n *= d;
  return n;
}

void validate_shape(const std::vector<int64_t>& shape) {
  if (shape.empty()) throw ShapeError("invalid shape: empty dimension list");
  for (int64_t d : shape) {
    if (d < 1) {
      std::ostringstream os;
      os << "invalid shape: dimension " << d << " (every dimension must be >= 1)";
      throw ShapeError(os.str());
    }
  }
}

Tensor::Tensor(std::vector<int64_t> shape, double fill) : shape_(std::move(shape)) {
  validate_shape(shape_);
  if (!std::isfinite(fill)) throw ValueError("tensor fill value is not finite");
  data_.assign(static_cast<size_t>(shape_product(shape_)), fill);
}

int64_t Tensor::rows() const {
  if (shape_.size() != 2) throw ShapeError("rows(): tensor is not rank-2");
  return shape_[0];
}

int64_t Tensor::cols() const {
  if (shape_.size() != 2) throw ShapeError("cols(): tensor is not rank-2");
  return shape_[1];
}

double& Tensor::at(int64_t r, int64_t c) {
  return data_[static_cast<size_t>(r * cols() + c)];
}

double Tensor::at(int64_t r, int64_t c) const {
  return data_[static_cast<size_t>(r * cols() + c)];
}

Tensor Tensor::reshaped(std::vector<int64_t> new_shape) const {
  validate_shape(new_shape);
  if (shape_product(new_shape) != size()) {
    throw ShapeError("reshape: element count mismatch");
  }
  Tensor out;
  out.shape_ = std::move(new_shape);
  out.data_ = data_;
  return out;
}

double Tensor::sum() const {
  double acc = 0.0;
  for (double v : data_) acc += v;
  return acc;
}

double Tensor::mean() const {
  if (data_.empty()) throw ValueError("mean of empty tensor");
  return sum() / static_cast<double>(data_.size());
}

double Tensor::max_value() const {
  if (data_.empty()) throw ValueError("max of empty tensor");
  return *std::max_element(data_.begin(), data_.end());
}

double Tensor::abs_max() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Tensor::require_finite(const char* what) const {
  if (!all_finite()) {
    throw ValueError(std::string("non-finite value in ") + what);
  }
}

namespace {

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  Tensor out = a;
  for (int64_t i = 0; i < out.size(); ++i) out[i] += b[i];
  out.require_finite("add result");
  return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "sub");
  Tensor out = a;
  for (int64_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  out.require_finite("sub result");
  return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "mul");
  Tensor out = a;
  for (int64_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  out.require_finite("mul result");
  return out;
}

Tensor scale(const Tensor& a, double c) {
  Tensor out = a;
  for (int64_t i = 0; i < out.size(); ++i) out[i] *= c;
  out.require_finite("scale result");
  return out;
}

Tensor abs_of(const Tensor& a) {
  Tensor out = a;
  for (int64_t i = 0; i < out.size(); ++i) out[i] = std::abs(out[i]);
  return out;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  const int64_t m = a.rows(), k = a.cols(), n = b.cols();
  Tensor out({m, n}, 0.0);
  // i-k-j order keeps the inner loop contiguous in both b and out.
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t p = 0; p < k; ++p) {
      const double av = a.at(i, p);
      if (av == 0.0) continue;
      const double* brow = b.data() + p * n;
      double* orow = out.data() + i * n;
      for (int64_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  out.require_finite("matmul result");
  return out;
}

Tensor matmul_tn(const Tensor& a, const Tensor& b) {
  if (a.rows() != b.rows()) throw ShapeError("matmul_tn: row counts differ");
  const int64_t k = a.rows(), m = a.cols(), n = b.cols();
  Tensor out({m, n}, 0.0);
  for (int64_t p = 0; p < k; ++p) {
    const double* arow = a.data() + p * m;
    const double* brow = b.data() + p * n;
    for (int64_t i = 0; i < m; ++i) {
      const double av = arow[i];
      if (av == 0.0) continue;
      double* orow = out.data() + i * n;
      for (int64_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  out.require_finite("matmul_tn result");
  return out;
}

}  // namespace bigrad
