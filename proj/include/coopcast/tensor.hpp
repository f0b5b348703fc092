#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace coopcast::num {

// Dense row-major tensor of doubles, at most 4 axes. The model itself only
// ever needs matrices; the extra axes exist for callers that want them.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v);
  static Tensor ones(std::vector<int> shape) { return full(std::move(shape), 1.0); }
  static Tensor matrix(int rows, int cols) { return Tensor({rows, cols}); }
  // i.i.d. N(0, scale^2) entries.
  static Tensor randn(std::vector<int> shape, std::mt19937_64& rng, double scale = 1.0);

  int ndim() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[i]; }
  const std::vector<int>& shape() const { return shape_; }
  std::int64_t numel() const { return static_cast<std::int64_t>(v_.size()); }
  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  // 2D accessors; rows()/cols() are only meaningful for matrices.
  int rows() const { return shape_.empty() ? 0 : shape_[0]; }
  int cols() const { return ndim() < 2 ? 1 : shape_[1]; }
  double& at(int r, int c) { return v_[static_cast<size_t>(r) * cols() + c]; }
  double at(int r, int c) const { return v_[static_cast<size_t>(r) * cols() + c]; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  double& operator[](std::int64_t i) { return v_[i]; }
  double operator[](std::int64_t i) const { return v_[i]; }

  bool all_finite() const;
  std::string shape_str() const;

 private:
  std::vector<int> shape_;
  std::vector<double> v_;
};

// Learnable tensor with a gradient accumulator of the same shape.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;

  explicit Parameter(std::string n = {}, Tensor v = {})
      : name(std::move(n)), value(std::move(v)), grad(Tensor::zeros(value.shape())) {}

  void zero_grad() { grad = Tensor::zeros(value.shape()); }
};

// Ordered by name so that iteration (checkpointing, optimizer state,
// gradient checks) is deterministic.
class ParameterStore {
 public:
  Parameter& create(const std::string& name, std::vector<int> shape);
  Parameter& create_randn(const std::string& name, std::vector<int> shape,
                          std::mt19937_64& rng, double scale);
  // Xavier/Glorot normal for a [fan_in -> fan_out] projection stored as
  // [fan_in x fan_out].
  Parameter& create_xavier(const std::string& name, int fan_in, int fan_out,
                           std::mt19937_64& rng);

  Parameter& at(const std::string& name);
  const Parameter& at(const std::string& name) const;
  bool contains(const std::string& name) const { return params_.count(name) > 0; }

  void zero_grad();
  std::size_t size() const { return params_.size(); }

  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::map<std::string, Parameter> params_;
};

}  // namespace coopcast::num
