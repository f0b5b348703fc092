#include "coopcast/tensor.hpp"

#include <cmath>
#include <sstream>

#include "coopcast/errors.hpp"

namespace coopcast::num {

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  if (shape_.empty() || shape_.size() > 4)
    throw NumericError("tensor rank must be 1..4, got " + std::to_string(shape_.size()));
  std::int64_t n = 1;
  for (int d : shape_) {
    if (d <= 0) throw NumericError("tensor axis must be positive");
    n *= d;
  }
  v_.assign(static_cast<size_t>(n), 0.0);
}

Tensor Tensor::full(std::vector<int> shape, double v) {
  Tensor t(std::move(shape));
  for (auto& x : t.v_) x = v;
  return t;
}

Tensor Tensor::randn(std::vector<int> shape, std::mt19937_64& rng, double scale) {
  Tensor t(std::move(shape));
  std::normal_distribution<double> dist(0.0, 1.0);
  for (auto& x : t.v_) x = dist(rng) * scale;
  return t;
}

bool Tensor::all_finite() const {
  for (double x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < shape_.size(); ++i) os << (i ? "x" : "") << shape_[i];
  os << ']';
  return os.str();
}

Parameter& ParameterStore::create(const std::string& name, std::vector<int> shape) {
  auto [it, inserted] = params_.emplace(name, Parameter(name, Tensor::zeros(std::move(shape))));
  if (!inserted) throw ConfigError("duplicate parameter: " + name);
  return it->second;
}

Parameter& ParameterStore::create_randn(const std::string& name, std::vector<int> shape,
                                        std::mt19937_64& rng, double scale) {
  auto [it, inserted] = params_.emplace(name, Parameter(name, Tensor::randn(std::move(shape), rng, scale)));
  if (!inserted) throw ConfigError("duplicate parameter: " + name);
  return it->second;
}

Parameter& ParameterStore::create_xavier(const std::string& name, int fan_in, int fan_out,
                                         std::mt19937_64& rng) {
  const double scale = std::sqrt(2.0 / (fan_in + fan_out));
  return create_randn(name, {fan_in, fan_out}, rng, scale);
}

Parameter& ParameterStore::at(const std::string& name) {
  auto it = params_.find(name);
  if (it == params_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

const Parameter& ParameterStore::at(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

void ParameterStore::zero_grad() {
  for (auto& [k, p] : params_) p.zero_grad();
}

}  // namespace coopcast::num
