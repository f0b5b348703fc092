#pragma once

#include <functional>
#include <random>
#include <vector>

#include "coopcast/tensor.hpp"

namespace coopcast::num {

// Handle into a Tape. Only valid for the tape that produced it.
struct Var {
  int idx = -1;
  bool valid() const { return idx >= 0; }
};

// Reverse-mode autodiff over a recorded operation tape. A tape is built for
// one forward pass, backward() is called at most once, and the tape is then
// discarded; tapes are never reused across passes. A tape and its tensors
// are confined to a single thread.
class Tape {
 public:
  explicit Tape(bool grad_enabled = true) : grad_enabled_(grad_enabled) {}

  bool grad_enabled() const { return grad_enabled_; }

  Var constant(Tensor v);
  // Leaf bound to an external parameter; backward() accumulates into p.grad.
  Var leaf(Parameter& p);

  // [a x b] * [b x c] -> [a x c]
  Var matmul(Var a, Var b);
  Var transpose(Var a);

  Var add(Var a, Var b);   // same shape
  Var sub(Var a, Var b);   // same shape
  Var mul(Var a, Var b);   // elementwise, same shape
  Var div(Var a, Var b);   // elementwise, same shape
  Var add_row_bias(Var x, Var bias);  // [n x d] + [1 x d]
  Var scale(Var a, double c);
  Var add_scalar(Var a, double c);

  Var relu(Var a);
  Var sigmoid(Var a);
  Var softplus(Var a);
  Var abs(Var a);
  Var log(Var a);

  Var softmax_rows(Var x);
  Var layernorm_rows(Var x, Var gamma, Var beta);  // gamma/beta [1 x d]

  Var concat_rows(const std::vector<Var>& xs);
  Var concat_cols(const std::vector<Var>& xs);
  Var slice_rows(Var x, int start, int count);
  Var slice_cols(Var x, int start, int count);
  Var gather_rows(Var x, std::vector<int> indices);
  Var tile_rows(Var x, int times);

  Var sum_all(Var x);   // -> [1 x 1]
  Var mean_all(Var x);  // -> [1 x 1]

  // Cumulative sum down the rows within consecutive blocks of block_len rows.
  Var block_cumsum(Var x, int block_len);

  // Multi-head scaled dot-product attention with a 0/1 key mask per query.
  // q [nq x d], k/v [nk x d], mask [nq x nk]. Queries whose mask row is all
  // zero produce a zero output row (empty attention set contributes nothing).
  // If alphas_out is non-null it receives one [nq x nk] weight matrix per head.
  Var mha(Var q, Var k, Var v, const Tensor& mask, int heads,
          std::vector<Tensor>* alphas_out = nullptr);

  // Inverted-dropout mask applied when training; identity otherwise.
  Var dropout(Var x, double p, std::mt19937_64& rng, bool training);

  void backward(Var loss);

  const Tensor& val(Var v) const { return nodes_[v.idx].value; }
  const Tensor& grad(Var v) const { return nodes_[v.idx].grad; }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void()> back;  // empty for constants/leaves
    Parameter* bound = nullptr;
  };

  Var push(Tensor value, std::function<void()> back = {}, Parameter* bound = nullptr);
  Tensor& grad_ref(Var v) { return nodes_[v.idx].grad; }
  void check2d(Var v, const char* op) const;

  std::vector<Node> nodes_;
  bool grad_enabled_;
  bool backward_done_ = false;
};

}  // namespace coopcast::num
