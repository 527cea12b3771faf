#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "czseg/errors.hpp"
#include "czseg/rng.hpp"

namespace czseg {

using Shape = std::vector<std::size_t>;

std::string shape_str(const Shape& s);
std::size_t shape_numel(const Shape& s);

namespace detail {

// One recorded value. The reverse-mode record is the set of nodes reachable
// from an output through `parents`; `seq` gives the recording order, so a
// descending sweep replays adjoints in reverse. A record is single-owner:
// grad() consumes it and further grad() calls on the same graph fail.
struct Node {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // adjoint buffer, live only inside grad()
  bool requires_grad = false;
  bool consumed = false;
  std::uint64_t seq = 0;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;

  std::size_t numel() const { return data.size(); }
  void accumulate(const double* g, std::size_t n);
};

}  // namespace detail

// Dense row-major f64 tensor. Values are immutable after construction; all
// public operations return new tensors and raise NonFiniteError rather than
// store NaN/Inf.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<double> data, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);
  static Tensor eye(std::size_t n);
  static Tensor randn(Shape shape, Rng& rng, double stdev = 1.0, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  std::size_t numel() const;
  std::size_t rows() const;  // rank-2 only
  std::size_t cols() const;

  const std::vector<double>& data() const;
  double value() const;  // numel()==1 only
  double at(std::size_t i) const;
  double at(std::size_t r, std::size_t c) const;

  bool requires_grad() const;
  Tensor detach() const;                                  // same data, new untracked leaf
  Tensor with_data(std::vector<double> new_data) const;   // same shape/flag, new leaf

  detail::Node* node() const { return node_.get(); }
  const std::shared_ptr<detail::Node>& node_ptr() const { return node_; }

 private:
  friend Tensor wrap_node(std::shared_ptr<detail::Node> n);
  std::shared_ptr<detail::Node> node_;
};

Tensor wrap_node(std::shared_ptr<detail::Node> n);

// ---- primitives -----------------------------------------------------------
// Binary elementwise ops broadcast one operand to the other when, after
// left-padding its shape with 1s, the mismatching extents are all leading 1s
// (a scalar is the all-leading-1 case). Anything else is a ShapeError.

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor divide(const Tensor& a, const Tensor& b);

Tensor neg(const Tensor& x);
Tensor exp_op(const Tensor& x);
Tensor log_op(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor softplus(const Tensor& x);
Tensor gelu(const Tensor& x);
Tensor pow_scalar(const Tensor& x, double e);  // x >= 0
Tensor scale(const Tensor& x, double c);
Tensor add_scalar(const Tensor& x, double c);

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& x);
Tensor concat(const std::vector<Tensor>& parts, int axis);  // rank 1 or 2
Tensor slice(const Tensor& x, int axis, std::size_t offset, std::size_t len);

Tensor softmax(const Tensor& x, int axis);      // rank 1 or 2; max-subtracted
Tensor log_softmax(const Tensor& x, int axis);  // rank 2
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps = 1e-5);

Tensor sum_all(const Tensor& x);   // -> shape {1}
Tensor mean_all(const Tensor& x);  // -> shape {1}
Tensor sum_axis(const Tensor& x, int axis);  // rank 2, keeps a 1-extent axis

// ---- reverse mode ----------------------------------------------------------

enum class UnusedPolicy { error, zeros };

// d(output)/d(wrt[i]) for a scalar output produced under a live record.
// Consumes the record. `wrt` entries may be leaves or interior values; with
// UnusedPolicy::error an entry the output does not depend on is a TapeError,
// with ::zeros it yields a zero tensor.
std::vector<Tensor> grad(const Tensor& output, const std::vector<Tensor>& wrt,
                         UnusedPolicy unused = UnusedPolicy::error);

// Forward-only helpers (never recorded).
std::vector<std::size_t> argmax_axis0(const Tensor& x);  // per column of [C,N]

}  // namespace czseg
