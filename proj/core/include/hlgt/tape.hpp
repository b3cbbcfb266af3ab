#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlgt/tensor.hpp"

namespace hlgt {

/// Thrown when operand shapes do not conform; the message names the op and shapes.
class ShapeError : public std::runtime_error {
  public:
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class OpKind : std::uint8_t {
    Leaf,
    Add,
    Sub,
    Mul,
    AffineConst,  // a*x + b elementwise, a/b compile-time constants
    MatMul,
    Dot,
    ScalarMul,  // tensor * scalar variable
    Concat,     // rank-1 inputs -> rank-1
    SelectRow,  // matrix row -> rank-1 (also the embedding lookup)
    Softmax,
    LogSoftmax,
    Sigmoid,
    Tanh,
    LeakyRelu,
    LayerNorm,
    Sum,            // full reduction -> scalar
    BceWithLogits,  // elementwise binary cross entropy against constant labels
};

/// Handle to a node in a Tape. Only valid for the tape that produced it.
struct Var {
    int id = -1;
    bool valid() const { return id >= 0; }
};

/// Weight handles for one GRU cell: gates z (update), r (reset), n (candidate).
struct GruCellVars {
    Var wz, wr, wn;  // input projections [in, hidden]
    Var uz, ur, un;  // state projections [hidden, hidden]
    Var bz, br, bn;  // biases [hidden]
};

/// Eager reverse-mode computation graph over dense tensors. Nodes are recorded
/// in construction order (a topological order by definition); values are
/// computed immediately and gradients on demand via backward().
class Tape {
  public:
    explicit Tape(Precision precision = Precision::f64) : precision_(precision) {}

    Precision precision() const { return precision_; }

    /// Drops all nodes but keeps allocated capacity.
    void reset();

    std::size_t size() const { return nodes_.size(); }

    Var leaf(Tensor value, bool requires_grad = false);
    Var constant(Tensor value) { return leaf(std::move(value), false); }
    Var scalar(double v) { return constant(Tensor::scalar(v)); }
    /// Leaf referencing storage owned elsewhere (parameters); always differentiable.
    /// The pointee must outlive the tape generation.
    Var param(const Tensor* value);

    Var add(Var a, Var b);
    Var sub(Var a, Var b);
    Var mul(Var a, Var b);
    Var affine(Var x, double a, double b);
    Var neg(Var x) { return affine(x, -1.0, 0.0); }
    Var matmul(Var a, Var b);
    Var dot(Var a, Var b);
    Var scalar_mul(Var x, Var scalar);
    Var concat(std::span<const Var> parts);
    Var concat(std::initializer_list<Var> parts);
    Var select_row(Var matrix, long row);
    Var embedding_lookup(Var table, long index) { return select_row(table, index); }
    Var softmax(Var x, int axis = 0);
    Var log_softmax(Var x);
    Var sigmoid(Var x);
    Var tanh(Var x);
    Var leaky_relu(Var x, double slope = 0.01);
    Var relu(Var x) { return leaky_relu(x, 0.0); }
    Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);
    Var sum(Var x);
    Var mean(Var x);
    Var bce_with_logits(Var logits, Tensor labels);

    // Composites built from the primitives above; gradients come from the chain rule.
    Var linear(Var x, Var weight, Var bias);
    /// Standard GRU cell: z = sig(xWz + hUz + bz), r = sig(xWr + hUr + br),
    /// n = tanh(xWn + r.(hUn) + bn), h' = (1-z).n + z.h.
    Var gru_cell(Var x, Var h_prev, const GruCellVars& w);
    Var feed_forward(Var x, Var w1, Var b1, Var w2, Var b2);

    const Tensor& value(Var v) const;
    double scalar_value(Var v) const;

    /// Reverse pass from a scalar loss; accumulates into per-node gradients.
    void backward(Var loss);

    /// Gradient of the last backward() w.r.t. v, or nullptr if none reached it.
    const Tensor* grad(Var v) const;

    bool requires_grad(Var v) const { return node(v.id).requires_grad; }

  private:
    struct Node {
        OpKind op = OpKind::Leaf;
        std::array<int, 3> in{-1, -1, -1};
        int n_in = 0;
        std::vector<int> in_list;  // Concat only
        Tensor value;
        const Tensor* external = nullptr;
        double attr_a = 0.0;
        double attr_b = 0.0;
        int attr_i = 0;
        Tensor aux;  // op-specific cache (layer-norm stats, BCE labels)
        bool requires_grad = false;
    };

    const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
    const Tensor& value_of(const Node& n) const { return n.external ? *n.external : n.value; }

    Var push(Node&& n);
    void check_var(Var v, const char* op) const;
    Tensor& grad_slot(int id, const std::vector<long>& dims);
    void backward_node(int id);

    std::vector<Node> nodes_;
    std::vector<Tensor> grads_;
    Precision precision_;
};

}  // namespace hlgt
