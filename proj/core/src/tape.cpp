#include "hlgt/tape.hpp"

#include <algorithm>
#include <cmath>

namespace hlgt {

namespace {

std::string op_name(OpKind op) {
    switch (op) {
        case OpKind::Leaf: return "leaf";
        case OpKind::Add: return "add";
        case OpKind::Sub: return "sub";
        case OpKind::Mul: return "mul";
        case OpKind::AffineConst: return "affine";
        case OpKind::MatMul: return "matmul";
        case OpKind::Dot: return "dot";
        case OpKind::ScalarMul: return "scalar_mul";
        case OpKind::Concat: return "concat";
        case OpKind::SelectRow: return "select_row";
        case OpKind::Softmax: return "softmax";
        case OpKind::LogSoftmax: return "log_softmax";
        case OpKind::Sigmoid: return "sigmoid";
        case OpKind::Tanh: return "tanh";
        case OpKind::LeakyRelu: return "leaky_relu";
        case OpKind::LayerNorm: return "layer_norm";
        case OpKind::Sum: return "sum";
        case OpKind::BceWithLogits: return "bce_with_logits";
    }
    return "?";
}

[[noreturn]] void shape_fail(OpKind op, const Tensor& a, const Tensor& b) {
    throw ShapeError("op " + op_name(op) + ": incompatible shapes " + a.shape_string() + " and " +
                     b.shape_string());
}

[[noreturn]] void shape_fail(OpKind op, const Tensor& a, const std::string& why) {
    throw ShapeError("op " + op_name(op) + ": " + why + " (got " + a.shape_string() + ")");
}

}  // namespace

void Tape::reset() {
    nodes_.clear();
    grads_.clear();
}

void Tape::check_var(Var v, const char* op) const {
    if (!v.valid() || static_cast<std::size_t>(v.id) >= nodes_.size()) {
        throw std::logic_error(std::string(op) + ": invalid tape handle");
    }
}

Var Tape::push(Node&& n) {
    if (n.op != OpKind::Leaf) {
        n.value.round_to(precision_);
        for (int i = 0; i < n.n_in; ++i) {
            if (node(n.in[static_cast<std::size_t>(i)]).requires_grad) n.requires_grad = true;
        }
        for (int id : n.in_list) {
            if (node(id).requires_grad) n.requires_grad = true;
        }
    }
    nodes_.push_back(std::move(n));
    return Var{static_cast<int>(nodes_.size()) - 1};
}

Var Tape::leaf(Tensor value, bool requires_grad) {
    Node n;
    n.op = OpKind::Leaf;
    n.requires_grad = requires_grad || value.requires_grad;
    value.round_to(precision_);
    n.value = std::move(value);
    return push(std::move(n));
}

Var Tape::param(const Tensor* value) {
    Node n;
    n.op = OpKind::Leaf;
    n.external = value;
    n.requires_grad = true;
    return push(std::move(n));
}

const Tensor& Tape::value(Var v) const {
    check_var(v, "value");
    return value_of(node(v.id));
}

double Tape::scalar_value(Var v) const {
    const Tensor& t = value(v);
    if (t.size() != 1) throw ShapeError("scalar_value: tensor has size " + std::to_string(t.size()));
    return t.at(0);
}

Var Tape::add(Var a, Var b) {
    check_var(a, "add");
    check_var(b, "add");
    const Tensor& ta = value(a);
    const Tensor& tb = value(b);
    if (!ta.same_shape(tb)) shape_fail(OpKind::Add, ta, tb);
    Node n;
    n.op = OpKind::Add;
    n.in = {a.id, b.id, -1};
    n.n_in = 2;
    n.value = ta;
    n.value.add_scaled(tb, 1.0);
    return push(std::move(n));
}

Var Tape::sub(Var a, Var b) {
    check_var(a, "sub");
    check_var(b, "sub");
    const Tensor& ta = value(a);
    const Tensor& tb = value(b);
    if (!ta.same_shape(tb)) shape_fail(OpKind::Sub, ta, tb);
    Node n;
    n.op = OpKind::Sub;
    n.in = {a.id, b.id, -1};
    n.n_in = 2;
    n.value = ta;
    n.value.add_scaled(tb, -1.0);
    return push(std::move(n));
}

Var Tape::mul(Var a, Var b) {
    check_var(a, "mul");
    check_var(b, "mul");
    const Tensor& ta = value(a);
    const Tensor& tb = value(b);
    if (!ta.same_shape(tb)) shape_fail(OpKind::Mul, ta, tb);
    Node n;
    n.op = OpKind::Mul;
    n.in = {a.id, b.id, -1};
    n.n_in = 2;
    n.value = ta;
    for (long i = 0; i < n.value.size(); ++i) n.value.at(i) *= tb.at(i);
    return push(std::move(n));
}

Var Tape::affine(Var x, double a, double b) {
    check_var(x, "affine");
    const Tensor& tx = value(x);
    Node n;
    n.op = OpKind::AffineConst;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.attr_a = a;
    n.attr_b = b;
    n.value = tx;
    for (long i = 0; i < n.value.size(); ++i) n.value.at(i) = a * tx.at(i) + b;
    return push(std::move(n));
}

Var Tape::matmul(Var a, Var b) {
    check_var(a, "matmul");
    check_var(b, "matmul");
    const Tensor& ta = value(a);
    const Tensor& tb = value(b);
    Node n;
    n.op = OpKind::MatMul;
    n.in = {a.id, b.id, -1};
    n.n_in = 2;
    if (ta.rank() == 1 && tb.rank() == 2) {
        if (ta.dim(0) != tb.dim(0)) shape_fail(OpKind::MatMul, ta, tb);
        long k = ta.dim(0), cols = tb.dim(1);
        n.value = Tensor::zeros({cols});
        for (long i = 0; i < k; ++i) {
            double av = ta.at(i);
            if (av == 0.0) continue;
            const double* row = tb.data() + i * cols;
            double* out = n.value.data();
            for (long j = 0; j < cols; ++j) out[j] += av * row[j];
        }
    } else if (ta.rank() == 2 && tb.rank() == 1) {
        if (ta.dim(1) != tb.dim(0)) shape_fail(OpKind::MatMul, ta, tb);
        long rows = ta.dim(0), k = ta.dim(1);
        n.value = Tensor::zeros({rows});
        for (long r = 0; r < rows; ++r) {
            const double* row = ta.data() + r * k;
            double acc = 0.0;
            for (long i = 0; i < k; ++i) acc += row[i] * tb.at(i);
            n.value.at(r) = acc;
        }
    } else if (ta.rank() == 2 && tb.rank() == 2) {
        if (ta.dim(1) != tb.dim(0)) shape_fail(OpKind::MatMul, ta, tb);
        long rows = ta.dim(0), k = ta.dim(1), cols = tb.dim(1);
        n.value = Tensor::zeros({rows, cols});
        for (long r = 0; r < rows; ++r) {
            double* out = n.value.data() + r * cols;
            for (long i = 0; i < k; ++i) {
                double av = ta.at(r, i);
                if (av == 0.0) continue;
                const double* row = tb.data() + i * cols;
                for (long j = 0; j < cols; ++j) out[j] += av * row[j];
            }
        }
    } else {
        shape_fail(OpKind::MatMul, ta, tb);
    }
    return push(std::move(n));
}

Var Tape::dot(Var a, Var b) {
    check_var(a, "dot");
    check_var(b, "dot");
    const Tensor& ta = value(a);
    const Tensor& tb = value(b);
    if (ta.rank() != 1 || tb.rank() != 1 || ta.dim(0) != tb.dim(0)) {
        shape_fail(OpKind::Dot, ta, tb);
    }
    double acc = 0.0;
    for (long i = 0; i < ta.size(); ++i) acc += ta.at(i) * tb.at(i);
    Node n;
    n.op = OpKind::Dot;
    n.in = {a.id, b.id, -1};
    n.n_in = 2;
    n.value = Tensor::scalar(acc);
    return push(std::move(n));
}

Var Tape::scalar_mul(Var x, Var scalar) {
    check_var(x, "scalar_mul");
    check_var(scalar, "scalar_mul");
    const Tensor& tx = value(x);
    const Tensor& ts = value(scalar);
    if (ts.size() != 1) shape_fail(OpKind::ScalarMul, ts, "scalar operand must have size 1");
    Node n;
    n.op = OpKind::ScalarMul;
    n.in = {x.id, scalar.id, -1};
    n.n_in = 2;
    n.value = tx;
    double s = ts.at(0);
    for (long i = 0; i < n.value.size(); ++i) n.value.at(i) *= s;
    return push(std::move(n));
}

Var Tape::concat(std::span<const Var> parts) {
    if (parts.empty()) throw ShapeError("op concat: no inputs");
    long total = 0;
    for (Var p : parts) {
        check_var(p, "concat");
        const Tensor& t = value(p);
        if (t.rank() != 1) shape_fail(OpKind::Concat, t, "inputs must be rank-1");
        total += t.size();
    }
    Node n;
    n.op = OpKind::Concat;
    n.in_list.reserve(parts.size());
    n.value = Tensor::zeros({total});
    long offset = 0;
    for (Var p : parts) {
        n.in_list.push_back(p.id);
        const Tensor& t = value(p);
        std::copy(t.data(), t.data() + t.size(), n.value.data() + offset);
        offset += t.size();
    }
    return push(std::move(n));
}

Var Tape::concat(std::initializer_list<Var> parts) {
    return concat(std::span<const Var>(parts.begin(), parts.size()));
}

Var Tape::select_row(Var matrix, long row) {
    check_var(matrix, "select_row");
    const Tensor& tm = value(matrix);
    if (tm.rank() != 2) shape_fail(OpKind::SelectRow, tm, "input must be rank-2");
    if (row < 0 || row >= tm.dim(0)) {
        throw ShapeError("op select_row: row " + std::to_string(row) + " out of range for " +
                         tm.shape_string());
    }
    Node n;
    n.op = OpKind::SelectRow;
    n.in = {matrix.id, -1, -1};
    n.n_in = 1;
    n.attr_i = static_cast<int>(row);
    long cols = tm.dim(1);
    n.value = Tensor::zeros({cols});
    std::copy(tm.data() + row * cols, tm.data() + (row + 1) * cols, n.value.data());
    return push(std::move(n));
}

namespace {
// softmax over contiguous lines of length `len`, `count` lines, stride handling
// folded by caller into (count, len, line_stride, elem_stride)
void softmax_lines(const Tensor& in, Tensor& out, long count, long len, long line_stride,
                   long elem_stride, bool log_domain) {
    for (long l = 0; l < count; ++l) {
        const double* src = in.data() + l * line_stride;
        double* dst = out.data() + l * line_stride;
        double mx = src[0];
        for (long i = 1; i < len; ++i) mx = std::max(mx, src[i * elem_stride]);
        double z = 0.0;
        for (long i = 0; i < len; ++i) z += std::exp(src[i * elem_stride] - mx);
        if (log_domain) {
            double lz = std::log(z) + mx;
            for (long i = 0; i < len; ++i) dst[i * elem_stride] = src[i * elem_stride] - lz;
        } else {
            for (long i = 0; i < len; ++i) dst[i * elem_stride] = std::exp(src[i * elem_stride] - mx) / z;
        }
    }
}
}  // namespace

Var Tape::softmax(Var x, int axis) {
    check_var(x, "softmax");
    const Tensor& tx = value(x);
    Node n;
    n.op = OpKind::Softmax;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.attr_i = axis;
    n.value = tx;
    if (tx.rank() == 1) {
        if (axis != 0) shape_fail(OpKind::Softmax, tx, "axis must be 0 for rank-1");
        softmax_lines(tx, n.value, 1, tx.dim(0), 0, 1, false);
    } else if (axis == 1) {
        softmax_lines(tx, n.value, tx.dim(0), tx.dim(1), tx.dim(1), 1, false);
    } else if (axis == 0) {
        long rows = tx.dim(0);
        for (long c = 0; c < tx.dim(1); ++c) {
            double mx = tx.at(0, c);
            for (long r = 1; r < rows; ++r) mx = std::max(mx, tx.at(r, c));
            double z = 0.0;
            for (long r = 0; r < rows; ++r) z += std::exp(tx.at(r, c) - mx);
            for (long r = 0; r < rows; ++r) n.value.at(r, c) = std::exp(tx.at(r, c) - mx) / z;
        }
    } else {
        shape_fail(OpKind::Softmax, tx, "axis must be 0 or 1");
    }
    return push(std::move(n));
}

Var Tape::log_softmax(Var x) {
    check_var(x, "log_softmax");
    const Tensor& tx = value(x);
    if (tx.rank() != 1) shape_fail(OpKind::LogSoftmax, tx, "input must be rank-1");
    Node n;
    n.op = OpKind::LogSoftmax;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.value = tx;
    softmax_lines(tx, n.value, 1, tx.dim(0), 0, 1, true);
    return push(std::move(n));
}

Var Tape::sigmoid(Var x) {
    check_var(x, "sigmoid");
    const Tensor& tx = value(x);
    Node n;
    n.op = OpKind::Sigmoid;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.value = tx;
    for (long i = 0; i < n.value.size(); ++i) {
        double v = tx.at(i);
        n.value.at(i) = v >= 0 ? 1.0 / (1.0 + std::exp(-v)) : std::exp(v) / (1.0 + std::exp(v));
    }
    return push(std::move(n));
}

Var Tape::tanh(Var x) {
    check_var(x, "tanh");
    const Tensor& tx = value(x);
    Node n;
    n.op = OpKind::Tanh;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.value = tx;
    for (long i = 0; i < n.value.size(); ++i) n.value.at(i) = std::tanh(tx.at(i));
    return push(std::move(n));
}

Var Tape::leaky_relu(Var x, double slope) {
    check_var(x, "leaky_relu");
    const Tensor& tx = value(x);
    Node n;
    n.op = OpKind::LeakyRelu;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.attr_a = slope;
    n.value = tx;
    for (long i = 0; i < n.value.size(); ++i) {
        double v = tx.at(i);
        n.value.at(i) = v >= 0 ? v : slope * v;
    }
    return push(std::move(n));
}

Var Tape::layer_norm(Var x, Var gain, Var bias, double eps) {
    check_var(x, "layer_norm");
    check_var(gain, "layer_norm");
    check_var(bias, "layer_norm");
    const Tensor& tx = value(x);
    const Tensor& tg = value(gain);
    const Tensor& tb = value(bias);
    if (tx.rank() != 1) shape_fail(OpKind::LayerNorm, tx, "input must be rank-1");
    if (!tx.same_shape(tg) || !tx.same_shape(tb)) shape_fail(OpKind::LayerNorm, tg, tb);
    long d = tx.dim(0);
    double mean = 0.0;
    for (long i = 0; i < d; ++i) mean += tx.at(i);
    mean /= static_cast<double>(d);
    double var = 0.0;
    for (long i = 0; i < d; ++i) {
        double c = tx.at(i) - mean;
        var += c * c;
    }
    var /= static_cast<double>(d);
    double inv = 1.0 / std::sqrt(var + eps);
    Node n;
    n.op = OpKind::LayerNorm;
    n.in = {x.id, gain.id, bias.id};
    n.n_in = 3;
    n.attr_a = eps;
    n.aux = Tensor::from_vector({mean, inv});
    n.value = tx;
    for (long i = 0; i < d; ++i) n.value.at(i) = (tx.at(i) - mean) * inv * tg.at(i) + tb.at(i);
    return push(std::move(n));
}

Var Tape::sum(Var x) {
    check_var(x, "sum");
    const Tensor& tx = value(x);
    double acc = 0.0;
    for (long i = 0; i < tx.size(); ++i) acc += tx.at(i);
    Node n;
    n.op = OpKind::Sum;
    n.in = {x.id, -1, -1};
    n.n_in = 1;
    n.value = Tensor::scalar(acc);
    return push(std::move(n));
}

Var Tape::mean(Var x) {
    const Tensor& tx = value(x);
    if (tx.size() == 0) throw ShapeError("op sum: mean of empty tensor");
    return affine(sum(x), 1.0 / static_cast<double>(tx.size()), 0.0);
}

Var Tape::bce_with_logits(Var logits, Tensor labels) {
    check_var(logits, "bce_with_logits");
    const Tensor& ts = value(logits);
    if (!ts.same_shape(labels)) shape_fail(OpKind::BceWithLogits, ts, labels);
    Node n;
    n.op = OpKind::BceWithLogits;
    n.in = {logits.id, -1, -1};
    n.n_in = 1;
    n.value = ts;
    for (long i = 0; i < ts.size(); ++i) {
        double s = ts.at(i);
        double y = labels.at(i);
        // max(s,0) - s*y + log(1 + exp(-|s|))
        n.value.at(i) = std::max(s, 0.0) - s * y + std::log1p(std::exp(-std::abs(s)));
    }
    n.aux = std::move(labels);
    return push(std::move(n));
}

Var Tape::linear(Var x, Var weight, Var bias) {
    return add(matmul(x, weight), bias);
}

Var Tape::gru_cell(Var x, Var h_prev, const GruCellVars& w) {
    Var z = sigmoid(add(add(matmul(x, w.wz), matmul(h_prev, w.uz)), w.bz));
    Var r = sigmoid(add(add(matmul(x, w.wr), matmul(h_prev, w.ur)), w.br));
    Var n = tanh(add(add(matmul(x, w.wn), mul(r, matmul(h_prev, w.un))), w.bn));
    return add(mul(affine(z, -1.0, 1.0), n), mul(z, h_prev));
}

Var Tape::feed_forward(Var x, Var w1, Var b1, Var w2, Var b2) {
    return linear(relu(linear(x, w1, b1)), w2, b2);
}

Tensor& Tape::grad_slot(int id, const std::vector<long>& dims) {
    Tensor& g = grads_[static_cast<std::size_t>(id)];
    if (g.empty()) g = Tensor::zeros(dims);
    return g;
}

const Tensor* Tape::grad(Var v) const {
    check_var(v, "grad");
    if (grads_.size() != nodes_.size()) return nullptr;
    const Tensor& g = grads_[static_cast<std::size_t>(v.id)];
    return g.empty() ? nullptr : &g;
}

void Tape::backward(Var loss) {
    check_var(loss, "backward");
    const Tensor& lt = value(loss);
    if (lt.size() != 1) {
        throw ShapeError("backward: loss must be scalar, got " + lt.shape_string());
    }
    grads_.assign(nodes_.size(), Tensor());
    grads_[static_cast<std::size_t>(loss.id)] = Tensor::scalar(1.0);
    for (int id = loss.id; id >= 0; --id) {
        if (grads_[static_cast<std::size_t>(id)].empty()) continue;
        if (!node(id).requires_grad) continue;
        backward_node(id);
    }
}

void Tape::backward_node(int id) {
    Node& n = node(id);
    const Tensor& dy = grads_[static_cast<std::size_t>(id)];
    auto in_val = [&](int slot) -> const Tensor& { return value_of(node(n.in[static_cast<std::size_t>(slot)])); };
    auto in_needs = [&](int slot) { return node(n.in[static_cast<std::size_t>(slot)]).requires_grad; };
    auto in_grad = [&](int slot) -> Tensor& {
        int in_id = n.in[static_cast<std::size_t>(slot)];
        return grad_slot(in_id, value_of(node(in_id)).dims());
    };

    switch (n.op) {
        case OpKind::Leaf:
            break;
        case OpKind::Add: {
            if (in_needs(0)) in_grad(0).add_scaled(dy, 1.0);
            if (in_needs(1)) in_grad(1).add_scaled(dy, 1.0);
            break;
        }
        case OpKind::Sub: {
            if (in_needs(0)) in_grad(0).add_scaled(dy, 1.0);
            if (in_needs(1)) in_grad(1).add_scaled(dy, -1.0);
            break;
        }
        case OpKind::Mul: {
            const Tensor& a = in_val(0);
            const Tensor& b = in_val(1);
            if (in_needs(0)) {
                Tensor& da = in_grad(0);
                for (long i = 0; i < dy.size(); ++i) da.at(i) += dy.at(i) * b.at(i);
            }
            if (in_needs(1)) {
                Tensor& db = in_grad(1);
                for (long i = 0; i < dy.size(); ++i) db.at(i) += dy.at(i) * a.at(i);
            }
            break;
        }
        case OpKind::AffineConst: {
            if (in_needs(0)) in_grad(0).add_scaled(dy, n.attr_a);
            break;
        }
        case OpKind::MatMul: {
            const Tensor& a = in_val(0);
            const Tensor& b = in_val(1);
            if (a.rank() == 1 && b.rank() == 2) {
                long k = a.dim(0), cols = b.dim(1);
                if (in_needs(0)) {
                    Tensor& da = in_grad(0);
                    for (long i = 0; i < k; ++i) {
                        const double* row = b.data() + i * cols;
                        double acc = 0.0;
                        for (long j = 0; j < cols; ++j) acc += row[j] * dy.at(j);
                        da.at(i) += acc;
                    }
                }
                if (in_needs(1)) {
                    Tensor& db = in_grad(1);
                    for (long i = 0; i < k; ++i) {
                        double av = a.at(i);
                        if (av == 0.0) continue;
                        double* row = db.data() + i * cols;
                        for (long j = 0; j < cols; ++j) row[j] += av * dy.at(j);
                    }
                }
            } else if (a.rank() == 2 && b.rank() == 1) {
                long rows = a.dim(0), k = a.dim(1);
                if (in_needs(0)) {
                    Tensor& da = in_grad(0);
                    for (long r = 0; r < rows; ++r) {
                        double dv = dy.at(r);
                        if (dv == 0.0) continue;
                        double* row = da.data() + r * k;
                        for (long i = 0; i < k; ++i) row[i] += dv * b.at(i);
                    }
                }
                if (in_needs(1)) {
                    Tensor& db = in_grad(1);
                    for (long r = 0; r < rows; ++r) {
                        double dv = dy.at(r);
                        if (dv == 0.0) continue;
                        const double* row = a.data() + r * k;
                        for (long i = 0; i < k; ++i) db.at(i) += dv * row[i];
                    }
                }
            } else {
                long rows = a.dim(0), k = a.dim(1), cols = b.dim(1);
                if (in_needs(0)) {
                    Tensor& da = in_grad(0);
                    for (long r = 0; r < rows; ++r) {
                        for (long i = 0; i < k; ++i) {
                            const double* brow = b.data() + i * cols;
                            const double* dyrow = dy.data() + r * cols;
                            double acc = 0.0;
                            for (long j = 0; j < cols; ++j) acc += brow[j] * dyrow[j];
                            da.at(r, i) += acc;
                        }
                    }
                }
                if (in_needs(1)) {
                    Tensor& db = in_grad(1);
                    for (long r = 0; r < rows; ++r) {
                        const double* dyrow = dy.data() + r * cols;
                        for (long i = 0; i < k; ++i) {
                            double av = a.at(r, i);
                            if (av == 0.0) continue;
                            double* brow = db.data() + i * cols;
                            for (long j = 0; j < cols; ++j) brow[j] += av * dyrow[j];
                        }
                    }
                }
            }
            break;
        }
        case OpKind::Dot: {
            const Tensor& a = in_val(0);
            const Tensor& b = in_val(1);
            double d = dy.at(0);
            if (in_needs(0)) in_grad(0).add_scaled(b, d);
            if (in_needs(1)) in_grad(1).add_scaled(a, d);
            break;
        }
        case OpKind::ScalarMul: {
            const Tensor& x = in_val(0);
            double s = in_val(1).at(0);
            if (in_needs(0)) in_grad(0).add_scaled(dy, s);
            if (in_needs(1)) {
                double acc = 0.0;
                for (long i = 0; i < x.size(); ++i) acc += x.at(i) * dy.at(i);
                in_grad(1).at(0) += acc;
            }
            break;
        }
        case OpKind::Concat: {
            long offset = 0;
            for (int in_id : n.in_list) {
                const Tensor& t = value_of(node(in_id));
                if (node(in_id).requires_grad) {
                    Tensor& g = grad_slot(in_id, t.dims());
                    for (long i = 0; i < t.size(); ++i) g.at(i) += dy.at(offset + i);
                }
                offset += t.size();
            }
            break;
        }
        case OpKind::SelectRow: {
            if (in_needs(0)) {
                Tensor& g = in_grad(0);
                long cols = g.dim(1);
                double* row = g.data() + static_cast<long>(n.attr_i) * cols;
                for (long i = 0; i < cols; ++i) row[i] += dy.at(i);
            }
            break;
        }
        case OpKind::Softmax: {
            if (!in_needs(0)) break;
            const Tensor& y = n.value;
            Tensor& dx = in_grad(0);
            auto line = [&](long count, long len, long line_stride, long elem_stride) {
                for (long l = 0; l < count; ++l) {
                    const double* yv = y.data() + l * line_stride;
                    const double* dv = dy.data() + l * line_stride;
                    double* gx = dx.data() + l * line_stride;
                    double s = 0.0;
                    for (long i = 0; i < len; ++i) s += yv[i * elem_stride] * dv[i * elem_stride];
                    for (long i = 0; i < len; ++i) {
                        gx[i * elem_stride] += yv[i * elem_stride] * (dv[i * elem_stride] - s);
                    }
                }
            };
            if (y.rank() == 1) {
                line(1, y.dim(0), 0, 1);
            } else if (n.attr_i == 1) {
                line(y.dim(0), y.dim(1), y.dim(1), 1);
            } else {
                for (long c = 0; c < y.dim(1); ++c) {
                    double s = 0.0;
                    for (long r = 0; r < y.dim(0); ++r) s += y.at(r, c) * dy.at(r, c);
                    for (long r = 0; r < y.dim(0); ++r) dx.at(r, c) += y.at(r, c) * (dy.at(r, c) - s);
                }
            }
            break;
        }
        case OpKind::LogSoftmax: {
            if (!in_needs(0)) break;
            const Tensor& y = n.value;
            Tensor& dx = in_grad(0);
            double s = 0.0;
            for (long i = 0; i < dy.size(); ++i) s += dy.at(i);
            for (long i = 0; i < dy.size(); ++i) dx.at(i) += dy.at(i) - std::exp(y.at(i)) * s;
            break;
        }
        case OpKind::Sigmoid: {
            if (!in_needs(0)) break;
            const Tensor& y = n.value;
            Tensor& dx = in_grad(0);
            for (long i = 0; i < dy.size(); ++i) dx.at(i) += dy.at(i) * y.at(i) * (1.0 - y.at(i));
            break;
        }
        case OpKind::Tanh: {
            if (!in_needs(0)) break;
            const Tensor& y = n.value;
            Tensor& dx = in_grad(0);
            for (long i = 0; i < dy.size(); ++i) dx.at(i) += dy.at(i) * (1.0 - y.at(i) * y.at(i));
            break;
        }
        case OpKind::LeakyRelu: {
            if (!in_needs(0)) break;
            const Tensor& x = in_val(0);
            Tensor& dx = in_grad(0);
            for (long i = 0; i < dy.size(); ++i) {
                dx.at(i) += dy.at(i) * (x.at(i) >= 0 ? 1.0 : n.attr_a);
            }
            break;
        }
        case OpKind::LayerNorm: {
            const Tensor& x = in_val(0);
            const Tensor& g = in_val(1);
            double mean = n.aux.at(0);
            double inv = n.aux.at(1);
            long d = x.dim(0);
            if (in_needs(2)) in_grad(2).add_scaled(dy, 1.0);
            if (in_needs(1)) {
                Tensor& dg = in_grad(1);
                for (long i = 0; i < d; ++i) dg.at(i) += dy.at(i) * (x.at(i) - mean) * inv;
            }
            if (in_needs(0)) {
                Tensor& dx = in_grad(0);
                double t_mean = 0.0, tx_mean = 0.0;
                for (long i = 0; i < d; ++i) {
                    double t = dy.at(i) * g.at(i);
                    double xh = (x.at(i) - mean) * inv;
                    t_mean += t;
                    tx_mean += t * xh;
                }
                t_mean /= static_cast<double>(d);
                tx_mean /= static_cast<double>(d);
                for (long i = 0; i < d; ++i) {
                    double t = dy.at(i) * g.at(i);
                    double xh = (x.at(i) - mean) * inv;
                    dx.at(i) += inv * (t - t_mean - xh * tx_mean);
                }
            }
            break;
        }
        case OpKind::Sum: {
            if (in_needs(0)) {
                Tensor& dx = in_grad(0);
                double d = dy.at(0);
                for (long i = 0; i < dx.size(); ++i) dx.at(i) += d;
            }
            break;
        }
        case OpKind::BceWithLogits: {
            if (!in_needs(0)) break;
            const Tensor& s = in_val(0);
            const Tensor& labels = n.aux;
            Tensor& dx = in_grad(0);
            for (long i = 0; i < dy.size(); ++i) {
                double sv = s.at(i);
                double sig = sv >= 0 ? 1.0 / (1.0 + std::exp(-sv)) : std::exp(sv) / (1.0 + std::exp(sv));
                dx.at(i) += dy.at(i) * (sig - labels.at(i));
            }
            break;
        }
    }
}

}  // namespace hlgt
