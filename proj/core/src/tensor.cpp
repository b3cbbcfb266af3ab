#include "hlgt/tensor.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlgt {

namespace {
long checked_size(const std::vector<long>& dims) {
    if (dims.empty() || dims.size() > 2) {
        throw std::invalid_argument("tensor rank must be 1 or 2, got rank " +
                                    std::to_string(dims.size()));
    }
    long total = 1;
    for (long d : dims) {
        if (d < 0) throw std::invalid_argument("negative tensor dimension");
        total *= d;
    }
    return total;
}
}  // namespace

Tensor Tensor::zeros(std::vector<long> dims) {
    long n = checked_size(dims);
    return Tensor(std::move(dims), std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

Tensor Tensor::full(std::vector<long> dims, double value) {
    long n = checked_size(dims);
    return Tensor(std::move(dims), std::vector<double>(static_cast<std::size_t>(n), value));
}

Tensor Tensor::scalar(double value) {
    return Tensor({1}, {value});
}

Tensor Tensor::from_vector(std::vector<double> values) {
    long n = static_cast<long>(values.size());
    return Tensor({n}, std::move(values));
}

Tensor Tensor::from_matrix(long rows, long cols, std::vector<double> values) {
    if (static_cast<long>(values.size()) != rows * cols) {
        throw std::invalid_argument("matrix data length " + std::to_string(values.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    return Tensor({rows, cols}, std::move(values));
}

std::string shape_string(const std::vector<long>& dims) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    os << "]";
    return os.str();
}

std::string Tensor::shape_string() const {
    return hlgt::shape_string(dims_);
}

void Tensor::round_to(Precision p) {
    if (p == Precision::f64) return;
    for (double& v : data_) v = static_cast<double>(static_cast<float>(v));
}

void Tensor::fill(double value) {
    for (double& v : data_) v = value;
}

void Tensor::add_scaled(const Tensor& other, double scale) {
    if (!same_shape(other)) {
        throw std::invalid_argument("add_scaled shape mismatch: " + shape_string() + " vs " +
                                    other.shape_string());
    }
    const double* src = other.data();
    double* dst = data();
    for (long i = 0; i < size(); ++i) dst[i] += scale * src[i];
}

}  // namespace hlgt
