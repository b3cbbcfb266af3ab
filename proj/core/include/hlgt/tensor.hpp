#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hlgt {

/// Scalar precision for tensor payloads. Values are always held as doubles;
/// in f32 mode every op output and parameter update is rounded through float,
/// so the arithmetic behaves like single precision while tests keep one code path.
enum class Precision : std::uint8_t { f64 = 0, f32 = 1 };

/// Dense row-major tensor of rank 1 or 2. Scalars are rank-1 tensors of size 1.
class Tensor {
  public:
    Tensor() = default;

    static Tensor zeros(std::vector<long> dims);
    static Tensor full(std::vector<long> dims, double value);
    static Tensor scalar(double value);
    static Tensor from_vector(std::vector<double> values);
    static Tensor from_matrix(long rows, long cols, std::vector<double> values);

    long rank() const { return static_cast<long>(dims_.size()); }
    long dim(long i) const { return dims_[static_cast<std::size_t>(i)]; }
    long size() const { return static_cast<long>(data_.size()); }
    bool empty() const { return data_.empty(); }
    const std::vector<long>& dims() const { return dims_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double& at(long i) { return data_[static_cast<std::size_t>(i)]; }
    double at(long i) const { return data_[static_cast<std::size_t>(i)]; }
    double& at(long r, long c) { return data_[static_cast<std::size_t>(r * dims_[1] + c)]; }
    double at(long r, long c) const { return data_[static_cast<std::size_t>(r * dims_[1] + c)]; }

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }
    std::string shape_string() const;

    /// Rounds every element through float when precision is f32; no-op for f64.
    void round_to(Precision p);

    void fill(double value);
    void add_scaled(const Tensor& other, double scale);  // this += scale * other

    bool requires_grad = false;

  private:
    Tensor(std::vector<long> dims, std::vector<double> data)
        : dims_(std::move(dims)), data_(std::move(data)) {}

    std::vector<long> dims_;
    std::vector<double> data_;
};

std::string shape_string(const std::vector<long>& dims);

}  // namespace hlgt
