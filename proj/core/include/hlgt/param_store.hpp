#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hlgt/rng.hpp"
#include "hlgt/tape.hpp"
#include "hlgt/tensor.hpp"

namespace hlgt {

/// Named trainable tensors with stable iteration order; the unit every
/// optimizer step, gradient accumulator and checkpoint works over.
class ParamStore {
  public:
    /// Uniform +-1/sqrt(fan_in); fan_in defaults to dims[0].
    Tensor& create_uniform(const std::string& name, std::vector<long> dims, Rng& rng,
                           long fan_in = -1);
    Tensor& create_zeros(const std::string& name, std::vector<long> dims);
    Tensor& create_full(const std::string& name, std::vector<long> dims, double value);

    bool has(const std::string& name) const { return tensors_.contains(name); }
    Tensor& get(const std::string& name);
    const Tensor& get(const std::string& name) const;

    const std::vector<std::string>& names() const { return order_; }
    long total_size() const;

    void round_to(Precision p);

    std::unordered_map<std::string, Tensor*> pointer_map();

  private:
    Tensor& insert(const std::string& name, Tensor t);

    std::vector<std::string> order_;
    std::unordered_map<std::string, Tensor> tensors_;
};

/// Per-tape leaf handles for every parameter, plus gradient readback.
class ParamBindings {
  public:
    ParamBindings(Tape& tape, ParamStore& store);

    Var operator[](const std::string& name) const;
    const std::vector<std::pair<std::string, Var>>& entries() const { return entries_; }

    /// Adds this tape's parameter gradients into `accum` (creating zero tensors
    /// on first touch), scaled by `scale`.
    void accumulate_gradients(const Tape& tape,
                              std::unordered_map<std::string, Tensor>& accum,
                              double scale = 1.0) const;

  private:
    std::vector<std::pair<std::string, Var>> entries_;
    std::unordered_map<std::string, Var> by_name_;
    ParamStore* store_;
};

}  // namespace hlgt
