#pragma once

#include <string>
#include <unordered_map>

#include "hlgt/tensor.hpp"

namespace hlgt {

/// Adam with bias correction. Moments are kept per named parameter and created
/// lazily with the parameter's shape on first update.
class AdamOptimizer {
  public:
    struct Hyper {
        double lr = 1e-3;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double epsilon = 1e-8;
    };

    explicit AdamOptimizer(Hyper hyper = {}) : hyper_(hyper) {}

    Hyper& hyper() { return hyper_; }
    const Hyper& hyper() const { return hyper_; }

    long step_count() const { return step_; }
    void set_step_count(long s) { step_ = s; }

    /// One update over a set of (name, param, grad) triples. All parameters move
    /// with the same bias-corrected step counter; NaN/Inf gradients abort with the
    /// parameter's name. Updated params are rounded to `precision`.
    void step(const std::unordered_map<std::string, Tensor*>& params,
              const std::unordered_map<std::string, Tensor>& grads, Precision precision);

    Tensor* moment1(const std::string& name);
    Tensor* moment2(const std::string& name);
    void restore_moments(const std::string& name, Tensor m1, Tensor m2);

  private:
    Hyper hyper_;
    long step_ = 0;
    std::unordered_map<std::string, Tensor> m_;
    std::unordered_map<std::string, Tensor> v_;
};

}  // namespace hlgt
