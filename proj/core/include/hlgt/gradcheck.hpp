#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hlgt/tensor.hpp"

namespace hlgt {

/// Central finite differences of a deterministic scalar function, one coordinate
/// at a time: (f(x + eps*e_i) - f(x - eps*e_i)) / (2*eps). Always runs in f64.
Tensor finite_difference_gradient(const std::function<double(const Tensor&)>& f, const Tensor& x,
                                  double eps = 1e-4);

struct GradCheckResult {
    std::string name;
    double max_rel_error = 0.0;
    long coords_checked = 0;
    long coords_skipped = 0;  // |analytic| and |numeric| both under the floor
};

/// Compares an analytic gradient against finite differences coordinate-wise.
/// Coordinates where both gradients are below `grad_floor` are skipped; the rest
/// use |a - n| / max(|n|, rel_floor).
GradCheckResult compare_gradients(const std::string& name, const Tensor& analytic,
                                  const Tensor& numeric, double grad_floor = 1e-6,
                                  double rel_floor = 1e-6);

}  // namespace hlgt
