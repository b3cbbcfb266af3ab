#include "hlgt/gradcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace hlgt {

Tensor finite_difference_gradient(const std::function<double(const Tensor&)>& f, const Tensor& x,
                                  double eps) {
    if (eps <= 0) throw std::invalid_argument("finite_difference_gradient: eps must be positive");
    Tensor grad = Tensor::zeros(x.dims());
    Tensor probe = x;
    for (long i = 0; i < x.size(); ++i) {
        double orig = probe.at(i);
        probe.at(i) = orig + eps;
        double up = f(probe);
        probe.at(i) = orig - eps;
        double down = f(probe);
        probe.at(i) = orig;
        grad.at(i) = (up - down) / (2.0 * eps);
    }
    return grad;
}

GradCheckResult compare_gradients(const std::string& name, const Tensor& analytic,
                                  const Tensor& numeric, double grad_floor, double rel_floor) {
    if (!analytic.same_shape(numeric)) {
        throw std::invalid_argument("compare_gradients: shape mismatch for " + name);
    }
    GradCheckResult r;
    r.name = name;
    for (long i = 0; i < analytic.size(); ++i) {
        double a = analytic.at(i);
        double n = numeric.at(i);
        if (std::abs(a) <= grad_floor && std::abs(n) <= grad_floor) {
            ++r.coords_skipped;
            continue;
        }
        double rel = std::abs(a - n) / std::max(std::abs(n), rel_floor);
        if (rel > r.max_rel_error) r.max_rel_error = rel;
        ++r.coords_checked;
    }
    return r;
}

}  // namespace hlgt
