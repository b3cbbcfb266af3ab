#include "hlgt/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace hlgt {

void AdamOptimizer::step(const std::unordered_map<std::string, Tensor*>& params,
                         const std::unordered_map<std::string, Tensor>& grads,
                         Precision precision) {
    ++step_;
    double bc1 = 1.0 - std::pow(hyper_.beta1, static_cast<double>(step_));
    double bc2 = 1.0 - std::pow(hyper_.beta2, static_cast<double>(step_));
    for (const auto& [name, param] : params) {
        auto git = grads.find(name);
        if (git == grads.end()) continue;
        const Tensor& g = git->second;
        if (!g.same_shape(*param)) {
            throw std::invalid_argument("adam: gradient shape " + g.shape_string() +
                                        " does not match parameter " + name + " " +
                                        param->shape_string());
        }
        for (long i = 0; i < g.size(); ++i) {
            if (!std::isfinite(g.at(i))) {
                throw std::runtime_error("adam: non-finite gradient for parameter " + name);
            }
        }
        Tensor& m = m_.try_emplace(name, Tensor::zeros(param->dims())).first->second;
        Tensor& v = v_.try_emplace(name, Tensor::zeros(param->dims())).first->second;
        for (long i = 0; i < g.size(); ++i) {
            double gi = g.at(i);
            m.at(i) = hyper_.beta1 * m.at(i) + (1.0 - hyper_.beta1) * gi;
            v.at(i) = hyper_.beta2 * v.at(i) + (1.0 - hyper_.beta2) * gi * gi;
            double m_hat = m.at(i) / bc1;
            double v_hat = v.at(i) / bc2;
            param->at(i) -= hyper_.lr * m_hat / (std::sqrt(v_hat) + hyper_.epsilon);
        }
        param->round_to(precision);
    }
}

Tensor* AdamOptimizer::moment1(const std::string& name) {
    auto it = m_.find(name);
    return it == m_.end() ? nullptr : &it->second;
}

Tensor* AdamOptimizer::moment2(const std::string& name) {
    auto it = v_.find(name);
    return it == v_.end() ? nullptr : &it->second;
}

void AdamOptimizer::restore_moments(const std::string& name, Tensor m1, Tensor m2) {
    m_[name] = std::move(m1);
    v_[name] = std::move(m2);
}

}  // namespace hlgt
