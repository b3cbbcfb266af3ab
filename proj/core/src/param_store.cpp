#include "hlgt/param_store.hpp"

#include <cmath>
#include <stdexcept>

namespace hlgt {

Tensor& ParamStore::insert(const std::string& name, Tensor t) {
    if (tensors_.contains(name)) throw std::logic_error("duplicate parameter: " + name);
    order_.push_back(name);
    t.requires_grad = true;
    auto [it, _] = tensors_.emplace(name, std::move(t));
    return it->second;
}

Tensor& ParamStore::create_uniform(const std::string& name, std::vector<long> dims, Rng& rng,
                                   long fan_in) {
    if (fan_in <= 0) fan_in = dims[0];
    double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    Tensor t = Tensor::zeros(std::move(dims));
    for (long i = 0; i < t.size(); ++i) t.at(i) = rng.next_real(-bound, bound);
    return insert(name, std::move(t));
}

Tensor& ParamStore::create_zeros(const std::string& name, std::vector<long> dims) {
    return insert(name, Tensor::zeros(std::move(dims)));
}

Tensor& ParamStore::create_full(const std::string& name, std::vector<long> dims, double value) {
    return insert(name, Tensor::full(std::move(dims), value));
}

Tensor& ParamStore::get(const std::string& name) {
    auto it = tensors_.find(name);
    if (it == tensors_.end()) throw std::out_of_range("no parameter named " + name);
    return it->second;
}

const Tensor& ParamStore::get(const std::string& name) const {
    auto it = tensors_.find(name);
    if (it == tensors_.end()) throw std::out_of_range("no parameter named " + name);
    return it->second;
}

long ParamStore::total_size() const {
    long n = 0;
    for (const auto& name : order_) n += get(name).size();
    return n;
}

void ParamStore::round_to(Precision p) {
    if (p == Precision::f64) return;
    for (const auto& name : order_) get(name).round_to(p);
}

std::unordered_map<std::string, Tensor*> ParamStore::pointer_map() {
    std::unordered_map<std::string, Tensor*> out;
    for (const auto& name : order_) out.emplace(name, &get(name));
    return out;
}

ParamBindings::ParamBindings(Tape& tape, ParamStore& store) : store_(&store) {
    entries_.reserve(store.names().size());
    for (const auto& name : store.names()) {
        Var v = tape.param(&store.get(name));
        entries_.emplace_back(name, v);
        by_name_.emplace(name, v);
    }
}

Var ParamBindings::operator[](const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("no bound parameter named " + name);
    return it->second;
}

void ParamBindings::accumulate_gradients(const Tape& tape,
                                         std::unordered_map<std::string, Tensor>& accum,
                                         double scale) const {
    for (const auto& [name, var] : entries_) {
        const Tensor* g = tape.grad(var);
        if (g == nullptr) continue;
        auto it = accum.find(name);
        if (it == accum.end()) {
            it = accum.emplace(name, Tensor::zeros(g->dims())).first;
        }
        it->second.add_scaled(*g, scale);
    }
}

}  // namespace hlgt
