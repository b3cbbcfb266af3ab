#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hlgt/tensor.hpp"

namespace hlgt {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural ablation switches: shared projections instead of node-type
/// specific ones, frozen static edge embeddings instead of the line-graph
/// update, and a zeroed auxiliary loss weight.
struct AblationFlags {
    bool node_type_off = false;
    bool line_graph_off = false;
    bool auxiliary_off = false;
};

struct TrainConfig {
    long hidden_size = 512;
    long heads = 4;
    long layers = 2;
    long batch_size = 64;
    long epochs = 80;
    double learning_rate = 1e-3;
    long halve_lr_every = 20;  // epochs; dataset-profile dependent
    double comparison_weight = 0.1;
    long beam = 5;
    long max_decode_len = 30;
    double grad_clip_norm = 5.0;
    bool allow_pow_operator = true;
    AblationFlags ablation;
    std::uint64_t seed = 1;
    Precision precision = Precision::f64;

    void validate() const;

    /// Learning rate at a 0-based epoch index under the halving schedule.
    double lr_at_epoch(long epoch) const;
};

/// Strict JSON parse: unknown keys are errors, values are type- and
/// range-checked, missing keys fall back to the defaults above.
TrainConfig parse_train_config(const std::string& json_text);
TrainConfig load_train_config(const std::string& path);
std::string train_config_to_json(const TrainConfig& config);

}  // namespace hlgt
