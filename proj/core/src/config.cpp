#include "hlgt/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hlgt {

using nlohmann::json;

void TrainConfig::validate() const {
    auto positive = [](long v, const char* name) {
        if (v <= 0) throw ConfigError(std::string(name) + " must be positive");
    };
    positive(hidden_size, "hidden_size");
    positive(heads, "heads");
    if (layers < 0) throw ConfigError("layers must be >= 0");
    positive(batch_size, "batch_size");
    positive(epochs, "epochs");
    positive(halve_lr_every, "halve_lr_every");
    positive(beam, "beam");
    positive(max_decode_len, "max_decode_len");
    if (learning_rate <= 0) throw ConfigError("learning_rate must be positive");
    if (comparison_weight < 0) throw ConfigError("comparison_weight must be >= 0");
    if (grad_clip_norm <= 0) throw ConfigError("grad_clip_norm must be positive");
    if (hidden_size % heads != 0) {
        throw ConfigError("heads (" + std::to_string(heads) + ") must divide hidden_size (" +
                          std::to_string(hidden_size) + ")");
    }
    if (hidden_size % 2 != 0) throw ConfigError("hidden_size must be even");
}

double TrainConfig::lr_at_epoch(long epoch) const {
    long halvings = epoch / halve_lr_every;
    return learning_rate * std::pow(0.5, static_cast<double>(halvings));
}

namespace {

const char* precision_name(Precision p) {
    return p == Precision::f64 ? "f64" : "f32";
}

Precision precision_from(const std::string& s) {
    if (s == "f64") return Precision::f64;
    if (s == "f32") return Precision::f32;
    throw ConfigError("precision must be \"f32\" or \"f64\", got \"" + s + "\"");
}

}  // namespace

TrainConfig parse_train_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "hidden_size",    "heads",           "layers",          "batch_size",
        "epochs",         "learning_rate",   "halve_lr_every",  "comparison_weight",
        "beam",           "max_decode_len",  "grad_clip_norm",  "allow_pow_operator",
        "ablation",       "seed",            "precision"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) throw ConfigError("unknown config key \"" + key + "\"");
    }

    TrainConfig c;
    auto get_long = [&](const char* key, long& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) throw ConfigError(std::string(key) + " must be an integer");
        out = j[key].get<long>();
    };
    auto get_double = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number()) throw ConfigError(std::string(key) + " must be a number");
        out = j[key].get<double>();
    };
    get_long("hidden_size", c.hidden_size);
    get_long("heads", c.heads);
    get_long("layers", c.layers);
    get_long("batch_size", c.batch_size);
    get_long("epochs", c.epochs);
    get_double("learning_rate", c.learning_rate);
    get_long("halve_lr_every", c.halve_lr_every);
    get_double("comparison_weight", c.comparison_weight);
    get_long("beam", c.beam);
    get_long("max_decode_len", c.max_decode_len);
    get_double("grad_clip_norm", c.grad_clip_norm);
    if (j.contains("allow_pow_operator")) {
        if (!j["allow_pow_operator"].is_boolean()) {
            throw ConfigError("allow_pow_operator must be a boolean");
        }
        c.allow_pow_operator = j["allow_pow_operator"].get<bool>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) throw ConfigError("seed must be an integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("precision")) {
        if (!j["precision"].is_string()) throw ConfigError("precision must be a string");
        c.precision = precision_from(j["precision"].get<std::string>());
    }
    if (j.contains("ablation")) {
        const auto& ja = j["ablation"];
        if (!ja.is_object()) throw ConfigError("ablation must be an object");
        static const std::set<std::string> ablation_keys = {"node_type", "line_graph", "auxiliary"};
        for (const auto& [key, val] : ja.items()) {
            if (!ablation_keys.contains(key)) {
                throw ConfigError("unknown ablation key \"" + key + "\"");
            }
            if (!val.is_boolean()) throw ConfigError("ablation." + key + " must be a boolean");
        }
        if (ja.contains("node_type")) c.ablation.node_type_off = ja["node_type"].get<bool>();
        if (ja.contains("line_graph")) c.ablation.line_graph_off = ja["line_graph"].get<bool>();
        if (ja.contains("auxiliary")) c.ablation.auxiliary_off = ja["auxiliary"].get<bool>();
    }
    c.validate();
    return c;
}

TrainConfig load_train_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_train_config(buf.str());
}

std::string train_config_to_json(const TrainConfig& c) {
    json j;
    j["hidden_size"] = c.hidden_size;
    j["heads"] = c.heads;
    j["layers"] = c.layers;
    j["batch_size"] = c.batch_size;
    j["epochs"] = c.epochs;
    j["learning_rate"] = c.learning_rate;
    j["halve_lr_every"] = c.halve_lr_every;
    j["comparison_weight"] = c.comparison_weight;
    j["beam"] = c.beam;
    j["max_decode_len"] = c.max_decode_len;
    j["grad_clip_norm"] = c.grad_clip_norm;
    j["allow_pow_operator"] = c.allow_pow_operator;
    j["ablation"] = {{"node_type", c.ablation.node_type_off},
                     {"line_graph", c.ablation.line_graph_off},
                     {"auxiliary", c.ablation.auxiliary_off}};
    j["seed"] = c.seed;
    j["precision"] = precision_name(c.precision);
    return j.dump(2);
}

}  // namespace hlgt
