#include "hlgt/dataset.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "hlgt/number_extraction.hpp"

namespace hlgt {

using nlohmann::json;

namespace {

[[noreturn]] void record_fail(const std::string& id, const std::string& why) {
    throw DatasetError("record \"" + id + "\": " + why);
}

void check_span(const std::string& id, long begin, long end, long n_tokens) {
    if (begin < 0 || end > n_tokens || begin >= end) {
        record_fail(id, "span [" + std::to_string(begin) + "," + std::to_string(end) +
                            ") out of bounds for " + std::to_string(n_tokens) + " tokens");
    }
}

}  // namespace

Problem cook_problem(const RawProblem& raw, const ConstantTable& constants) {
    if (raw.tokens.empty()) record_fail(raw.id, "no tokens");
    if (raw.pos_tags.size() != raw.tokens.size()) {
        record_fail(raw.id, "pos list length " + std::to_string(raw.pos_tags.size()) +
                                " does not match " + std::to_string(raw.tokens.size()) + " tokens");
    }

    NumberExtraction ex = extract_numbers(raw.tokens);

    Problem p;
    p.id = raw.id;
    p.tokens = ex.masked_tokens;
    p.numbers = ex.numbers;
    p.equation = raw.equation;

    // pos tags follow the token rewrite; a split ratio token duplicates its tag
    p.pos_tags.reserve(p.tokens.size());
    for (std::size_t i = 0; i < raw.tokens.size(); ++i) {
        for (int k = 0; k < ex.width[i]; ++k) p.pos_tags.push_back(raw.pos_tags[i]);
    }

    long n_raw = static_cast<long>(raw.tokens.size());
    long n_masked = static_cast<long>(p.tokens.size());
    for (const auto& frame : raw.frames) {
        if (frame.root_index < 0 || frame.root_index >= n_raw) {
            record_fail(raw.id, "frame root " + std::to_string(frame.root_index) + " out of range");
        }
        SrlFrame cooked;
        cooked.root_index = ex.map_begin(frame.root_index);
        for (const auto& arg : frame.args) {
            check_span(raw.id, arg.begin, arg.end, n_raw);
            cooked.args.push_back({arg.label, ex.map_begin(arg.begin), ex.map_end(arg.end)});
        }
        p.frames.push_back(std::move(cooked));
    }

    for (const auto& u : raw.units) {
        if (u.num_index < 0 || static_cast<std::size_t>(u.num_index) >= p.numbers.size()) {
            record_fail(raw.id, "unit annotation references number " + std::to_string(u.num_index) +
                                    " but the problem has " + std::to_string(p.numbers.size()));
        }
        if (u.token_index < 0 || u.token_index >= n_raw) {
            record_fail(raw.id, "unit annotation token " + std::to_string(u.token_index) +
                                    " out of range");
        }
        p.units.push_back({u.num_index, ex.map_begin(u.token_index)});
    }

    for (std::size_t i = 1; i < p.numbers.size(); ++i) {
        if (p.numbers[i].token_index <= p.numbers[i - 1].token_index) {
            record_fail(raw.id, "number token indices are not strictly increasing");
        }
    }
    for (const auto& n : p.numbers) {
        if (n.token_index < 0 || n.token_index >= n_masked) {
            record_fail(raw.id, "number token index out of range");
        }
    }

    try {
        p.gold_tree = parse_equation(raw.equation, constants, static_cast<long>(p.numbers.size()));
    } catch (const std::exception& e) {
        record_fail(raw.id, e.what());
    }
    try {
        p.answer = Rational::parse(raw.answer);
    } catch (const std::exception& e) {
        record_fail(raw.id, std::string("answer: ") + e.what());
    }
    return p;
}

namespace {

RawProblem raw_from_json(const json& j) {
    RawProblem raw;
    for (const auto& [key, _] : j.items()) {
        if (key != "id" && key != "tokens" && key != "pos" && key != "srl" && key != "units" &&
            key != "equation" && key != "answer") {
            throw DatasetError("unknown field \"" + key + "\"");
        }
    }
    raw.id = j.at("id").get<std::string>();
    raw.tokens = j.at("tokens").get<std::vector<std::string>>();
    raw.pos_tags = j.at("pos").get<std::vector<std::string>>();
    for (const auto& jf : j.at("srl")) {
        SrlFrame frame;
        frame.root_index = jf.at("root").get<long>();
        for (const auto& ja : jf.at("args")) {
            SrlArg arg;
            arg.label = srl_label_from(ja.at("label").get<std::string>());
            auto span = ja.at("span");
            if (!span.is_array() || span.size() != 2) throw DatasetError("span must be [begin,end)");
            arg.begin = span[0].get<long>();
            arg.end = span[1].get<long>();
            frame.args.push_back(arg);
        }
        raw.frames.push_back(std::move(frame));
    }
    if (j.contains("units")) {
        for (const auto& ju : j.at("units")) {
            raw.units.push_back({ju.at("num_index").get<long>(), ju.at("token_index").get<long>()});
        }
    }
    raw.equation = j.at("equation").get<std::string>();
    raw.answer = j.at("answer").get<std::string>();
    return raw;
}

json raw_to_json(const RawProblem& raw) {
    json j;
    j["id"] = raw.id;
    j["tokens"] = raw.tokens;
    j["pos"] = raw.pos_tags;
    json frames = json::array();
    for (const auto& f : raw.frames) {
        json jf;
        jf["root"] = f.root_index;
        json args = json::array();
        for (const auto& a : f.args) {
            args.push_back({{"label", srl_label_name(a.label)}, {"span", {a.begin, a.end}}});
        }
        jf["args"] = args;
        frames.push_back(jf);
    }
    j["srl"] = frames;
    json units = json::array();
    for (const auto& u : raw.units) {
        units.push_back({{"num_index", u.num_index}, {"token_index", u.token_index}});
    }
    j["units"] = units;
    j["equation"] = raw.equation;
    j["answer"] = raw.answer;
    return j;
}

}  // namespace

std::string raw_to_json_line(const RawProblem& raw) {
    return raw_to_json(raw).dump();
}

RawProblem raw_from_json_line(const std::string& line) {
    json j = json::parse(line);
    return raw_from_json(j);
}

std::vector<Problem> load_dataset(const std::string& path, const ConstantTable& constants,
                                  bool strict, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset file: " + path);
    std::vector<Problem> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            RawProblem raw = raw_from_json_line(line);
            out.push_back(cook_problem(raw, constants));
        } catch (const std::exception& e) {
            std::string msg = path + ":" + std::to_string(line_no) + ": " + e.what();
            if (strict) throw DatasetError(msg);
            if (warnings) warnings->push_back(msg);
        }
    }
    if (out.empty() && warnings) warnings->push_back(path + ": no valid problems loaded");
    return out;
}

void write_dataset(const std::string& path, const std::vector<RawProblem>& problems) {
    std::ofstream out(path);
    if (!out) throw DatasetError("cannot open for writing: " + path);
    for (const auto& raw : problems) out << raw_to_json_line(raw) << "\n";
}

}  // namespace hlgt
