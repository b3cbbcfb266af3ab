#pragma once

#include <string>
#include <vector>

#include "hlgt/problem.hpp"

namespace hlgt {

class DatasetError : public std::runtime_error {
  public:
    explicit DatasetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A dataset record as stored on disk: tokens still contain the numeral strings
/// and all annotations index the unmasked sequence.
struct RawProblem {
    std::string id;
    std::vector<std::string> tokens;
    std::vector<std::string> pos_tags;
    std::vector<SrlFrame> frames;
    std::vector<UnitAnnotation> units;  // token_index over raw tokens
    std::string equation;
    std::string answer;
};

/// Masks numerals, rebases annotations onto the masked sequence, parses the
/// equation and answer, and checks every schema invariant.
Problem cook_problem(const RawProblem& raw, const ConstantTable& constants);

/// Loads a JSONL dataset. In strict mode the first invalid record throws a
/// DatasetError naming the line; otherwise invalid records are skipped and a
/// warning per record is appended to `warnings`.
std::vector<Problem> load_dataset(const std::string& path, const ConstantTable& constants,
                                  bool strict = true,
                                  std::vector<std::string>* warnings = nullptr);

void write_dataset(const std::string& path, const std::vector<RawProblem>& problems);

std::string raw_to_json_line(const RawProblem& raw);
RawProblem raw_from_json_line(const std::string& line);

}  // namespace hlgt
