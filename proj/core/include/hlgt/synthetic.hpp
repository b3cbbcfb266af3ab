#pragma once

#include <cstdint>
#include <vector>

#include "hlgt/dataset.hpp"

namespace hlgt {

/// Deterministic templated corpus: transfer, pricing, fraction-of, discount,
/// interest and comparison problems with programmatically correct PoS tags,
/// SRL frames, unit annotations, equations and answers. Templates rotate
/// round-robin so any corpus of >= 6 problems touches every node and edge type.
std::vector<RawProblem> generate_synthetic(std::uint64_t seed, long count);

struct SyntheticSplit {
    std::vector<RawProblem> train;
    std::vector<RawProblem> test;
};

/// Train/test instances drawn from the same templates with no duplicated
/// token sequence across the two sides.
SyntheticSplit generate_synthetic_split(std::uint64_t seed, long train_count, long test_count);

}  // namespace hlgt
