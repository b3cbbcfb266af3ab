#pragma once

#include <string>
#include <vector>

#include "hlgt/problem.hpp"

namespace hlgt {

/// Result of masking numeric literals in a token sequence. Ratios "a:b" split
/// into two adjacent NUM tokens, so the sequence can grow; the index maps let
/// callers rebase span annotations written against the original tokens.
struct NumberExtraction {
    std::vector<std::string> masked_tokens;
    std::vector<NumberInfo> numbers;
    std::vector<long> new_index;  // per original token: index of its first output token
    std::vector<int> width;       // per original token: 1, or 2 for a split ratio

    /// Rebase of a [begin, end) span over original tokens.
    long map_begin(long begin) const { return new_index[static_cast<std::size_t>(begin)]; }
    long map_end(long end) const {
        return new_index[static_cast<std::size_t>(end - 1)] + width[static_cast<std::size_t>(end - 1)];
    }
};

/// String-matching pass locating integers, decimals, fractions a/b (optionally
/// parenthesized), percentages a%, and ratios a:b. Each numeral becomes a NUM
/// token; everything else passes through untouched.
NumberExtraction extract_numbers(const std::vector<std::string>& tokens);

}  // namespace hlgt
