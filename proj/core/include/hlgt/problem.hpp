#pragma once

#include <string>
#include <vector>

#include "hlgt/expression.hpp"
#include "hlgt/rational.hpp"

namespace hlgt {

inline constexpr const char* kNumToken = "NUM";

enum class NumberSubtype : std::uint8_t { Fraction, Percentage, Other };

const char* subtype_name(NumberSubtype t);

struct NumberInfo {
    long token_index = 0;  // position in the masked token sequence
    std::string literal;
    Rational value;
    NumberSubtype subtype = NumberSubtype::Other;
};

enum class SrlLabel : std::uint8_t { Arg0, Arg1, ArgM };

const char* srl_label_name(SrlLabel l);
SrlLabel srl_label_from(const std::string& s);

struct SrlArg {
    SrlLabel label = SrlLabel::Arg0;
    long begin = 0;  // token span [begin, end)
    long end = 0;
};

struct SrlFrame {
    long root_index = 0;
    std::vector<SrlArg> args;
};

struct UnitAnnotation {
    long num_index = 0;    // index into the numbers list
    long token_index = 0;  // the unit/rate word
};

/// A fully validated, NUM-masked problem ready for graph construction and training.
struct Problem {
    std::string id;
    std::vector<std::string> tokens;  // numerals replaced by NUM
    std::vector<std::string> pos_tags;
    std::vector<SrlFrame> frames;
    std::vector<NumberInfo> numbers;
    std::vector<UnitAnnotation> units;
    std::string equation;  // infix over N-slots
    Rational answer;
    ExpressionTree gold_tree;

    std::vector<Rational> number_values() const;
};

}  // namespace hlgt
