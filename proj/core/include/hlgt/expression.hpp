#pragma once

#include <span>
#include <string>
#include <vector>

#include "hlgt/rational.hpp"

namespace hlgt {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class BinOp : std::uint8_t { Add, Sub, Mul, Div, Pow };

const char* op_symbol(BinOp op);

/// Ordered table of constant literals usable in equations. Defaults to 1, 100, 3.14.
class ConstantTable {
  public:
    ConstantTable();  // default constants
    explicit ConstantTable(std::vector<std::string> literals);

    long size() const { return static_cast<long>(literals_.size()); }
    const std::string& literal(long i) const { return literals_[static_cast<std::size_t>(i)]; }
    const Rational& value(long i) const { return values_[static_cast<std::size_t>(i)]; }
    /// Index of the constant with this exact value, or -1.
    long index_of(const Rational& v) const;

  private:
    std::vector<std::string> literals_;
    std::vector<Rational> values_;
};

/// One prefix-order node: a binary operator, a constant-table index, or a
/// number-slot index (N0..Nk in the statement order).
struct ExprNode {
    enum class Kind : std::uint8_t { Op, Constant, Slot };
    Kind kind = Kind::Slot;
    BinOp op = BinOp::Add;
    long index = 0;

    bool operator==(const ExprNode&) const = default;

    static ExprNode make_op(BinOp o) { return {Kind::Op, o, 0}; }
    static ExprNode make_constant(long i) { return {Kind::Constant, BinOp::Add, i}; }
    static ExprNode make_slot(long i) { return {Kind::Slot, BinOp::Add, i}; }
};

struct ExpressionTree {
    std::vector<ExprNode> prefix;

    bool operator==(const ExpressionTree&) const = default;
    long leaf_count() const;
};

/// True iff the prefix sequence forms exactly one complete binary tree.
bool is_complete_prefix(std::span<const ExprNode> prefix);

/// Parses an infix equation over N-slots, constant literals and + - * / ^ with
/// parentheses (accepts the multiplication sign and the typographic minus as
/// aliases). Standard precedence, ^ right-associative.
ExpressionTree parse_equation(const std::string& infix, const ConstantTable& constants,
                              long num_count);

/// Prints with the minimal parentheses that re-parse to the identical tree.
std::string to_infix(const ExpressionTree& tree, const ConstantTable& constants);

/// Exact evaluation; slots index into `numbers`.
Rational evaluate_tree(const ExpressionTree& tree, std::span<const Rational> numbers,
                       const ConstantTable& constants);

}  // namespace hlgt
