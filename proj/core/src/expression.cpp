#include "hlgt/expression.hpp"

#include <cctype>

namespace hlgt {

const char* op_symbol(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Pow: return "^";
    }
    return "?";
}

ConstantTable::ConstantTable() : ConstantTable({"1", "100", "3.14"}) {}

ConstantTable::ConstantTable(std::vector<std::string> literals) : literals_(std::move(literals)) {
    values_.reserve(literals_.size());
    for (const auto& lit : literals_) {
        Rational v = Rational::parse(lit);
        if (index_of(v) != -1) throw ParseError("duplicate constant value: " + lit);
        values_.push_back(v);
    }
}

long ConstantTable::index_of(const Rational& v) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == v) return static_cast<long>(i);
    }
    return -1;
}

long ExpressionTree::leaf_count() const {
    long leaves = 0;
    for (const auto& n : prefix) {
        if (n.kind != ExprNode::Kind::Op) ++leaves;
    }
    return leaves;
}

bool is_complete_prefix(std::span<const ExprNode> prefix) {
    // walking prefix order, `needed` slots remain to fill; exactly one tree iff
    // needed hits 0 precisely at the end
    long needed = 1;
    for (const auto& n : prefix) {
        if (needed <= 0) return false;
        needed += (n.kind == ExprNode::Kind::Op) ? 1 : -1;
    }
    return needed == 0;
}

namespace {

struct Token {
    enum class Kind { Slot, Literal, Op, LParen, RParen };
    Kind kind;
    BinOp op = BinOp::Add;
    long slot = 0;
    std::string literal;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("equation \"" + s + "\": " + why + " at offset " + std::to_string(i));
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') {
            out.push_back({Token::Kind::LParen});
            ++i;
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen});
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Kind::Op, BinOp::Add});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Kind::Op, BinOp::Sub});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Kind::Op, BinOp::Mul});
            ++i;
        } else if (c == '/') {
            out.push_back({Token::Kind::Op, BinOp::Div});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Kind::Op, BinOp::Pow});
            ++i;
        } else if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < s.size() &&
                   static_cast<unsigned char>(s[i + 1]) == 0x97) {
            out.push_back({Token::Kind::Op, BinOp::Mul});  // UTF-8 multiplication sign
            i += 2;
        } else if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
                   static_cast<unsigned char>(s[i + 1]) == 0x88 &&
                   static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back({Token::Kind::Op, BinOp::Sub});  // UTF-8 minus sign
            i += 3;
        } else if (c == 'N') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) fail("bare N without slot index");
            Token t{Token::Kind::Slot};
            t.slot = std::stol(s.substr(i + 1, j - i - 1));
            out.push_back(t);
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) {
                ++j;
            }
            Token t{Token::Kind::Literal};
            t.literal = s.substr(i, j - i);
            out.push_back(t);
            i = j;
        } else {
            fail(std::string("unknown token '") + c + "'");
        }
    }
    return out;
}

class Parser {
  public:
    Parser(const std::string& text, std::vector<Token> tokens, const ConstantTable& constants,
           long num_count)
        : text_(text), tokens_(std::move(tokens)), constants_(constants), num_count_(num_count) {}

    ExpressionTree parse() {
        if (tokens_.empty()) throw ParseError("empty equation");
        ExpressionTree tree;
        parse_expr(tree.prefix);
        if (pos_ != tokens_.size()) fail("trailing tokens");
        return tree;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("equation \"" + text_ + "\": " + why);
    }

    const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
    const Token& next() {
        if (pos_ >= tokens_.size()) fail("unexpected end of input");
        return tokens_[pos_++];
    }

    // expr := term (('+'|'-') term)*
    void parse_expr(std::vector<ExprNode>& out) {
        std::vector<ExprNode> lhs;
        parse_term(lhs);
        while (peek() && peek()->kind == Token::Kind::Op &&
               (peek()->op == BinOp::Add || peek()->op == BinOp::Sub)) {
            BinOp op = next().op;
            std::vector<ExprNode> rhs;
            parse_term(rhs);
            prepend_op(lhs, op, rhs);
        }
        out.insert(out.end(), lhs.begin(), lhs.end());
    }

    // term := power (('*'|'/') power)*
    void parse_term(std::vector<ExprNode>& out) {
        std::vector<ExprNode> lhs;
        parse_power(lhs);
        while (peek() && peek()->kind == Token::Kind::Op &&
               (peek()->op == BinOp::Mul || peek()->op == BinOp::Div)) {
            BinOp op = next().op;
            std::vector<ExprNode> rhs;
            parse_power(rhs);
            prepend_op(lhs, op, rhs);
        }
        out.insert(out.end(), lhs.begin(), lhs.end());
    }

    // power := atom ('^' power)?   (right associative)
    void parse_power(std::vector<ExprNode>& out) {
        std::vector<ExprNode> lhs;
        parse_atom(lhs);
        if (peek() && peek()->kind == Token::Kind::Op && peek()->op == BinOp::Pow) {
            next();
            std::vector<ExprNode> rhs;
            parse_power(rhs);
            prepend_op(lhs, BinOp::Pow, rhs);
        }
        out.insert(out.end(), lhs.begin(), lhs.end());
    }

    void parse_atom(std::vector<ExprNode>& out) {
        const Token& t = next();
        switch (t.kind) {
            case Token::Kind::LParen: {
                parse_expr(out);
                const Token& close = next();
                if (close.kind != Token::Kind::RParen) fail("expected closing parenthesis");
                break;
            }
            case Token::Kind::Slot: {
                if (t.slot >= num_count_) {
                    fail("slot N" + std::to_string(t.slot) + " out of range: problem has " +
                         std::to_string(num_count_) + " numbers");
                }
                out.push_back(ExprNode::make_slot(t.slot));
                break;
            }
            case Token::Kind::Literal: {
                Rational v = Rational::parse(t.literal);
                long idx = constants_.index_of(v);
                if (idx < 0) fail("literal " + t.literal + " is not in the constant table");
                out.push_back(ExprNode::make_constant(idx));
                break;
            }
            case Token::Kind::RParen:
                fail("unbalanced closing parenthesis");
            case Token::Kind::Op:
                fail(std::string("operator '") + op_symbol(t.op) + "' where an operand was expected");
        }
    }

    static void prepend_op(std::vector<ExprNode>& lhs, BinOp op, const std::vector<ExprNode>& rhs) {
        lhs.insert(lhs.begin(), ExprNode::make_op(op));
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    }

    const std::string& text_;
    std::vector<Token> tokens_;
    const ConstantTable& constants_;
    long num_count_;
    std::size_t pos_ = 0;
};

int precedence(BinOp op) {
    switch (op) {
        case BinOp::Add:
        case BinOp::Sub: return 1;
        case BinOp::Mul:
        case BinOp::Div: return 2;
        case BinOp::Pow: return 3;
    }
    return 0;
}

struct Printer {
    const ExpressionTree& tree;
    const ConstantTable& constants;
    std::size_t pos = 0;

    // returns (text, precedence of the node; leaves get a high precedence)
    std::pair<std::string, int> walk() {
        const ExprNode& n = tree.prefix[pos++];
        switch (n.kind) {
            case ExprNode::Kind::Slot:
                return {"N" + std::to_string(n.index), 9};
            case ExprNode::Kind::Constant:
                return {constants.literal(n.index), 9};
            case ExprNode::Kind::Op: {
                int prec = precedence(n.op);
                bool right_assoc = n.op == BinOp::Pow;
                auto [lhs, lp] = walk();
                auto [rhs, rp] = walk();
                // parenthesize exactly when re-parsing would regroup
                if (lp < prec || (lp == prec && right_assoc)) lhs = "(" + lhs + ")";
                if (rp < prec || (rp == prec && !right_assoc)) rhs = "(" + rhs + ")";
                return {lhs + op_symbol(n.op) + rhs, prec};
            }
        }
        return {"", 0};
    }
};

struct Evaluator {
    const ExpressionTree& tree;
    std::span<const Rational> numbers;
    const ConstantTable& constants;
    std::size_t pos = 0;

    Rational walk() {
        if (pos >= tree.prefix.size()) throw EvalError("truncated expression tree");
        const ExprNode& n = tree.prefix[pos++];
        switch (n.kind) {
            case ExprNode::Kind::Slot: {
                if (n.index < 0 || static_cast<std::size_t>(n.index) >= numbers.size()) {
                    throw EvalError("unbound number slot N" + std::to_string(n.index));
                }
                return numbers[static_cast<std::size_t>(n.index)];
            }
            case ExprNode::Kind::Constant: {
                if (n.index < 0 || n.index >= constants.size()) {
                    throw EvalError("constant index " + std::to_string(n.index) + " out of table");
                }
                return constants.value(n.index);
            }
            case ExprNode::Kind::Op: {
                Rational lhs = walk();
                Rational rhs = walk();
                switch (n.op) {
                    case BinOp::Add: return lhs + rhs;
                    case BinOp::Sub: return lhs - rhs;
                    case BinOp::Mul: return lhs * rhs;
                    case BinOp::Div: return lhs / rhs;
                    case BinOp::Pow: return lhs.pow_integer(rhs);
                }
            }
        }
        throw EvalError("malformed expression node");
    }
};

}  // namespace

ExpressionTree parse_equation(const std::string& infix, const ConstantTable& constants,
                              long num_count) {
    Parser parser(infix, lex(infix), constants, num_count);
    return parser.parse();
}

std::string to_infix(const ExpressionTree& tree, const ConstantTable& constants) {
    if (tree.prefix.empty()) throw ParseError("cannot print empty tree");
    if (!is_complete_prefix(tree.prefix)) throw ParseError("prefix sequence is not a complete tree");
    Printer p{tree, constants};
    return p.walk().first;
}

Rational evaluate_tree(const ExpressionTree& tree, std::span<const Rational> numbers,
                       const ConstantTable& constants) {
    if (!is_complete_prefix(tree.prefix)) throw EvalError("prefix sequence is not a complete tree");
    Evaluator e{tree, numbers, constants};
    return e.walk();
}

}  // namespace hlgt
