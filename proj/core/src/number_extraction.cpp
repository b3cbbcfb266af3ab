#include "hlgt/number_extraction.hpp"

#include <cctype>
#include <stdexcept>

namespace hlgt {

const char* subtype_name(NumberSubtype t) {
    switch (t) {
        case NumberSubtype::Fraction: return "fraction";
        case NumberSubtype::Percentage: return "percentage";
        case NumberSubtype::Other: return "other";
    }
    return "?";
}

const char* srl_label_name(SrlLabel l) {
    switch (l) {
        case SrlLabel::Arg0: return "ARG-0";
        case SrlLabel::Arg1: return "ARG-1";
        case SrlLabel::ArgM: return "ARG-M";
    }
    return "?";
}

SrlLabel srl_label_from(const std::string& s) {
    if (s == "ARG-0") return SrlLabel::Arg0;
    if (s == "ARG-1") return SrlLabel::Arg1;
    if (s == "ARG-M") return SrlLabel::ArgM;
    throw std::invalid_argument("unknown SRL label: " + s);
}

std::vector<Rational> Problem::number_values() const {
    std::vector<Rational> out;
    out.reserve(numbers.size());
    for (const auto& n : numbers) out.push_back(n.value);
    return out;
}

namespace {

bool digits(const std::string& s, std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

bool is_integer_or_decimal(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return digits(s, 0, s.size());
    return digits(s, 0, dot) && digits(s, dot + 1, s.size());
}

bool is_percentage(const std::string& s) {
    return s.size() >= 2 && s.back() == '%' && is_integer_or_decimal(s.substr(0, s.size() - 1));
}

bool is_fraction(const std::string& s) {
    std::string body = s;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    auto slash = body.find('/');
    if (slash == std::string::npos) return false;
    return digits(body, 0, slash) && digits(body, slash + 1, body.size());
}

std::string fraction_body(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
    return s;
}

bool is_ratio(const std::string& s, std::size_t& colon) {
    colon = s.find(':');
    if (colon == std::string::npos) return false;
    return digits(s, 0, colon) && digits(s, colon + 1, s.size());
}

}  // namespace

NumberExtraction extract_numbers(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw std::invalid_argument("extract_numbers: empty token sequence");
    NumberExtraction out;
    out.new_index.reserve(tokens.size());
    out.width.reserve(tokens.size());
    for (const auto& tok : tokens) {
        long here = static_cast<long>(out.masked_tokens.size());
        out.new_index.push_back(here);
        std::size_t colon = 0;
        if (is_ratio(tok, colon)) {
            out.width.push_back(2);
            out.masked_tokens.emplace_back(kNumToken);
            out.masked_tokens.emplace_back(kNumToken);
            std::string lhs = tok.substr(0, colon);
            std::string rhs = tok.substr(colon + 1);
            out.numbers.push_back({here, lhs, Rational::parse(lhs), NumberSubtype::Other});
            out.numbers.push_back({here + 1, rhs, Rational::parse(rhs), NumberSubtype::Other});
        } else if (is_percentage(tok)) {
            out.width.push_back(1);
            out.masked_tokens.emplace_back(kNumToken);
            out.numbers.push_back({here, tok, Rational::parse(tok), NumberSubtype::Percentage});
        } else if (is_fraction(tok)) {
            out.width.push_back(1);
            out.masked_tokens.emplace_back(kNumToken);
            out.numbers.push_back(
                {here, tok, Rational::parse(fraction_body(tok)), NumberSubtype::Fraction});
        } else if (is_integer_or_decimal(tok)) {
            out.width.push_back(1);
            out.masked_tokens.emplace_back(kNumToken);
            out.numbers.push_back({here, tok, Rational::parse(tok), NumberSubtype::Other});
        } else {
            out.width.push_back(1);
            out.masked_tokens.push_back(tok);
        }
    }
    return out;
}

}  // namespace hlgt
