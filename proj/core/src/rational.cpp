#include "hlgt/rational.hpp"

#include <cctype>
#include <cmath>

namespace hlgt {

namespace {
using BigInt = boost::multiprecision::cpp_int;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw EvalError("rational: zero denominator");
    v_ = Big(BigInt(num), BigInt(den));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.v_ == 0) throw EvalError("division by zero");
    return Rational(v_ / o.v_);
}

bool Rational::is_integer() const {
    return boost::multiprecision::denominator(v_) == 1;
}

Rational Rational::pow_integer(const Rational& exponent) const {
    if (!exponent.is_integer()) {
        throw EvalError("exponent must be integer-valued, got " + exponent.to_string());
    }
    BigInt e = boost::multiprecision::numerator(exponent.v_);
    if (boost::multiprecision::abs(e) > 1000) {
        throw EvalError("exponent magnitude too large: " + exponent.to_string());
    }
    long n = static_cast<long>(e);
    if (n == 0) return Rational(1);
    bool invert = n < 0;
    if (invert && v_ == 0) throw EvalError("division by zero");
    n = std::abs(n);
    Big acc(1);
    Big base = v_;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    Rational out{acc};
    if (invert) return Rational(1) / out;
    return out;
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw EvalError("cannot parse empty numeral");
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    bool percent = false;
    if (!s.empty() && s.back() == '%') {
        percent = true;
        s.pop_back();
    }
    Rational out;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw EvalError("cannot parse numeral: " + text);
        BigInt d(den);
        if (d == 0) throw EvalError("rational: zero denominator in " + text);
        out = Rational(Big(BigInt(num), d));
    } else if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole) || !all_digits(frac)) throw EvalError("cannot parse numeral: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        out = Rational(Big(BigInt(whole) * scale + BigInt(frac), scale));
    } else {
        if (!all_digits(s)) throw EvalError("cannot parse numeral: " + text);
        out = Rational(Big(BigInt(s)));
    }
    if (percent) out = out / Rational(100);
    if (negative) out = Rational(0) - out;
    return out;
}

bool Rational::parseable(const std::string& text) {
    try {
        parse(text);
        return true;
    } catch (const EvalError&) {
        return false;
    }
}

double Rational::to_double() const {
    return v_.convert_to<double>();
}

std::string Rational::to_string() const {
    BigInt num = boost::multiprecision::numerator(v_);
    BigInt den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

bool Rational::approx_equal(const Rational& other, double rel_tol) const {
    double a = to_double();
    double b = other.to_double();
    return std::abs(a - b) <= rel_tol * std::max(1.0, std::abs(b));
}

}  // namespace hlgt
