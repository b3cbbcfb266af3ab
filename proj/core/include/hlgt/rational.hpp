#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hlgt {

class EvalError : public std::runtime_error {
  public:
    explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact rational number with arbitrary-precision numerator/denominator.
/// Parses integers, decimals ("3.14"), fractions ("2/5") and percentages ("30%").
class Rational {
  public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    Rational(long num, long den);

    static Rational parse(const std::string& text);
    /// True when parse() would accept the text.
    static bool parseable(const std::string& text);

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational pow_integer(const Rational& exponent) const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const;

    double to_double() const;
    /// "p/q" for non-integers, plain digits for integers.
    std::string to_string() const;

    /// |a - b| <= tol * max(1, |b|), with tol given as a double.
    bool approx_equal(const Rational& other, double rel_tol) const;

  private:
    using Big = boost::multiprecision::cpp_rational;
    explicit Rational(Big v) : v_(std::move(v)) {}
    Big v_;
};

}  // namespace hlgt
