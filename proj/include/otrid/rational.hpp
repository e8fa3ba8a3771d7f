#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "otrid/bigint.hpp"

namespace otrid {

// Exact rational, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);

    static std::optional<Rational> parse(std::string_view text);  // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == BigInt(1) && num_ == BigInt(1); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // b != 0

    static int compare(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

    std::string str() const;  // "p" when den == 1, else "p/q"

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

}  // namespace otrid
