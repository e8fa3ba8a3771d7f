#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otrid {

// Arbitrary-precision signed integer, sign-magnitude over base 10^9 limbs.
// Values in this library stay small (counting formulas, exact elimination),
// so the division routine favors an obviously-correct digit search over speed.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static std::optional<BigInt> parse(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated quotient and remainder (remainder carries the dividend's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    static BigInt pow(const BigInt& base, unsigned e);

    // -1, 0, +1 as a < b, a == b, a > b.
    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    std::string str() const;

    // Value if it fits in long long.
    std::optional<long long> to_ll() const;

private:
    static constexpr uint32_t kBase = 1000000000u;
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero limbs

    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void trim(std::vector<uint32_t>& v);
    void normalize();
};

}  // namespace otrid
