#include "otrid/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace otrid {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    unsigned long long u = v < 0 ? (~static_cast<unsigned long long>(v) + 1ull) : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u % kBase));
        u /= kBase;
    }
}

void BigInt::trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void BigInt::normalize() {
    trim(mag_);
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = static_cast<uint32_t>(s / kBase);
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = acc[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = acc[k] + carry;
            acc[k] = cur % kBase;
            carry = cur / kBase;
            ++k;
        }
    }
    std::vector<uint32_t> r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<uint32_t>(acc[i]);
    trim(r);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::compare_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.normalize();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.normalize();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (compare_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // schoolbook long division on magnitudes; quotient digit by binary search
    std::vector<uint32_t> quo(a.mag_.size(), 0);
    std::vector<uint32_t> rem;  // current remainder, little-endian
    for (size_t i = a.mag_.size(); i-- > 0;) {
        rem.insert(rem.begin(), a.mag_[i]);
        trim(rem);
        if (compare_mag(rem, b.mag_) < 0) continue;
        uint32_t lo = 1, hi = kBase - 1, digit = 1;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            std::vector<uint32_t> t = mul_mag(b.mag_, {mid});
            if (compare_mag(t, rem) <= 0) {
                digit = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quo[i] = digit;
        rem = sub_mag(rem, mul_mag(b.mag_, {digit}));
    }
    trim(quo);
    q = BigInt();
    if (!quo.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.mag_ = std::move(quo);
    }
    r = BigInt();
    if (!rem.empty()) {
        r.sign_ = a.sign_;
        r.mag_ = std::move(rem);
    }
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::optional<BigInt> BigInt::parse(std::string_view text) {
    size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i >= text.size()) return std::nullopt;
    BigInt r;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
        r = r * BigInt(10) + BigInt(text[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(mag_.back());
    char buf[16];
    for (size_t i = mag_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof(buf), "%09u", mag_[i]);
        s += buf;
    }
    return s;
}

std::optional<long long> BigInt::to_ll() const {
    long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        if (v > (9223372036854775807ll - mag_[i]) / kBase) return std::nullopt;
        v = v * kBase + mag_[i];
    }
    return sign_ < 0 ? -v : v;
}

}  // namespace otrid
