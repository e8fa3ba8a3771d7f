#include "otrid/rational.hpp"

#include <stdexcept>

namespace otrid {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = BigInt::parse(text);
        if (!n) return std::nullopt;
        return Rational(*n, BigInt(1));
    }
    auto n = BigInt::parse(text.substr(0, slash));
    auto d = BigInt::parse(text.substr(slash + 1));
    if (!n || !d || d->is_zero()) return std::nullopt;
    return Rational(*n, *d);
}

std::string Rational::str() const {
    if (den_ == BigInt(1)) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace otrid
