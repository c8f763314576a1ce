#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

// Exact rational arithmetic on 64-bit integers. All bound comparisons in
// this project go through this type so that strict inequalities are never
// blurred by floating point. Denominator is kept positive and reduced.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Serialized as "p/q" even for integers, so reports are uniform.
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    int cmp(const Rational& o) const {
        __int128 a = static_cast<__int128>(num_) * o.den_;
        __int128 b = static_cast<__int128>(o.num_) * den_;
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace rainbow
