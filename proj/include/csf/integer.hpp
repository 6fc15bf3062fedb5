#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csf {

/// Raised whenever an exact integer computation would leave the 128-bit range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Signed 128-bit integer whose arithmetic is checked. Every operation that
/// would wrap throws OverflowError instead.
class Integer {
public:
    using value_type = __int128;

    constexpr Integer() = default;
    constexpr Integer(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr Integer from_raw(value_type v) {
        Integer r;
        r.value_ = v;
        return r;
    }

    constexpr value_type raw() const { return value_; }

    Integer& operator+=(Integer o) {
        if (__builtin_add_overflow(value_, o.value_, &value_)) {
            throw OverflowError("integer overflow in addition");
        }
        return *this;
    }
    Integer& operator-=(Integer o) {
        if (__builtin_sub_overflow(value_, o.value_, &value_)) {
            throw OverflowError("integer overflow in subtraction");
        }
        return *this;
    }
    Integer& operator*=(Integer o) {
        if (__builtin_mul_overflow(value_, o.value_, &value_)) {
            throw OverflowError("integer overflow in multiplication");
        }
        return *this;
    }
    /// Exact division; throws std::domain_error if the divisor does not divide.
    Integer& operator/=(Integer o);

    friend Integer operator+(Integer a, Integer b) { return a += b; }
    friend Integer operator-(Integer a, Integer b) { return a -= b; }
    friend Integer operator*(Integer a, Integer b) { return a *= b; }
    friend Integer operator/(Integer a, Integer b) { return a /= b; }
    Integer operator-() const { return Integer{} - *this; }

    friend constexpr bool operator==(Integer a, Integer b) = default;
    friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) {
        return a.value_ <=> b.value_;
    }

    constexpr bool is_zero() const { return value_ == 0; }
    constexpr int sign() const { return (value_ > 0) - (value_ < 0); }

    bool fits_int64() const {
        return value_ >= INT64_MIN && value_ <= INT64_MAX;
    }
    /// Narrowing conversion; throws OverflowError when out of range.
    std::int64_t to_int64() const;

    std::string to_string() const;
    /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static Integer parse(std::string_view text);

private:
    value_type value_ = 0;
};

Integer factorial(int n);
Integer pow(Integer base, unsigned exponent);

}  // namespace csf
