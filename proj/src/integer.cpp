#include "csf/integer.hpp"

#include <algorithm>

namespace csf {

Integer& Integer::operator/=(Integer o) {
    if (o.value_ == 0) {
        throw std::domain_error("division by zero");
    }
    if (o.value_ == -1) {
        return *this = -*this;
    }
    if (value_ % o.value_ != 0) {
        throw std::domain_error("inexact integer division");
    }
    value_ /= o.value_;
    return *this;
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) {
        throw OverflowError("value " + to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(value_);
}

std::string Integer::to_string() const {
    if (value_ == 0) {
        return "0";
    }
    std::string out;
    // work with the non-positive value so INT128_MIN survives
    value_type v = value_ > 0 ? -value_ : value_;
    while (v != 0) {
        out.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (value_ < 0) {
        out.push_back('-');
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Integer Integer::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("integer literal without digits");
    }
    value_type v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad digit in integer literal");
        }
        const value_type digit = c - '0';
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_sub_overflow(v, digit, &v)) {
            throw OverflowError("integer literal out of range");
        }
    }
    if (!negative) {
        if (v == static_cast<value_type>(static_cast<unsigned __int128>(1) << 127)) {
            throw OverflowError("integer literal out of range");
        }
        v = -v;
    }
    return from_raw(v);
}

Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer pow(Integer base, unsigned exponent) {
    Integer r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        r *= base;
    }
    return r;
}

}  // namespace csf
