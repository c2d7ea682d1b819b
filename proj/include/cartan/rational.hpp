#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cartan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Parses "p/q" or an integer. Decimal literals are rejected.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// Floor and ceiling as machine integers; throws if out of range.
    std::int64_t floor() const;
    std::int64_t ceil() const;

    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

Rational abs(const Rational& q);

}  // namespace cartan
