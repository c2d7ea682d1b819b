#include "cartan/rational.hpp"

#include "cartan/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <limits>

namespace cartan {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw invalid_parameter("not an exact rational (expected p/q or an integer): '" +
                                std::string(whole) + "'");
    BigInt v{std::string(s)};
    if (neg) v = -v;
    return v;
}

std::int64_t to_i64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw invalid_parameter("integer out of 64-bit range: " + v.str());
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw invalid_parameter("zero denominator");
    normalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t, text), 1);
    BigInt n = parse_int(trim(t.substr(0, slash)), text);
    std::string_view ds = trim(t.substr(slash + 1));
    if (!all_digits(ds))
        throw invalid_parameter("not an exact rational (expected p/q or an integer): '" +
                                std::string(text) + "'");
    BigInt d(std::string{ds});
    if (d == 0) throw invalid_parameter("zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(n), std::move(d));
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::int64_t Rational::floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return to_i64(q);
}

std::int64_t Rational::ceil() const {
    BigInt q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) q += 1;
    return to_i64(q);
}

double Rational::to_double() const {
    using boost::multiprecision::cpp_bin_float_double_extended;
    cpp_bin_float_double_extended n(num_), d(den_);
    return static_cast<double>(n / d);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace cartan
