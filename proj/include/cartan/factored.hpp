#pragma once

#include "cartan/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

/// slope * x + intercept
struct LinearFactor {
    Rational slope;
    Rational intercept;
};

/// A univariate rational function kept as
///
///     scale * prod (x + c_i)^k_i / prod (x + e_j)^l_j
///
/// Every linear factor is made monic on construction (its slope moves into
/// `scale`) and common factors are cancelled multiset-wise, so two values
/// represent the same function iff they compare equal. The representation
/// is never expanded to coefficients; constancy is decided by the factor
/// multisets alone.
class FactoredRational {
public:
    using ShiftMultiset = std::map<Rational, int>;  // shift c of (x + c) -> multiplicity

    /// The constant 1.
    FactoredRational() = default;
    explicit FactoredRational(Rational constant);

    /// Builds from unnormalized factors. Constant factors (slope 0) fold into
    /// the scale; a zero constant in the numerator yields the zero function,
    /// in the denominator it throws pole_error.
    static FactoredRational from_factors(Rational scale, std::span<const LinearFactor> numer,
                                         std::span<const LinearFactor> denom);

    static FactoredRational linear(const Rational& slope, const Rational& intercept);

    const Rational& scale() const { return scale_; }
    const ShiftMultiset& numer_shifts() const { return numer_; }
    const ShiftMultiset& denom_shifts() const { return denom_; }

    int numer_degree() const;
    int denom_degree() const;
    bool is_zero() const { return scale_.is_zero(); }

    /// Exact value at x0; pole_error names the vanishing factor.
    Rational eval_at(const Rational& x0) const;

    /// The constant value iff the function is constant.
    std::optional<Rational> constant_value() const;
    bool is_constant() const { return constant_value().has_value(); }

    FactoredRational inverse() const;

    /// Substitutes x = slope * y + intercept and returns the result as a
    /// function of y. slope must be nonzero.
    FactoredRational compose_affine(const Rational& slope, const Rational& intercept) const;

    friend FactoredRational operator*(const FactoredRational& f, const FactoredRational& g);
    friend FactoredRational operator/(const FactoredRational& f, const FactoredRational& g);
    friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

    /// Human-readable, integer-coefficient form, e.g. "(m+3)/((2m+7))".
    std::string pretty(std::string_view var = "m") const;

    /// Lossless text form "num: [c, ...]; den: [e, ...]; scale: p/q" listing
    /// the shifts of the monic factors with repetition.
    std::string serialize() const;
    static FactoredRational deserialize(std::string_view text);

private:
    void cancel();

    Rational scale_{1};
    ShiftMultiset numer_;
    ShiftMultiset denom_;
};

/// Independent constancy test on unnormalized factor lists: expands
/// numerator P and denominator Q to coefficient form and checks
/// P(x) * Q(x1) - Q(x) * P(x1) == 0 identically for a point x1 with Q(x1) != 0.
std::optional<Rational> constant_by_expansion(const Rational& scale,
                                              std::span<const LinearFactor> numer,
                                              std::span<const LinearFactor> denom);

}  // namespace cartan
