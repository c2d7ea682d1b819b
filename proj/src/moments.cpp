#include "cartan/moments.hpp"

namespace cartan {

std::vector<LinearFactor> moment_denominator_factors(const CartanDomain& domain) {
    std::vector<LinearFactor> out;
    for (int j = 1; j <= domain.r; ++j) {
        int len = domain.b + 1 + domain.a * (domain.r - j);
        Rational base = Rational(1) + Rational((j - 1) * domain.a, 2);
        for (int t = 0; t < len; ++t) out.push_back({Rational(1), base + Rational(t)});
    }
    return out;
}

MomentRatio moment_ratio(const CartanDomain& domain) {
    MomentRatio m{domain, {}, {}};
    for (int j = 1; j <= domain.r; ++j) m.block_lengths.push_back(domain.b + 1 + domain.a * (domain.r - j));

    auto denom = moment_denominator_factors(domain);
    Rational at_zero(1);
    for (const auto& f : denom) at_zero *= f.intercept;
    m.as_rational = FactoredRational::from_factors(at_zero, {}, denom);
    return m;
}

bool moment_converges(const CartanDomain&, const Rational& s) { return s > Rational(-1); }

}  // namespace cartan
