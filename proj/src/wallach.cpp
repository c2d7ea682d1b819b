#include "cartan/wallach.hpp"

#include "cartan/error.hpp"

#include <algorithm>

namespace cartan {

bool WallachSet::contains(const Rational& eta) const {
    if (eta > continuous_threshold) return true;
    return std::find(discrete.begin(), discrete.end(), eta) != discrete.end();
}

WallachSet wallach_set(const CartanDomain& domain) {
    WallachSet w;
    Rational half_a(domain.a, 2);
    for (int k = 0; k < domain.r; ++k) w.discrete.push_back(Rational(k) * half_a);
    w.continuous_threshold = Rational(domain.r - 1) * half_a;
    return w;
}

bool cartan_projectively_induced(const CartanDomain& domain, const Rational& beta) {
    if (beta.sign() <= 0) throw invalid_parameter("beta must be positive, got " + beta.str());
    Rational eta = beta * Rational(domain.genus);
    return !eta.is_zero() && wallach_set(domain).contains(eta);
}

ProjectiveVerdict hartogs_projectively_induced(const HartogsSpec& spec) {
    if (spec.mu.sign() <= 0) throw invalid_parameter("mu must be positive, got " + spec.mu.str());
    if (spec.alpha.sign() <= 0)
        throw invalid_parameter("alpha must be positive, got " + spec.alpha.str());
    WallachSet w = wallach_set(spec.base);
    for (int m = 0;; ++m) {
        Rational eta = (spec.alpha + Rational(m)) * spec.mu;
        if (eta > w.continuous_threshold) return {true, std::nullopt};
        if (eta.is_zero() || !w.contains(eta)) return {false, m};
    }
}

CorollaryWitness corollary_witness(const CartanDomain& domain) {
    if (domain.is_ball())
        throw invalid_parameter("corollary witness is undefined for the ball " + domain.label());
    int d = domain.dim, g = domain.genus;
    return {Rational(g, d + 1),
            Rational(BigInt((domain.r - 1) * (d + 1) * domain.a), BigInt(2 * g))};
}

}  // namespace cartan
