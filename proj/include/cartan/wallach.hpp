#pragma once

#include "cartan/catalog.hpp"
#include "cartan/rational.hpp"

#include <optional>
#include <vector>

namespace cartan {

/// {0, a/2, ..., (r-1)a/2} together with the open half-line above (r-1)a/2.
struct WallachSet {
    std::vector<Rational> discrete;
    Rational continuous_threshold;

    bool contains(const Rational& eta) const;
};

WallachSet wallach_set(const CartanDomain& domain);

/// (Omega, beta g_B) admits a Kaehler immersion into CP^infinity iff
/// beta * genus lies in W(Omega) minus {0}. Requires beta > 0.
bool cartan_projectively_induced(const CartanDomain& domain, const Rational& beta);

/// Base domain, fiber exponent mu and metric multiple alpha of a
/// Cartan-Hartogs domain {(z, w) : |w|^2 < N(z, z)^mu}.
struct HartogsSpec {
    CartanDomain base;
    Rational mu;
    Rational alpha;
};

struct ProjectiveVerdict {
    bool induced;
    std::optional<int> failing_m;  // smallest m with (alpha + m) mu outside W minus {0}
};

/// alpha g(mu) is projectively induced iff (alpha + m) mu lies in W minus {0}
/// for every integer m >= 0. Values above the continuous threshold are
/// automatic, so only the finitely many m with (alpha + m) mu <= (r-1)a/2
/// are checked.
ProjectiveVerdict hartogs_projectively_induced(const HartogsSpec& spec);

struct CorollaryWitness {
    Rational mu0;        // genus / (d + 1)
    Rational alpha_min;  // (r - 1)(d + 1) a / (2 genus)
};

/// Throws invalid_parameter for balls.
CorollaryWitness corollary_witness(const CartanDomain& domain);

}  // namespace cartan
