#pragma once

#include "cartan/catalog.hpp"
#include "cartan/factored.hpp"

#include <vector>

namespace cartan {

/// The s-dependence of the moment integral  int_Omega N^s  omega_0^d,
/// normalized to 1 at s = 0. Each Gamma ratio telescopes over an integer
/// shift L_j = b + 1 + a (r - j), leaving
///
///     prod_{j=1..r} prod_{t=0..L_j-1}  1 / (s + 1 + (j-1) a/2 + t)
///
/// times a constant, so the result is an exact rational function of s.
struct MomentRatio {
    CartanDomain domain;
    FactoredRational as_rational;  // in the variable s
    std::vector<int> block_lengths;
};

MomentRatio moment_ratio(const CartanDomain& domain);

/// The moment integral is finite iff s > -1 (the j = 1 Gamma argument s + 1
/// must stay positive).
bool moment_converges(const CartanDomain& domain, const Rational& s);

/// The un-normalized denominator factors (s + 1 + (j-1)a/2 + t) of the
/// telescoped product, as linear factors in s, block by block.
std::vector<LinearFactor> moment_denominator_factors(const CartanDomain& domain);

}  // namespace cartan
