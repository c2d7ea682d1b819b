#pragma once

#include "cartan/wallach.hpp"

#include <complex>
#include <vector>

namespace cartan {

using MultiIndex = std::vector<int>;

/// All d-tuples of nonnegative integers with total degree <= degree_cap, in
/// nondecreasing total degree; within one degree, reverse-lexicographic
/// (the first coordinate runs from high to low), so (1,0) precedes (0,1).
std::vector<MultiIndex> multi_index_enumerate(int dim, int degree_cap);

int total_degree(const MultiIndex& p);

struct SeriesTerm {
    MultiIndex index;
    double coefficient;
};

/// Squared moduli c_p of the components of the Kaehler immersion h_k of
/// (ball(d), k g_B):  sum_p c_p |z^p|^2 = (1 - |z|^2)^(-genus k),  with
/// c_p = (genus k)_{|p|} / p!  (rising factorial). Throws for k <= 0.
std::vector<SeriesTerm> ball_h_coefficients(int d, const Rational& k, int degree_cap);

struct ImmersionEntry {
    MultiIndex z;  // monomial exponent in z
    int w;         // power of w
    double coefficient;
};

/// Squared moduli of the components of the Kaehler immersion of
/// (M_ball(mu), alpha g(mu)), with |z index| + w power <= cutoff. The entry
/// for (p, m) is (alpha)_m/m! times the coefficient of z^p in
/// (1 - |z|^2)^(-mu (alpha + m)).
struct ImmersionCoefficients {
    HartogsSpec spec;
    int cutoff;
    std::vector<ImmersionEntry> entries;
};

/// Requires a rank-one base, mu > 0, alpha > 0.
ImmersionCoefficients build_immersion(const HartogsSpec& spec, int degree_cap);

struct HartogsPoint {
    std::vector<std::complex<double>> z;
    std::complex<double> w;
};

struct PullbackCheck {
    double max_rel_error;
    double max_tail_bound;     // largest analytic relative tail bound over the samples
    bool within_tail_bound;    // every sample's error <= its own bound (+ rounding slack)
};

/// Compares the truncated  sum |f_j|^2  with  (N^mu - |w|^2)^(-alpha)  at
/// each sample. Throws precondition_error for samples outside the domain.
///
/// The tail bound uses nonnegativity of all coefficients: for any rho > 1
/// with (rho x, rho y) still inside, where x = |z|^2 and y = |w|^2,
///     tail <= rho^-(cutoff+1) * F(rho x, rho y),
/// minimized over rho.
PullbackCheck verify_pullback(const ImmersionCoefficients& coeffs,
                              const std::vector<HartogsPoint>& samples);

/// Relative tail bound of the truncated series at one point (see above).
double pullback_tail_bound(const HartogsSpec& spec, int cutoff, double x, double y);

/// n x n samples with |z|, |w| in {0, max/(n-1), ..., max}; z along the
/// diagonal direction of C^d.
std::vector<HartogsPoint> pullback_grid(int d, double max_modulus, int n);

}  // namespace cartan
