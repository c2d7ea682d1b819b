#pragma once

#include "cartan/calabi.hpp"

#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cartan {

enum class NormSetting { ball, hartogs_disc };

/// Squared norms of the monomial basis of a weighted Bergman space.
///
/// ball:          z^p on the unit ball of C^d, weight (1 - |z|^2)^(alpha - d - 1)
///                against Lebesgue measure.
/// hartogs_disc:  z^j w^m on {|w|^2 < (1 - |z|^2)^mu} over the disc, density
///                (N^mu - |w|^2)^(alpha - 3) N^(2 mu - 2), N = 1 - |z|^2;
///                indices are {j, m}.
///
/// Monomials are mutually orthogonal by rotation invariance, so these norms
/// determine the reproducing kernel. A divergent norm makes the space {0};
/// that is recorded in `trivial`, never as a number.
struct WeightedBasisNorms {
    NormSetting setting = NormSetting::ball;
    int d = 1;
    double alpha = 0;
    double mu = 1;  // 1 for the ball setting
    bool trivial = false;
    std::string triviality_reason;
    std::map<MultiIndex, double> norms;
    double quadrature_error = 0;  // largest estimated relative error of a stored norm
};

/// d in {1, 2}. The angular integrals are done in closed form by rotation;
/// the remaining radial (and, for d = 2, simplex) integrals by quadrature.
WeightedBasisNorms ball_monomial_norms(int d, double alpha, int degree_cap);

/// Spot check of orthogonality on the disc: the weighted integral of
/// z^p conj(z)^q, computed by quadrature in both the angle and the radius.
std::complex<double> disc_cross_term(double alpha, int p, int q);

WeightedBasisNorms hartogs_disc_norms(double mu, double alpha, int z_cap, int w_cap);

struct EpsilonSample {
    double abs_z;
    double abs_w;
};

struct EpsilonReport {
    std::vector<EpsilonSample> grid;
    std::vector<double> values;
    double min = 0;
    double max = 0;
    double spread = 0;  // (max - min) / max
    int truncation_degree = 0;
    double tail_bound = 0;  // largest relative truncation tail over the grid
};

/// epsilon at a point of the ball: (1 - |z|^2)^alpha * sum_p |z^p|^2 / norm(p).
double epsilon_ball_at(const WeightedBasisNorms& norms, const std::vector<std::complex<double>>& z);

/// epsilon at a point of the Hartogs domain over the disc.
double epsilon_hartogs_at(const WeightedBasisNorms& norms, std::complex<double> z,
                          std::complex<double> w);

/// Samples epsilon at |z| = rmax * i / (points - 1); for d = 2 each radius is
/// visited along two directions. Throws triviality_error when alpha <= d and
/// truncation_error when the tail estimate exceeds tail_tol.
EpsilonReport epsilon_ball(int d, double alpha, double grid_rmax, int degree_cap, int points = 10,
                           double tail_tol = 1e-8);

struct HartogsGrid {
    int nz = 8;
    int nw = 8;
    double rz_max = 0.6;  // largest |z|
    double w_frac = 0.6;  // largest |w| / N^(mu/2)
};

/// Samples epsilon on |z| = rz_max * i/(nz-1), |w| = w_frac * k/(nw-1) * N^(mu/2).
/// Throws triviality_error if a norm diverges, truncation_error when the
/// tail estimate exceeds tail_tol.
EpsilonReport epsilon_hartogs_disc(double mu, double alpha, const HartogsGrid& grid, int z_cap,
                                   int w_cap, double tail_tol = 1e-8);

/// Columns abs_z, abs_w, epsilon.
void write_epsilon_csv(const EpsilonReport& report, std::ostream& os);

}  // namespace cartan
