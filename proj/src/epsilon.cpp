#include "cartan/epsilon.hpp"

#include "cartan/error.hpp"
#include "cartan/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace cartan {

namespace {

constexpr double pi = boost::math::constants::pi<double>();
constexpr double inf = std::numeric_limits<double>::infinity();

// Relative tolerances per stored norm.
constexpr double disc_tol = 1e-12;
constexpr double ball2_tol = 1e-10;
constexpr double hartogs_tol = 1e-10;

// Tail of a series whose term ratios from index n on are bounded by q.
double geometric_tail(double last, double prev, double floor_ratio) {
    if (last == 0) return 0;
    double q = std::max(prev > 0 ? last / prev : 1.0, floor_ratio);
    return q < 1 ? last * q / (1 - q) : inf;
}

void finish(EpsilonReport& r) {
    auto [lo, hi] = std::minmax_element(r.values.begin(), r.values.end());
    r.min = *lo;
    r.max = *hi;
    r.spread = (r.max - r.min) / r.max;
}

// Kernel sum at x = |z|^2 grouped by total degree, ball setting.
std::vector<double> ball_degree_sums(const WeightedBasisNorms& nb,
                                     const std::vector<std::complex<double>>& z) {
    std::vector<double> sq;
    for (auto zi : z) sq.push_back(std::norm(zi));
    std::vector<double> sums;
    for (const auto& [p, norm] : nb.norms) {
        int n = total_degree(p);
        if (static_cast<int>(sums.size()) <= n) sums.resize(n + 1, 0.0);
        double term = 1.0 / norm;
        for (std::size_t i = 0; i < p.size(); ++i) term *= std::pow(sq[i], p[i]);
        sums[n] += term;
    }
    return sums;
}

// Neglected part of the Hartogs kernel sum outside j <= z_cap, m <= w_cap.
// The norms are pi^2 B(m+1, alpha-2) B(j+1, c_m), c_m = mu(alpha+m) - 1, so
//   - a row m <= w_cap continues past z_cap with term ratio t (j+1+c_m)/(j+1),
//   - a whole row sums to y^m c_m (1-t)^(-c_m-1) / (pi^2 B(m+1, alpha-2)).
double hartogs_tail(double mu, double alpha, int z_cap, int w_cap, double t, double y) {
    auto log_beta = [](double p, double q) { return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q); };
    const double log_pi2 = 2 * std::log(pi);
    double tail = 0;
    if (t > 0) {
        for (int m = 0; m <= w_cap; ++m) {
            if (m > 0 && y == 0) break;
            double c = mu * (alpha + m) - 1;
            int j = z_cap + 1;
            double term = std::exp(j * std::log(t) + (m > 0 ? m * std::log(y) : 0.0) - log_pi2 -
                                   log_beta(m + 1, alpha - 2) - log_beta(j + 1, c));
            double row = 0;
            for (;; ++j) {
                row += term;
                double ratio = t * (j + 1 + c) / (j + 1);
                if (ratio < 1 && term * ratio / (1 - ratio) <= 1e-18 * row) {
                    row += term * ratio / (1 - ratio);
                    break;
                }
                term *= ratio;
            }
            tail += row;
        }
    }
    if (y > 0) {
        double prev = inf;
        for (int m = w_cap + 1;; ++m) {
            double c = mu * (alpha + m) - 1;
            double row = std::exp(m * std::log(y) + std::log(c) - (c + 1) * std::log1p(-t) - log_pi2 -
                                  log_beta(m + 1, alpha - 2));
            tail += row;
            // rows eventually decay geometrically with ratio -> y / (1-t)^mu < 1
            if (row < prev && row <= 1e-18 * tail) break;
            prev = row;
            if (m > w_cap + 100000) return inf;
        }
    }
    return tail;
}

}  // namespace

WeightedBasisNorms ball_monomial_norms(int d, double alpha, int degree_cap) {
    if (d != 1 && d != 2) throw invalid_parameter("numerical ball norms support d = 1 or 2, got " + std::to_string(d));
    if (degree_cap < 0) throw invalid_parameter("degree cap must be >= 0");
    WeightedBasisNorms nb;
    nb.setting = NormSetting::ball;
    nb.d = d;
    nb.alpha = alpha;
    nb.mu = 1.0;
    const double lambda = alpha - d - 1;
    if (lambda <= -1) {
        nb.trivial = true;
        nb.triviality_reason = "weight exponent alpha - d - 1 = " + std::to_string(lambda) +
                               " <= -1: every monomial has infinite norm (alpha <= d)";
        return nb;
    }

    if (d == 1) {
        // int_disc |z|^2p (1-|z|^2)^lambda dA = pi int_0^1 t^p (1-t)^lambda dt
        for (int p = 0; p <= degree_cap; ++p) {
            auto q = beta_quadrature(p, lambda, disc_tol);
            nb.norms[{p}] = pi * q.value;
            nb.quadrature_error = std::max(nb.quadrature_error, q.error / q.value);
        }
        return nb;
    }

    // With t_i = |z_i|^2 Lebesgue measure on C^2 becomes pi^2 dt1 dt2; then
    // t1 = t u, t2 = t (1 - u) separates a radial and a simplex factor.
    std::vector<double> radial(degree_cap + 1);
    for (int n = 0; n <= degree_cap; ++n) {
        auto q = beta_quadrature(n + 1, lambda, ball2_tol);
        radial[n] = q.value;
        nb.quadrature_error = std::max(nb.quadrature_error, q.error / q.value);
    }
    for (const auto& p : multi_index_enumerate(2, degree_cap)) {
        auto q = beta_quadrature(p[0], p[1], ball2_tol);
        nb.norms[p] = pi * pi * radial[p[0] + p[1]] * q.value;
        nb.quadrature_error = std::max(nb.quadrature_error, q.error / q.value);
    }
    return nb;
}

std::complex<double> disc_cross_term(double alpha, int p, int q) {
    const double lambda = alpha - 2;
    if (lambda <= -1) throw triviality_error("disc weight is not integrable for alpha <= 1");
    const int k = p - q;
    auto re = integrate([k](double th) { return std::cos(k * th); }, 0, 2 * pi, 1e-12, 1e-14);
    auto im = integrate([k](double th) { return std::sin(k * th); }, 0, 2 * pi, 1e-12, 1e-14);
    // int_0^1 r^(p+q+1) (1-r^2)^lambda dr = (1/2) int_0^1 t^((p+q)/2) (1-t)^lambda dt
    auto radial = beta_quadrature(0.5 * (p + q), lambda, disc_tol);
    return std::complex<double>(re.value, im.value) * (0.5 * radial.value);
}

WeightedBasisNorms hartogs_disc_norms(double mu, double alpha, int z_cap, int w_cap) {
    if (z_cap < 0 || w_cap < 0) throw invalid_parameter("caps must be >= 0");
    WeightedBasisNorms nb;
    nb.setting = NormSetting::hartogs_disc;
    nb.d = 1;
    nb.alpha = alpha;
    nb.mu = mu;
    // base disc: d = 1, genus 2
    if (alpha <= 2) {
        nb.trivial = true;
        nb.triviality_reason = "fiber integral diverges: alpha = " + std::to_string(alpha) + " <= d + 1 = 2";
        return nb;
    }
    if (alpha * mu <= 1) {
        nb.trivial = true;
        nb.triviality_reason = "base integral diverges: alpha * mu = " + std::to_string(alpha * mu) +
                               " <= genus - 1 = 1";
        return nb;
    }
    // Over t = |z|^2, rho = |w|^2 in {rho < (1-t)^mu}; rho = (1-t)^mu u turns
    // the fiber integral into the t-independent factor int u^m (1-u)^(alpha-3)
    // times (1-t)^(mu(alpha+m-2)), leaving int t^j (1-t)^(mu(alpha+m)-2) dt.
    for (int m = 0; m <= w_cap; ++m) {
        auto fiber = beta_quadrature(m, alpha - 3, hartogs_tol);
        nb.quadrature_error = std::max(nb.quadrature_error, fiber.error / fiber.value);
        for (int j = 0; j <= z_cap; ++j) {
            auto base = beta_quadrature(j, mu * (alpha + m) - 2, hartogs_tol);
            nb.quadrature_error = std::max(nb.quadrature_error, base.error / base.value);
            nb.norms[{j, m}] = pi * pi * fiber.value * base.value;
        }
    }
    return nb;
}

double epsilon_ball_at(const WeightedBasisNorms& nb, const std::vector<std::complex<double>>& z) {
    if (nb.trivial) throw triviality_error(nb.triviality_reason);
    double x = 0;
    for (auto zi : z) x += std::norm(zi);
    double k = 0;
    for (double s : ball_degree_sums(nb, z)) k += s;
    return std::pow(1 - x, nb.alpha) * k;
}

double epsilon_hartogs_at(const WeightedBasisNorms& nb, std::complex<double> z, std::complex<double> w) {
    if (nb.trivial) throw triviality_error(nb.triviality_reason);
    double t = std::norm(z), y = std::norm(w);
    double k = 0;
    for (const auto& [idx, norm] : nb.norms) k += std::pow(t, idx[0]) * std::pow(y, idx[1]) / norm;
    return std::pow(std::pow(1 - t, nb.mu) - y, nb.alpha) * k;
}

EpsilonReport epsilon_ball(int d, double alpha, double grid_rmax, int degree_cap, int points,
                           double tail_tol) {
    if (alpha <= d)
        throw triviality_error("weighted space on the ball is {0} for alpha <= d (alpha = " +
                               std::to_string(alpha) + ", d = " + std::to_string(d) + ")");
    if (!(grid_rmax >= 0 && grid_rmax < 1)) throw invalid_parameter("grid rmax must lie in [0, 1)");
    if (points < 2) throw invalid_parameter("need at least 2 grid points");
    if (degree_cap < 1) throw invalid_parameter("degree cap must be >= 1");

    WeightedBasisNorms nb = ball_monomial_norms(d, alpha, degree_cap);
    EpsilonReport r;
    r.truncation_degree = degree_cap;

    auto sample = [&](const std::vector<std::complex<double>>& z, double rad) {
        auto sums = ball_degree_sums(nb, z);
        double k = 0;
        for (double s : sums) k += s;
        double x = rad * rad;
        double tail = geometric_tail(sums[degree_cap], sums[degree_cap - 1], x) / k;
        r.tail_bound = std::max(r.tail_bound, tail);
        r.grid.push_back({rad, 0.0});
        r.values.push_back(std::pow(1 - x, alpha) * k);
    };

    for (int i = 0; i < points; ++i) {
        double rad = grid_rmax * i / (points - 1);
        if (d == 1) {
            sample({std::polar(rad, 0.0)}, rad);
        } else {
            sample({std::polar(rad, 0.0), 0.0}, rad);
            sample({std::polar(rad * std::cos(pi / 5), 0.4), std::polar(rad * std::sin(pi / 5), 1.1)}, rad);
        }
    }
    finish(r);
    if (!(r.tail_bound <= tail_tol))
        throw truncation_error("truncation tail estimate " + std::to_string(r.tail_bound) +
                               " exceeds tolerance; lower rmax or raise the degree cap");
    return r;
}

EpsilonReport epsilon_hartogs_disc(double mu, double alpha, const HartogsGrid& grid, int z_cap,
                                   int w_cap, double tail_tol) {
    if (grid.nz < 2 || grid.nw < 2) throw invalid_parameter("grid needs at least 2 points per axis");
    if (!(grid.rz_max >= 0 && grid.rz_max < 1)) throw invalid_parameter("rz_max must lie in [0, 1)");
    if (!(grid.w_frac >= 0 && grid.w_frac < 1)) throw invalid_parameter("w_frac must lie in [0, 1)");
    if (z_cap < 1 || w_cap < 1) throw invalid_parameter("caps must be >= 1");

    WeightedBasisNorms nb = hartogs_disc_norms(mu, alpha, z_cap, w_cap);
    if (nb.trivial) throw triviality_error(nb.triviality_reason);

    EpsilonReport r;
    r.truncation_degree = std::min(z_cap, w_cap);
    for (int i = 0; i < grid.nz; ++i) {
        double rz = grid.rz_max * i / (grid.nz - 1);
        double t = rz * rz;
        double fiber_max = std::pow(1 - t, mu / 2);
        for (int k = 0; k < grid.nw; ++k) {
            double rw = grid.w_frac * k / (grid.nw - 1) * fiber_max;
            double y = rw * rw;
            double kernel = 0;
            for (const auto& [idx, norm] : nb.norms) {
                kernel += std::pow(t, idx[0]) * std::pow(y, idx[1]) / norm;
            }
            double tail = hartogs_tail(mu, alpha, z_cap, w_cap, t, y);
            r.tail_bound = std::max(r.tail_bound, tail / kernel);

            r.grid.push_back({rz, rw});
            r.values.push_back(std::pow(std::pow(1 - t, mu) - y, alpha) * kernel);
        }
    }
    finish(r);
    if (!(r.tail_bound <= tail_tol))
        throw truncation_error("truncation tail estimate " + std::to_string(r.tail_bound) +
                               " exceeds tolerance; shrink the grid or raise the caps");
    return r;
}

void write_epsilon_csv(const EpsilonReport& report, std::ostream& os) {
    os << "abs_z,abs_w,epsilon\n";
    auto old = os.precision(17);
    for (std::size_t i = 0; i < report.values.size(); ++i)
        os << report.grid[i].abs_z << ',' << report.grid[i].abs_w << ',' << report.values[i] << '\n';
    os.precision(old);
}

}  // namespace cartan
