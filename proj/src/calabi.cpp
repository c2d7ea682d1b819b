#include "cartan/calabi.hpp"

#include "cartan/error.hpp"

#include <cmath>
#include <numeric>

namespace cartan {

namespace {

void compositions(int remaining, std::size_t pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        compositions(remaining - v, pos + 1, cur, out);
    }
}

// (c)_n / p!  computed as prod over the coordinates to stay in range.
double rising_over_factorials(double c, const MultiIndex& p) {
    double v = 1.0;
    int n = 0;
    for (int pi : p)
        for (int i = 1; i <= pi; ++i, ++n) v *= (c + n) / i;
    return v;
}

double log_f(const HartogsSpec& spec, double x, double y) {
    return -spec.alpha.to_double() * std::log(std::pow(1.0 - x, spec.mu.to_double()) - y);
}

}  // namespace

int total_degree(const MultiIndex& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<MultiIndex> multi_index_enumerate(int dim, int degree_cap) {
    if (dim < 1) throw invalid_parameter("multi-index dimension must be >= 1");
    if (degree_cap < 0) throw invalid_parameter("degree cap must be >= 0");
    std::vector<MultiIndex> out;
    MultiIndex cur(dim, 0);
    for (int n = 0; n <= degree_cap; ++n) compositions(n, 0, cur, out);
    return out;
}

std::vector<SeriesTerm> ball_h_coefficients(int d, const Rational& k, int degree_cap) {
    if (k.sign() <= 0) throw invalid_parameter("k must be positive, got " + k.str());
    double c = (Rational(d + 1) * k).to_double();
    std::vector<SeriesTerm> out;
    for (auto& p : multi_index_enumerate(d, degree_cap)) {
        double v = rising_over_factorials(c, p);
        out.push_back({std::move(p), v});
    }
    return out;
}

ImmersionCoefficients build_immersion(const HartogsSpec& spec, int degree_cap) {
    if (!spec.base.is_ball())
        throw invalid_parameter("explicit immersion coefficients need a rank-one base, got " +
                                spec.base.label());
    if (spec.mu.sign() <= 0 || spec.alpha.sign() <= 0)
        throw invalid_parameter("mu and alpha must be positive");
    if (degree_cap < 0) throw invalid_parameter("degree cap must be >= 0");

    ImmersionCoefficients ic{spec, degree_cap, {}};
    const int d = spec.base.dim;
    const Rational genus(spec.base.genus);
    const double alpha = spec.alpha.to_double();
    double weight = 1.0;  // (alpha)_m / m!
    for (int m = 0; m <= degree_cap; ++m) {
        if (m > 0) weight *= (alpha + m - 1) / m;
        Rational k = spec.mu * (spec.alpha + Rational(m)) / genus;
        for (auto& term : ball_h_coefficients(d, k, degree_cap - m))
            ic.entries.push_back({std::move(term.index), m, weight * term.coefficient});
    }
    return ic;
}

double pullback_tail_bound(const HartogsSpec& spec, int cutoff, double x, double y) {
    const double mu = spec.mu.to_double();
    if (x == 0 && y == 0) return 0.0;
    auto inside = [&](double rho) { return rho * x < 1 && std::pow(1 - rho * x, mu) - rho * y > 0; };

    // largest admissible rho by bisection on the boundary
    double hi = 2.0;
    while (inside(hi) && hi < 1e12) hi *= 2;
    double lo = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    double rho_max = lo;

    double base = log_f(spec, x, y);
    double best = 0.0;  // log of relative bound; the trivial bound is 1
    const int steps = 400;
    for (int i = 1; i < steps; ++i) {
        double rho = std::exp(std::log(rho_max) * i / steps);
        double lb = -(cutoff + 1) * std::log(rho) + log_f(spec, rho * x, rho * y) - base;
        best = std::min(best, lb);
    }
    return std::exp(best);
}

PullbackCheck verify_pullback(const ImmersionCoefficients& coeffs,
                              const std::vector<HartogsPoint>& samples) {
    const auto& spec = coeffs.spec;
    const double mu = spec.mu.to_double();
    const double alpha = spec.alpha.to_double();
    const std::size_t d = static_cast<std::size_t>(spec.base.dim);
    PullbackCheck out{0.0, 0.0, true};
    for (const auto& s : samples) {
        if (s.z.size() != d)
            throw invalid_parameter("sample has " + std::to_string(s.z.size()) +
                                    " z coordinates, base dimension is " + std::to_string(d));
        double x = 0;
        for (auto zi : s.z) x += std::norm(zi);
        double y = std::norm(s.w);
        if (!(x < 1) || !(y < std::pow(1 - x, mu)))
            throw precondition_error("sample outside the domain: |z|^2=" + std::to_string(x) +
                                     ", |w|^2=" + std::to_string(y));

        double sum = 0;
        for (const auto& e : coeffs.entries) {
            double term = e.coefficient * std::pow(y, e.w);
            for (std::size_t i = 0; i < d; ++i) term *= std::pow(std::norm(s.z[i]), e.z[i]);
            sum += term;
        }
        double exact = std::pow(std::pow(1 - x, mu) - y, -alpha);
        double err = std::abs(sum - exact) / exact;
        double bound = pullback_tail_bound(spec, coeffs.cutoff, x, y);
        out.max_rel_error = std::max(out.max_rel_error, err);
        out.max_tail_bound = std::max(out.max_tail_bound, bound);
        // truncation error plus accumulated rounding
        if (err > bound + 1e-13) out.within_tail_bound = false;
    }
    return out;
}

std::vector<HartogsPoint> pullback_grid(int d, double max_modulus, int n) {
    if (n < 2) throw invalid_parameter("pullback grid needs at least 2 points per axis");
    std::vector<HartogsPoint> out;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            double rz = max_modulus * i / (n - 1);
            double rw = max_modulus * k / (n - 1);
            HartogsPoint p;
            for (int c = 0; c < d; ++c) p.z.push_back(std::polar(rz / std::sqrt(d), 0.7 * c));
            p.w = std::polar(rw, 0.3);
            out.push_back(std::move(p));
        }
    return out;
}

}  // namespace cartan
