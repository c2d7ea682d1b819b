#include <doctest.h>

#include "cartan/calabi.hpp"
#include "cartan/error.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <set>

using namespace cartan;
using cd = std::complex<double>;

namespace {

// Taylor coefficient of x^p y^q of an analytic F by the Cauchy integral on a
// torus of radii (rx, ry), discretized with n x n nodes.
double cauchy_coefficient(const std::function<cd(cd, cd)>& f, int p, int q, double rx, double ry, int n = 96) {
    cd sum = 0;
    for (int i = 0; i < n; ++i) {
        double s = 2 * std::numbers::pi * i / n;
        for (int k = 0; k < n; ++k) {
            double t = 2 * std::numbers::pi * k / n;
            sum += f(std::polar(rx, s), std::polar(ry, t)) * std::polar(1.0, -(p * s + q * t));
        }
    }
    return (sum / double(n * n)).real() / (std::pow(rx, p) * std::pow(ry, q));
}

double binomial(int n, int k) {
    double v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

}  // namespace

TEST_CASE("multi-index enumeration") {
    auto two = multi_index_enumerate(2, 2);
    std::vector<MultiIndex> expected = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(two == expected);
    CHECK(multi_index_enumerate(1, 3) == std::vector<MultiIndex>{{0}, {1}, {2}, {3}});

    for (int d = 1; d <= 4; ++d) {
        for (int cap = 0; cap <= 6; ++cap) {
            auto all = multi_index_enumerate(d, cap);
            CHECK(all.size() == static_cast<std::size_t>(binomial(cap + d, d) + 0.5));
            std::set<MultiIndex> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(total_degree(all[i - 1]) <= total_degree(all[i]));
            for (const auto& p : all) {
                CHECK(total_degree(p) <= cap);
                for (int v : p) CHECK(v >= 0);
            }
        }
    }
    CHECK_THROWS_AS(multi_index_enumerate(0, 2), invalid_parameter);
}

TEST_CASE("ball h coefficients") {
    auto one = ball_h_coefficients(1, Rational(1, 2), 5);  // (1 - x)^-1
    for (const auto& t : one) CHECK(t.coefficient == doctest::Approx(1.0));

    auto lin = ball_h_coefficients(1, Rational(1), 6);  // (1 - x)^-2
    for (const auto& t : lin) CHECK(t.coefficient == doctest::Approx(t.index[0] + 1));

    auto two = ball_h_coefficients(2, Rational(1), 4);  // (1 - x1 - x2)^-3
    for (const auto& t : two) {
        if (t.index == MultiIndex{1, 1}) CHECK(t.coefficient == doctest::Approx(12));
        if (t.index == MultiIndex{2, 0}) CHECK(t.coefficient == doctest::Approx(6));
    }

    CHECK_THROWS_AS(ball_h_coefficients(1, Rational(0), 3), invalid_parameter);
}

TEST_CASE("ball h coefficients against Cauchy integrals") {
    for (auto k : {Rational(1, 3), Rational(5, 4), Rational(2)}) {
        double c2 = 3 * k.to_double();
        auto f2 = [&](cd x, cd y) { return std::pow(1.0 - x - y, -c2); };
        for (const auto& t : ball_h_coefficients(2, k, 6)) {
            double expected = cauchy_coefficient(f2, t.index[0], t.index[1], 0.35, 0.35);
            CHECK(t.coefficient == doctest::Approx(expected).epsilon(1e-10));
        }
        double c1 = 2 * k.to_double();
        auto f1 = [&](cd x, cd) { return std::pow(1.0 - x, -c1); };
        for (const auto& t : ball_h_coefficients(1, k, 10)) {
            double expected = cauchy_coefficient(f1, t.index[0], 0, 0.5, 0.5, 64);
            CHECK(t.coefficient == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("immersion coefficients") {
    // mu = alpha = 1 on the disc: 1/(1 - x - y) has coefficients C(p+m, p)
    auto ic = build_immersion({ball(1), 1, 1}, 8);
    CHECK(ic.entries.size() == 45);
    for (const auto& e : ic.entries) CHECK(e.coefficient == doctest::Approx(binomial(e.z[0] + e.w, e.w)));

    // w^m slice with z = 0 is (alpha)_m / m!, and m = 0 is the base h_k for k = mu alpha / genus
    HartogsSpec s{ball(2), Rational(3, 2), Rational(5, 2)};
    auto ic2 = build_immersion(s, 6);
    auto base = ball_h_coefficients(2, s.mu * s.alpha / Rational(3), 6);
    std::map<MultiIndex, double> m0;
    double weight = 1;
    for (const auto& e : ic2.entries) {
        CHECK(e.coefficient > 0);
        if (e.w == 0) m0[e.z] = e.coefficient;
        if (total_degree(e.z) == 0) {
            double expect = 1;
            for (int i = 0; i < e.w; ++i) expect *= (2.5 + i) / (i + 1);
            CHECK(e.coefficient == doctest::Approx(expect));
            weight = expect;
        }
    }
    CHECK(weight > 1);
    for (const auto& t : base) CHECK(m0.at(t.index) == doctest::Approx(t.coefficient));

    CHECK_THROWS_AS(build_immersion({parse_domain("I:2,2"), 1, 4}, 4), invalid_parameter);
    CHECK_THROWS_AS(build_immersion({ball(1), 0, 4}, 4), invalid_parameter);
}

TEST_CASE("immersion coefficients against Cauchy integrals") {
    for (auto [mu, alpha] : {std::pair{Rational(1), Rational(3)}, {Rational(2), Rational(3, 2)}, {Rational(1, 2), Rational(5)}}) {
        double m = mu.to_double(), a = alpha.to_double();
        auto f = [&](cd x, cd y) { return std::pow(std::pow(1.0 - x, m) - y, -a); };
        for (const auto& e : build_immersion({ball(1), mu, alpha}, 6).entries) {
            double expected = cauchy_coefficient(f, e.z[0], e.w, 0.3, 0.3);
            CHECK(e.coefficient == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("pullback verification") {
    HartogsSpec s{ball(1), 1, 3};
    auto ic = build_immersion(s, 60);
    auto check = verify_pullback(ic, pullback_grid(1, 0.4, 5));
    CHECK(check.max_rel_error < 1e-8);
    CHECK(check.within_tail_bound);

    auto origin = verify_pullback(ic, {HartogsPoint{{0.0}, 0.0}});
    CHECK(origin.max_rel_error < 1e-15);

    // w = 0 slice is the base potential (1 - |z|^2)^(-mu alpha)
    HartogsSpec s2{ball(1), 2, Rational(3, 2)};
    auto ic2 = build_immersion(s2, 80);
    HartogsPoint p{{std::polar(0.5, 1.0)}, 0.0};
    CHECK(verify_pullback(ic2, {p}).max_rel_error < 1e-8);

    auto d2 = verify_pullback(build_immersion({ball(2), Rational(3, 2), Rational(5, 2)}, 50), pullback_grid(2, 0.35, 4));
    CHECK(d2.max_rel_error < 1e-8);
    CHECK(d2.within_tail_bound);

    HartogsPoint outside{{0.9}, 0.5};  // |w|^2 = 0.25 > 1 - 0.81
    CHECK_THROWS_AS(verify_pullback(ic, {outside}), precondition_error);
    CHECK_THROWS_AS(verify_pullback(ic, {HartogsPoint{{0.0, 0.0}, 0.0}}), invalid_parameter);
}

TEST_CASE("tail bound dominates the truncation error") {
    for (int cap : {4, 8, 16}) {
        for (auto [mu, alpha] : {std::pair{Rational(1), Rational(3)}, {Rational(2), Rational(3, 2)}}) {
            HartogsSpec s{ball(1), mu, alpha};
            auto ic = build_immersion(s, cap);
            for (const auto& pt : pullback_grid(1, 0.45, 4)) {
                auto c = verify_pullback(ic, {pt});
                double x = std::norm(pt.z[0]), y = std::norm(pt.w);
                double bound = pullback_tail_bound(s, cap, x, y);
                CHECK(c.max_rel_error <= bound * (1 + 1e-9) + 1e-13);
                CHECK(c.within_tail_bound);
            }
        }
    }
}
