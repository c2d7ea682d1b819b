#include <doctest.h>

#include "cartan/moments.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

using namespace cartan;
using boost::math::quadrature::tanh_sinh;

namespace {

// Polar coordinates on a bounded symmetric domain of rank r <= 2: the
// generic norm is prod (1 - t_i) and the radial density is
// prod t_i^b * prod_{i<j} |t_i - t_j|^a on [0,1]^r. Integrated in
// u = 1 - t so the singular endpoint sits at 0.
double polar_moment(const CartanDomain& d, double s) {
    tanh_sinh<double> ts;
    auto radial = [&](double u) { return std::pow(1 - u, d.b) * std::pow(u, s); };
    if (d.r == 1) return ts.integrate(radial, 0.0, 1.0, 1e-13);
    REQUIRE(d.r == 2);
    auto inner = [&](double u1) {
        auto g = [&](double u2) { return radial(u2) * std::pow(std::abs(u1 - u2), d.a); };
        // split at the kink u2 = u1
        double lo = u1 > 0 ? ts.integrate(g, 0.0, u1, 1e-11) : 0.0;
        double hi = u1 < 1 ? ts.integrate(g, u1, 1.0, 1e-11) : 0.0;
        return radial(u1) * (lo + hi);
    };
    return ts.integrate(inner, 0.0, 1.0, 1e-11);
}

}  // namespace

TEST_CASE("moment ratio examples") {
    auto disc = moment_ratio(ball(1));
    CHECK(disc.as_rational.pretty("s") == "1/((s+1))");
    CHECK(disc.block_lengths == std::vector<int>{1});

    auto b2 = moment_ratio(ball(2));
    CHECK(b2.as_rational.pretty("s") == "2/((s+1)(s+2))");

    auto iv = moment_ratio(make_domain(Family::IV, {4}));
    CHECK(iv.as_rational.pretty("s") == "12/((s+1)(s+2)^2(s+3))");
    CHECK(iv.block_lengths == std::vector<int>{3, 1});

    auto i22 = moment_ratio(make_domain(Family::I, {2, 2}));
    CHECK(i22.as_rational == iv.as_rational);
}

TEST_CASE("moment ratio against polar-coordinate quadrature") {
    std::vector<CartanDomain> domains = {ball(1),
                                         ball(2),
                                         ball(3),
                                         make_domain(Family::I, {2, 2}),
                                         make_domain(Family::I, {2, 3}),
                                         make_domain(Family::II, {2}),
                                         make_domain(Family::III, {4}),
                                         make_domain(Family::III, {5}),
                                         make_domain(Family::IV, {5}),
                                         make_domain(Family::V, {})};
    for (const auto& d : domains) {
        double norm0 = polar_moment(d, 0.0);
        auto m = moment_ratio(d);
        for (auto s : {Rational(1, 2), Rational(1), Rational(3), Rational(-1, 3)}) {
            CAPTURE(d.label());
            CAPTURE(s.str());
            double expected = polar_moment(d, s.to_double()) / norm0;
            double got = m.as_rational.eval_at(s).to_double();
            CHECK(got == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("moment ratio properties over the catalog") {
    for (const auto& d : enumerate_catalog(27)) {
        auto m = moment_ratio(d);
        CAPTURE(d.label());
        CHECK(m.as_rational.eval_at(Rational(0)) == Rational(1));
        CHECK(m.as_rational.denom_degree() == d.dim);
        CHECK(m.as_rational.numer_degree() == 0);
        CHECK(static_cast<int>(moment_denominator_factors(d).size()) == d.dim);
        int total = 0;
        for (int l : m.block_lengths) total += l;
        CHECK(total == d.dim);

        // strictly decreasing in s on s > -1
        Rational prev = m.as_rational.eval_at(Rational(-9, 10));
        for (int k = -8; k <= 10; ++k) {
            Rational cur = m.as_rational.eval_at(Rational(k, 10));
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("moment convergence") {
    auto d = make_domain(Family::I, {2, 2});
    CHECK(moment_converges(d, Rational(0)));
    CHECK(moment_converges(d, Rational(-1, 2)));
    CHECK_FALSE(moment_converges(d, Rational(-1)));
    CHECK_FALSE(moment_converges(d, Rational(-3, 2)));
    // the only pole on the boundary of convergence sits at s = -1
    auto m = moment_ratio(d).as_rational;
    CHECK(m.denom_shifts().begin()->first == Rational(1));
}
