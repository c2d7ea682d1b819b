#include <doctest.h>

#include "cartan/error.hpp"
#include "cartan/factored.hpp"

#include <random>

using namespace cartan;

namespace {

FactoredRational lin(std::int64_t slope, std::int64_t intercept) {
    return FactoredRational::linear(Rational(slope), Rational(intercept));
}

// Random linear factors with small integer/half-integer coefficients.
struct FactorGen {
    std::mt19937 rng{20240611};

    LinearFactor next() {
        std::uniform_int_distribution<int> slope(1, 3), num(-6, 6), den(1, 2);
        int s = slope(rng) * (rng() % 4 == 0 ? -1 : 1);
        return {Rational(s), Rational(num(rng), den(rng))};
    }

    std::vector<LinearFactor> list(int n) {
        std::vector<LinearFactor> v;
        for (int i = 0; i < n; ++i) v.push_back(next());
        return v;
    }
};

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse(" 7 / 2 ") == Rational(7, 2));
    CHECK_THROWS_AS(Rational::parse("0.5"), invalid_parameter);
    CHECK_THROWS_AS(Rational::parse("1/0"), invalid_parameter);
    CHECK_THROWS_AS(Rational::parse("abc"), invalid_parameter);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("mul cancels common factors") {
    CHECK(lin(1, 1) / lin(1, 2) * (lin(1, 2) / lin(1, 3)) == lin(1, 1) / lin(1, 3));

    FactoredRational c(Rational(7, 3));
    CHECK(c * FactoredRational() == c);

    auto f = lin(2, 1) * (FactoredRational() / lin(2, 1));
    CHECK(f == FactoredRational());
    CHECK(f.constant_value() == Rational(1));
}

TEST_CASE("eval_at") {
    auto f = lin(1, 1) / lin(1, 3);
    CHECK(f.eval_at(Rational(1)) == Rational(1, 2));
    CHECK(lin(1, -2).eval_at(Rational(2)) == Rational(0));

    auto g = FactoredRational() / lin(1, -2);
    CHECK_THROWS_AS(g.eval_at(Rational(2)), pole_error);
    try {
        g.eval_at(Rational(2));
    } catch (const pole_error& e) {
        CHECK(std::string(e.what()).find("(x-2)") != std::string::npos);
    }
}

TEST_CASE("is_constant examples") {
    auto a = lin(1, 1) * lin(1, 2) / (lin(1, 2) * lin(1, 1));
    CHECK(a.constant_value() == Rational(1));

    CHECK_FALSE((lin(1, 1) / lin(1, 2)).is_constant());

    auto b = lin(2, 2) / lin(1, 1);
    CHECK(b.constant_value() == Rational(2));
}

TEST_CASE("pretty printing uses integer-coefficient factors") {
    auto f = lin(1, 3) / lin(2, 7);
    CHECK(f.pretty() == "(m+3)/((2m+7))");
    auto g = FactoredRational::linear(Rational(1), Rational(5, 2)) *
             FactoredRational::linear(Rational(1), Rational(7, 2)) / lin(2, 3);
    CHECK(g.pretty() == "1/4*(2m+5)(2m+7)/((2m+3))");
    CHECK((FactoredRational(Rational(12)) / (lin(1, 2) * lin(1, 2) * lin(1, 1))).pretty("s") ==
          "12/((s+1)(s+2)^2)");
    CHECK(FactoredRational(Rational(0)).pretty() == "0");
}

TEST_CASE("compose_affine substitutes a linear map") {
    // f(x) = (x+1)/(x+3), x = 2y - 1  ->  2y / (2y + 2) = y / (y + 1)
    auto f = lin(1, 1) / lin(1, 3);
    auto g = f.compose_affine(Rational(2), Rational(-1));
    CHECK(g == lin(1, 0) / lin(1, 1));
    for (int y = 0; y < 5; ++y) CHECK(g.eval_at(Rational(y)) == f.eval_at(Rational(2 * y - 1)));
}

TEST_CASE("zero constant factors") {
    LinearFactor zero{Rational(0), Rational(0)};
    auto z = FactoredRational::from_factors(Rational(3), std::span(&zero, 1), {});
    CHECK(z.is_zero());
    CHECK(z.constant_value() == Rational(0));
    CHECK_THROWS_AS(FactoredRational::from_factors(Rational(1), {}, std::span(&zero, 1)), pole_error);
}

TEST_CASE("serialize round-trips") {
    FactorGen gen;
    for (int trial = 0; trial < 200; ++trial) {
        auto num = gen.list(static_cast<int>(gen.rng() % 5));
        auto den = gen.list(static_cast<int>(gen.rng() % 5));
        auto f = FactoredRational::from_factors(Rational(static_cast<std::int64_t>(gen.rng() % 9) + 1, 4), num, den);
        CHECK(FactoredRational::deserialize(f.serialize()) == f);
    }
    CHECK(FactoredRational::deserialize("num: [3]; den: [7/2]; scale: 1/2") == lin(1, 3) / lin(2, 7));
    CHECK_THROWS_AS(FactoredRational::deserialize("num: 3; scale: 1"), invalid_parameter);
}

TEST_CASE("constancy agrees with sampling and with coefficient expansion") {
    FactorGen gen;
    int constants = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto num = gen.list(static_cast<int>(gen.rng() % 6));
        std::vector<LinearFactor> den;
        if (trial % 3 == 0) {
            // a rescaled permutation of the numerator: constant by construction
            den = num;
            std::shuffle(den.begin(), den.end(), gen.rng);
            for (auto& f : den) {
                Rational k(static_cast<std::int64_t>(gen.rng() % 3) + 1);
                f = {f.slope * k, f.intercept * k};
            }
        } else {
            den = gen.list(static_cast<int>(gen.rng() % 6));
        }
        Rational scale(static_cast<std::int64_t>(gen.rng() % 7) + 1, 3);
        auto f = FactoredRational::from_factors(scale, num, den);
        auto symbolic = f.constant_value();
        auto expanded = constant_by_expansion(scale, num, den);
        CHECK(symbolic.has_value() == expanded.has_value());
        if (symbolic && expanded) CHECK(*symbolic == *expanded);

        // A rational function of degree <= n constant at n + 2 points is constant.
        int n = static_cast<int>(std::max(num.size(), den.size()));
        std::vector<Rational> values;
        for (std::int64_t x = 0; static_cast<int>(values.size()) < n + 2; ++x) {
            try {
                values.push_back(f.eval_at(Rational(x * 7 + 1, 5)));
            } catch (const pole_error&) {
            }
        }
        bool sampled = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values.front(); });
        CHECK(sampled == symbolic.has_value());
        if (symbolic) ++constants;
    }
    CHECK(constants >= 100);
}

TEST_CASE("mul is associative and commutative on canonical forms") {
    FactorGen gen;
    for (int trial = 0; trial < 100; ++trial) {
        auto make = [&] {
            return FactoredRational::from_factors(Rational(static_cast<std::int64_t>(gen.rng() % 5) + 1), gen.list(3),
                                                  gen.list(2));
        };
        auto f = make(), g = make(), h = make();
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
    }
}
