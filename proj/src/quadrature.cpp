#include "cartan/quadrature.hpp"

#include "cartan/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <string>

namespace cartan {

namespace {

// The rule caches its abscissas; one instance per thread.
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
    thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
    return rule;
}

void check(const QuadratureResult& r, double rel_tol, double abs_tol, const char* what) {
    if (!std::isfinite(r.value) || !(r.error <= std::max(rel_tol * std::abs(r.value), abs_tol)))
        throw quadrature_error(std::string(what) + ": requested tolerance not achieved (value " +
                               std::to_string(r.value) + ", error estimate " +
                               std::to_string(r.error) + ")");
}

}  // namespace

QuadratureResult beta_quadrature(double p, double q, double rel_tol) {
    if (!(p >= 0) || !(q > -1))
        throw quadrature_error("beta_quadrature: exponents out of range (p=" + std::to_string(p) +
                               ", q=" + std::to_string(q) + ")");
    // xc is the signed distance to the nearest endpoint: 1 - t on the right half.
    auto f = [p, q](double t, double xc) {
        double one_minus_t = xc > 0 ? xc : 1.0 - t;
        double tp = p == 0 ? 1.0 : std::pow(t, p);
        return tp * std::pow(one_minus_t, q);
    };
    QuadratureResult r{0, 0};
    double l1 = 0;
    if (q < 0) {
        // u = (1-t)^(q+1) leaves the bounded integrand (1 - u^(1/(q+1)))^p / (q+1)
        const double e = 1.0 / (q + 1);
        auto g = [p, e](double u) { return p == 0 ? 1.0 : std::pow(-std::expm1(e * std::log(u)), p); };
        r.value = tanh_sinh_rule().integrate(g, 0.0, 1.0, rel_tol * 0.1, &r.error, &l1) * e;
        r.error *= e;
        check(r, rel_tol, 0.0, "beta_quadrature");
        return r;
    }
    r.value = tanh_sinh_rule().integrate(f, 0.0, 1.0, rel_tol * 0.1, &r.error, &l1);
    check(r, rel_tol, 0.0, "beta_quadrature");
    return r;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol) {
    QuadratureResult r{0, 0};
    r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 20, rel_tol * 0.1,
                                                                           &r.error);
    check(r, rel_tol, abs_tol, "integrate");
    return r;
}

}  // namespace cartan
