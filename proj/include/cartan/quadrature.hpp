#pragma once

#include <functional>

namespace cartan {

struct QuadratureResult {
    double value;
    double error;  // estimated absolute error
};

/// int_0^1 t^p (1 - t)^q dt for p >= 0, q > -1, by double-exponential
/// quadrature. The (1 - t)^q factor is evaluated from the exact complement
/// 1 - t near the right endpoint, so integrable singularities there cost no
/// accuracy. Throws quadrature_error when the estimated relative error
/// exceeds rel_tol.
QuadratureResult beta_quadrature(double p, double q, double rel_tol);

/// int_a^b f over a finite interval, adaptive; throws quadrature_error when
/// the estimate exceeds max(rel_tol * |value|, abs_tol).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol = 0.0);

}  // namespace cartan
