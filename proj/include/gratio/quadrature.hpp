#pragma once

#include "gratio/scalar_function.hpp"

#include <stdexcept>
#include <vector>

namespace gratio {

/// Controls for the semi-infinite quadrature engine.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    /// Extra panel split points (integrand kinks and scale points).
    std::vector<double> breakpoints;
    struct Truncation {
        double hard_cap = 1e9;        // never truncate beyond this
        double weight_log_cut = 45.0;  // initial T solves (x+rate)*T = this
    } truncation;
};

/// Raised when the requested tolerance cannot be met; carries the achieved
/// error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_error(achieved) {}
    double achieved_error;
};

/// int_0^inf e^{-x t} f(t) dt.  Requires a declared growth class on f and
/// x + f.growth->exp_rate > 0. Panels are split at spec breakpoints, declared
/// kinks and the scale points 1/x, 10/x; a tanh-sinh rule takes the first
/// panel when the declared power at zero makes the integrand non-smooth.
/// The analytic tail bound for the truncation point is added to the error
/// estimate.
double laplace(const ScalarFunction& f, double x, const QuadratureSpec& spec);

/// int_0^inf u(t) / (x+t)^rho dt for rho > 1 (rho > 2 when u grows linearly).
/// Piecewise-linear integrands with an exact-tail declaration are truncated
/// at a small T with the tail evaluated analytically; otherwise the declared
/// envelope solves for T.
double stieltjes_integral(const ScalarFunction& u, double rho, double x,
                          const QuadratureSpec& spec);

/// Finite-range integral with an optional algebraic factor (t-a)^{pow_left-1}
/// at the left endpoint.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec, double pow_left = 1.0);

namespace detail {

struct PanelEstimate {
    double value;
    double error;
};

/// Gauss-Kronrod 7-15 on [a, b].
PanelEstimate gk15(const std::function<double(double)>& f, double a, double b);

/// tanh-sinh rule on [a, b], tolerant of an integrable singularity at a.
PanelEstimate tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double tol);

/// Hurwitz zeta  sum_{m>=0} (q+m)^{-s}  for s > 1, q >= 1 (Euler-Maclaurin).
double hurwitz_zeta(double s, double q);

}  // namespace detail

}  // namespace gratio
