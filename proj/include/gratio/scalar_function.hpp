#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gratio {

/// Declared envelope of an integrand on (0, inf):
///   |f(t)| <= scale * t^{pow_zero-1}                    near 0,
///   |f(t)| <= scale * max(1,t)^{pow_inf} * e^{-exp_rate t}  away from 0.
/// The quadrature engine refuses integrands without a declaration; tail
/// truncation bounds are computed from it.
struct GrowthClass {
    double scale = 1.0;
    double pow_zero = 1.0;
    double pow_inf = 0.0;
    double exp_rate = 0.0;

    static GrowthClass bounded(double c) { return {c, 1.0, 0.0, 0.0}; }
    static GrowthClass linear(double c) { return {c, 1.0, 1.0, 0.0}; }
    static GrowthClass power_at_zero(double lambda, double c, double pinf = 0.0,
                                     double rate = 0.0) {
        return {c, lambda, pinf, rate};
    }
    static GrowthClass exp_decay(double c, double rate, double pinf = 0.0) {
        return {c, 1.0, pinf, rate};
    }
};

/// Extra structure carried by exactly piecewise-linear integrands (the kernel
/// functions): kink locations for panel splitting plus an exact tail
/// functional for algebraic weights.
struct PiecewiseLinearInfo {
    /// Ascending kink points <= T.
    std::function<std::vector<double>(double)> kinks_up_to;
    /// The unit-shift structure holds for s >= tail_start.
    double tail_start = 0.0;
    /// Exact value of int_T^inf f(t) (x+t)^{-rho} dt, valid for T >= tail_start.
    std::function<double(double x, double rho, double T)> stieltjes_tail;
    /// Certification constant: f(s) <= linear_bound * max(s, 1).
    double linear_bound = 0.0;
};

/// A real function of one positive real variable, optionally bundled with its
/// analytic first derivative and integration metadata. The unit of exchange
/// between the families, transforms and class-check layers.
struct ScalarFunction {
    std::function<double(double)> eval;
    std::function<double(double)> deriv;  // empty when not available
    std::string label;
    std::optional<GrowthClass> growth;
    std::optional<PiecewiseLinearInfo> piecewise;

    double operator()(double x) const { return eval(x); }
    bool has_deriv() const { return static_cast<bool>(deriv); }
};

inline ScalarFunction make_function(std::function<double(double)> eval,
                                    std::function<double(double)> deriv,
                                    std::string label) {
    ScalarFunction f;
    f.eval = std::move(eval);
    f.deriv = std::move(deriv);
    f.label = std::move(label);
    return f;
}

/// Pointwise product with the product-rule derivative.
inline ScalarFunction sf_product(const ScalarFunction& f, const ScalarFunction& g) {
    ScalarFunction r;
    r.eval = [f, g](double x) { return f.eval(x) * g.eval(x); };
    if (f.has_deriv() && g.has_deriv())
        r.deriv = [f, g](double x) {
            return f.deriv(x) * g.eval(x) + f.eval(x) * g.deriv(x);
        };
    r.label = f.label + "*" + g.label;
    return r;
}

/// f^alpha for positive f, with the chain-rule derivative.
inline ScalarFunction sf_power(const ScalarFunction& f, double alpha) {
    ScalarFunction r;
    r.eval = [f, alpha](double x) { return std::pow(f.eval(x), alpha); };
    if (f.has_deriv())
        r.deriv = [f, alpha](double x) {
            return alpha * std::pow(f.eval(x), alpha - 1.0) * f.deriv(x);
        };
    r.label = "(" + f.label + ")^" + std::to_string(alpha);
    return r;
}

}  // namespace gratio
