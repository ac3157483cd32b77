#pragma once

#include "gratio/params.hpp"

namespace gratio {

/// Tolerance bundle for numerical comparisons.
struct Precision {
    double abs_tol;
    double rel_tol;

    Precision(double abs_tol_, double rel_tol_) : abs_tol(abs_tol_), rel_tol(rel_tol_) {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("Precision: tolerances must be positive");
        if (rel_tol < 2.220446049250313e-16)
            throw std::invalid_argument("Precision: rel_tol below machine epsilon");
    }
};

// Classical special functions, double precision, real positive arguments.
// All of them reject NaN/Inf and out-of-domain arguments with std::domain_error.

/// log Gamma(x) for x > 0. Stirling series with argument raising below x = 8.
double log_gamma(double x);

/// Gamma(x) for x > 0, via exp(log_gamma).
double gamma_fn(double x);

/// psi(x) = (log Gamma)'(x) for x > 0.
double digamma(double x);

/// psi'(x) for x > 0.
double trigamma(double x);

/// Lower incomplete gamma  gamma(lambda, x) = int_0^x t^{lambda-1} e^{-t} dt,
/// non-normalized. Series for x <= lambda + 1, continued fraction for the
/// upper complement otherwise.
double lower_incomplete_gamma(double lambda, double x);

/// Complete Beta function B(p, q).
double complete_beta(double p, double q);

/// Incomplete Beta  B(p, q, x) = int_0^x t^{p-1} (1-t)^{q-1} dt, non-normalized,
/// 0 <= x <= 1. Continued fraction, with the symmetry
/// B(p,q,x) = B(p,q) - B(q,p,1-x) applied for x > p/(p+q).
double incomplete_beta(double p, double q, double x);

/// Gamma(x+b) / Gamma(x+a), evaluated as exp(log_gamma(x+b) - log_gamma(x+a)).
double gamma_ratio(double x, const ParamPair& pair);

}  // namespace gratio
