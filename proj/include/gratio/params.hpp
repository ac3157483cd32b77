#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gratio {

/// Parameter pair (a, b) with the standing assumption 0 < b < a.
/// lambda() = a - b is the order parameter used throughout.
struct ParamPair {
    double a;
    double b;

    ParamPair(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw std::domain_error("ParamPair: parameters must be finite");
        if (!(0.0 < b && b < a))
            throw std::domain_error("ParamPair: require 0 < b < a, got a=" +
                                    std::to_string(a) + " b=" + std::to_string(b));
    }

    double lambda() const { return a - b; }
};

/// Parameters restricted to Omega = { 0 < b < a, a > 1 }, the region where
/// the kernel positivity results hold.
struct OmegaParams {
    ParamPair pair;

    explicit OmegaParams(ParamPair p) : pair(p) {
        if (!(pair.a > 1.0))
            throw std::domain_error("OmegaParams: require a > 1, got a=" +
                                    std::to_string(pair.a));
    }
    OmegaParams(double a_, double b_) : OmegaParams(ParamPair(a_, b_)) {}

    double a() const { return pair.a; }
    double b() const { return pair.b; }
    double lambda() const { return pair.lambda(); }
};

}  // namespace gratio
