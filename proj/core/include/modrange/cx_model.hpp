/*
 * cx_model.hpp — C(X) as a Hilbert C(X)-module via finite discretization.
 *
 * X is replaced by a finite set of sample points, one evaluation character
 * per point, all fiber dimensions 1. A multiplication operator f ↦ g·f
 * becomes the family of 1×1 blocks [g(x_i)], which makes the norm and radius
 * reductions exact at the sample points.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "modrange/verification.hpp"

namespace modrange {

enum class SpaceKind { Circle, Interval, Custom };

struct DiscretizedSpace {
    SpaceKind kind = SpaceKind::Interval;
    std::vector<double> points;  // interval: strictly increasing; circle/custom: distinct
    ModuleShape shape;           // one character per point, all dims 1
};

/// m uniform points on [0,1] (m = 1 gives {0}).
DiscretizedSpace make_interval(int m);
/// m uniform angles 2πj/m on the circle.
DiscretizedSpace make_circle(int m);
DiscretizedSpace make_custom(std::vector<double> points);

struct MultiplicationOperator {
    std::vector<Complex> symbol;  // g sampled at the space points
    ModuleOperator op;            // 1×1 blocks [g(x_i)]
};

/// Builds the multiplication operator for a symbol given as a function.
MultiplicationOperator build_multiplication(const DiscretizedSpace& space,
                                            const std::function<Complex(double)>& g);
/// Builds from an explicit value table (one value per sample point).
MultiplicationOperator build_multiplication(const DiscretizedSpace& space,
                                            std::vector<Complex> values);

/// Verifies ⫴M⫴ = max_i |g(x_i)| and, when g is real-valued within tol,
/// ω_o(M) = ⫴M⫴.
std::vector<CheckResult> check_cx_identities(const MultiplicationOperator& M,
                                             double tol = kTolAnalytic);

}  // namespace modrange
