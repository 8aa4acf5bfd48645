#pragma once

// One-dimensional quadrature rules.

#include <functional>
#include <vector>

namespace octavia::quadrature {

struct Rule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
const Rule& gauss_legendre(int n);

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n = 20);

/// Tanh-sinh on [a, b]. The integrand receives (x, x - a, b - x) with the endpoint distances
/// computed without cancellation. Levels are refined until two successive estimates agree to tol.
double tanh_sinh(const std::function<double(double, double, double)>& f, double a, double b, double tol = 1e-15,
                 double* error = nullptr);

}  // namespace octavia::quadrature
