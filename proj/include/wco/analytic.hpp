#pragma once

#include "wco/rational.hpp"

#include <utility>
#include <vector>

namespace wco {

// Radial density rho(z) = sum a_k z^k (nonnegative coefficients, at least one
// positive beyond the constant term) or rho(z) = exp(z).
struct RadialDensity {
    bool is_exp = true;
    std::vector<double> coeffs;  // used when !is_exp

    static RadialDensity exponential() { return RadialDensity{true, {}}; }
    static RadialDensity polynomial(std::vector<double> coeffs);

    double operator()(double z) const;
    double log_value(double z) const;  // log rho(z), stable for exp
    bool is_polynomial() const { return !is_exp; }
};

// Small real square matrix for the linear-map instances on R^n.
struct RealMatrix {
    int n = 0;
    std::vector<double> a;  // row-major

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    std::vector<double> apply(const std::vector<double>& x) const;
    double det() const;
    RealMatrix inverse() const;  // throws std::domain_error on singular input
    double operator_norm() const;  // largest singular value
};

// Closed-form Radon-Nikodym derivative of the composition operator induced by
// an invertible linear map on (R^n, rho(|x|^2) dx):
//   h(x) = (1/|det phi|) * rho(|phi^{-1} x|^2) / rho(|x|^2).
double rn_linear_gaussian(const RealMatrix& phi, const RadialDensity& rho,
                          const std::vector<double>& x);

// The two-inequality system deciding hyponormality of the alpha-transformed
// operator for phi(x1,x2) = (theta x2, x1) on the Gaussian-type space:
//   (1-2a) t^2 + 2a - 1 <= 0   and   t^4 (a-1) + t^2 - a <= 0.
std::pair<bool, bool> stages_feasible(double alpha, double theta);
std::pair<bool, bool> stages_feasible_exact(const BigRat& alpha, const BigRat& theta);

}  // namespace wco
