#include "wco/analytic.hpp"

#include "wco/numeric.hpp"
#include "wco/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace wco {

RadialDensity RadialDensity::polynomial(std::vector<double> coeffs) {
    bool tail_positive = false;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] < 0.0)
            throw std::invalid_argument("RadialDensity: coefficients must be nonnegative");
        if (k >= 1 && coeffs[k] > 0.0) tail_positive = true;
    }
    if (!tail_positive)
        throw std::invalid_argument("RadialDensity: need a positive coefficient beyond degree 0");
    return RadialDensity{false, std::move(coeffs)};
}

double RadialDensity::operator()(double z) const {
    if (is_exp) return std::exp(z);
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

double RadialDensity::log_value(double z) const {
    if (is_exp) return z;
    return std::log((*this)(z));
}

std::vector<double> RealMatrix::apply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("RealMatrix: vector length mismatch");
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
    return y;
}

namespace {

// LU with partial pivoting; returns det and the inverse when wanted
double lu_invert(const RealMatrix& m, RealMatrix* inv) {
    const int n = m.n;
    std::vector<double> a = m.a;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    double det = 1.0;
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(at(col, j), at(piv, j));
            std::swap(perm[col], perm[piv]);
            det = -det;
        }
        double d = at(col, col);
        det *= d;
        if (std::abs(d) < 1e-300) return 0.0;
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / d;
            at(r, col) = f;
            for (int j = col + 1; j < n; ++j) at(r, j) -= f * at(col, j);
        }
    }
    if (inv) {
        inv->n = n;
        inv->a.assign(static_cast<size_t>(n) * n, 0.0);
        for (int col = 0; col < n; ++col) {
            std::vector<double> e(n, 0.0);
            e[col] = 1.0;
            // forward substitution with the permutation applied
            std::vector<double> y(n);
            for (int i = 0; i < n; ++i) {
                double acc = e[perm[i]];
                for (int j = 0; j < i; ++j) acc -= at(i, j) * y[j];
                y[i] = acc;
            }
            for (int i = n - 1; i >= 0; --i) {
                double acc = y[i];
                for (int j = i + 1; j < n; ++j) acc -= at(i, j) * inv->at(j, col);
                inv->at(i, col) = acc / at(i, i);
            }
        }
    }
    return det;
}

}  // namespace

double RealMatrix::det() const {
    return lu_invert(*this, nullptr);
}

RealMatrix RealMatrix::inverse() const {
    RealMatrix inv;
    double d = lu_invert(*this, &inv);
    if (d == 0.0 || !std::isfinite(d)) throw std::domain_error("singular matrix");
    return inv;
}

double RealMatrix::operator_norm() const {
    // largest singular value via the Hermitian eigensolver on M^T M
    DenseMatrix mtm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += at(k, i) * at(k, j);
            mtm.at(i, j) = acc;
        }
    EigenDecomposition e = sym_eig(mtm);
    return std::sqrt(std::max(0.0, e.values.back()));
}

double rn_linear_gaussian(const RealMatrix& phi, const RadialDensity& rho,
                          const std::vector<double>& x) {
    double d = phi.det();
    if (d == 0.0 || !std::isfinite(d)) throw std::domain_error("singular matrix");
    RealMatrix inv = phi.inverse();
    auto norm2 = [](const std::vector<double>& v) {
        double acc = 0.0;
        for (double t : v) acc += t * t;
        return acc;
    };
    double zi = norm2(inv.apply(x));
    double z = norm2(x);
    if (rho.is_exp) return std::exp(zi - z) / std::abs(d);
    return rho(zi) / (rho(z) * std::abs(d));
}

std::pair<bool, bool> stages_feasible(double alpha, double theta) {
    double t2 = theta * theta;
    double first = (1.0 - 2.0 * alpha) * t2 + 2.0 * alpha - 1.0;
    double second = t2 * t2 * (alpha - 1.0) + t2 - alpha;
    return {first <= 0.0, second <= 0.0};
}

std::pair<bool, bool> stages_feasible_exact(const BigRat& alpha, const BigRat& theta) {
    BigRat t2 = theta * theta;
    BigRat first = (1 - 2 * alpha) * t2 + 2 * alpha - 1;
    BigRat second = t2 * t2 * (alpha - 1) + t2 - alpha;
    return {first <= 0, second <= 0};
}

}  // namespace wco
