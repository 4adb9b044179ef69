#pragma once

#include "wco/space.hpp"
#include "wco/verdict.hpp"

#include <vector>

namespace wco {

// Dense square complex matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() : n_(0) {}
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int dim() const { return n_; }
    Complex& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    static DenseMatrix identity(int n);
    DenseMatrix adjoint() const;  // conjugate transpose
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    double frobenius() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;

private:
    int n_;
    std::vector<Complex> a_;
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // orthonormal columns; column k pairs with values[k]
};

// A = C_{phi,w} in the basis e_x = chi_{x}/sqrt(mass(x)):
//   A[x,y] = w(x) sqrt(mass(x)/mass(y)) if phi(x) = y, else 0.
DenseMatrix matrix_of(const PointSpace& s);

// Cyclic Jacobi eigendecomposition of a Hermitian matrix (native complex
// rotations). Deterministic; throws std::invalid_argument on non-Hermitian
// input.
EigenDecomposition sym_eig(const DenseMatrix& s);

// V Lambda^t V* for PSD s and t > 0. Eigenvalues in [-floor, 0) are clamped
// to 0; below the floor is an error. floor = 1e-10 * max(1, lambda_max).
DenseMatrix matrix_power_psd(const DenseMatrix& s, double t);

struct PolarDecomposition {
    DenseMatrix u;  // partial isometry with ker u = ker a
    DenseMatrix m;  // (a* a)^{1/2}
};

// Polar decomposition a = u m. The pseudoinverse cutoff is relative:
// singular values <= 1e-10 * s_max are treated as exact kernel directions.
PolarDecomposition polar(const DenseMatrix& a);

// Delta_alpha(a) = |a|^alpha u |a|^{1-alpha}, alpha in (0,1].
DenseMatrix aluthge_matrix(const DenseMatrix& a, double alpha);

// holds iff min eigenvalue of (t - s) >= -tol; both inputs Hermitian.
Verdict psd_order_test(const DenseMatrix& s, const DenseMatrix& t, double tol);

}  // namespace wco
