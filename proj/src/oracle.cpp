#include "wco/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wco {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
    DenseMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            Complex aik = at(i, k);
            if (aik == Complex(0, 0)) continue;
            for (int j = 0; j < n_; ++j) m.at(i, j) += aik * rhs.at(k, j);
        }
    return m;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
    DenseMatrix m(n_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
    return m;
}

std::vector<Complex> DenseMatrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("DenseMatrix: vector length mismatch");
    std::vector<Complex> out(n_, Complex(0, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

double DenseMatrix::frobenius() const {
    double acc = 0.0;
    for (const Complex& z : a_) acc += std::norm(z);
    return std::sqrt(acc);
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool DenseMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

DenseMatrix matrix_of(const PointSpace& s) {
    DenseMatrix a(s.size());
    for (int x = 0; x < s.size(); ++x) {
        int y = s.phi(x);
        a.at(x, y) = s.weight(x) * std::sqrt(s.mass(x) / s.mass(y));
    }
    return a;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double acc = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) acc += std::norm(a.at(i, j));
    return std::sqrt(acc);
}

}  // namespace

EigenDecomposition sym_eig(const DenseMatrix& s) {
    const int n = s.dim();
    const double scale = std::max(1.0, s.max_abs());
    if (!s.is_hermitian(1e-12 * scale))
        throw std::invalid_argument("sym_eig: non-Hermitian input");

    DenseMatrix a = s;
    // exact symmetrization of roundoff-level asymmetry
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Complex m = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = m;
            a.at(j, i) = std::conj(m);
        }
        a.at(i, i) = Complex(a.at(i, i).real(), 0.0);
    }
    DenseMatrix v = DenseMatrix::identity(n);

    const double fro = std::max(a.frobenius(), 1e-300);
    const double stop = 1e-14 * fro;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Complex apq = a.at(p, q);
                double abs_apq = std::abs(apq);
                if (abs_apq <= 1e-18 * fro) continue;
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                // complex rotation: s = sigma * phase(apq) zeroes the pivot
                Complex phase = apq / abs_apq;
                double tau = (aqq - app) / (2.0 * abs_apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                Complex sv = (t * c) * phase;

                // A <- J* A J with J = I except J[p,p]=c, J[p,q]=s, J[q,p]=-conj(s), J[q,q]=c
                for (int k = 0; k < n; ++k) {
                    Complex akp = a.at(k, p);
                    Complex akq = a.at(k, q);
                    a.at(k, p) = c * akp - std::conj(sv) * akq;
                    a.at(k, q) = sv * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    Complex apk = a.at(p, k);
                    Complex aqk = a.at(q, k);
                    a.at(p, k) = c * apk - sv * aqk;
                    a.at(q, k) = std::conj(sv) * apk + c * aqk;
                }
                a.at(p, q) = Complex(0, 0);
                a.at(q, p) = Complex(0, 0);
                a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
                a.at(q, q) = Complex(a.at(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    Complex vkp = v.at(k, p);
                    Complex vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - std::conj(sv) * vkq;
                    v.at(k, q) = sv * vkp + c * vkq;
                }
            }
        }
    }

    EigenDecomposition out;
    out.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a.at(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return diag[i] < diag[j]; });
    out.vectors = DenseMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
    }
    return out;
}

namespace {

DenseMatrix assemble_from_spectrum(const EigenDecomposition& e,
                                   const std::vector<double>& lambda) {
    const int n = e.vectors.dim();
    DenseMatrix m(n);
    for (int k = 0; k < n; ++k) {
        if (lambda[k] == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            Complex vik = e.vectors.at(i, k);
            if (vik == Complex(0, 0)) continue;
            Complex row = lambda[k] * vik;
            for (int j = 0; j < n; ++j) m.at(i, j) += row * std::conj(e.vectors.at(j, k));
        }
    }
    return m;
}

}  // namespace

DenseMatrix matrix_power_psd(const DenseMatrix& s, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("matrix_power_psd: t must be positive");
    EigenDecomposition e = sym_eig(s);
    double lmax = e.values.empty() ? 0.0 : e.values.back();
    double floor = 1e-10 * std::max(1.0, lmax);
    std::vector<double> powered(e.values.size());
    for (size_t k = 0; k < e.values.size(); ++k) {
        double lam = e.values[k];
        if (lam < -floor) throw std::domain_error("matrix_power_psd: eigenvalue below PSD floor");
        // the roundoff band around zero holds exact kernel directions; fractional
        // powers would otherwise blow the noise up (eps^{1/4} is not small)
        if (lam < floor) lam = 0.0;
        powered[k] = std::pow(lam, t);
    }
    return assemble_from_spectrum(e, powered);
}

PolarDecomposition polar(const DenseMatrix& a) {
    DenseMatrix ata = a.adjoint() * a;
    EigenDecomposition e = sym_eig(ata);
    const int n = a.dim();
    std::vector<double> sv(n), inv(n);
    double smax = 0.0;
    for (int k = 0; k < n; ++k) {
        sv[k] = std::sqrt(std::max(0.0, e.values[k]));
        smax = std::max(smax, sv[k]);
    }
    const double cutoff = 1e-10 * smax;
    for (int k = 0; k < n; ++k) inv[k] = sv[k] > cutoff ? 1.0 / sv[k] : 0.0;

    PolarDecomposition pd;
    pd.m = assemble_from_spectrum(e, sv);
    pd.u = a * assemble_from_spectrum(e, inv);
    return pd;
}

DenseMatrix aluthge_matrix(const DenseMatrix& a, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("aluthge_matrix: alpha must lie in (0,1]");
    DenseMatrix ata = a.adjoint() * a;
    DenseMatrix u = polar(a).u;
    DenseMatrix left = matrix_power_psd(ata, alpha / 2.0);
    if (alpha == 1.0) return left * u;  // |A| U; the right factor is |A|^0
    DenseMatrix right = matrix_power_psd(ata, (1.0 - alpha) / 2.0);
    return left * (u * right);
}

Verdict psd_order_test(const DenseMatrix& s, const DenseMatrix& t, double tol) {
    const double scale = std::max({1.0, s.max_abs(), t.max_abs()});
    if (!s.is_hermitian(1e-12 * scale) || !t.is_hermitian(1e-12 * scale))
        throw std::invalid_argument("psd_order_test: non-Hermitian input");
    EigenDecomposition e = sym_eig(t - s);
    double min_eig = e.values.empty() ? 0.0 : e.values.front();
    if (min_eig >= -tol) return Verdict::yes_with(min_eig, "min eigenvalue of difference");
    Witness w;
    w.point = "min eigendirection";
    w.values["min_eig"] = min_eig;
    return Verdict::no(std::move(w), "difference not positive semidefinite");
}

}  // namespace wco
