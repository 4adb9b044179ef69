#include "wco/calculus.hpp"

#include <stdexcept>

namespace wco {

namespace {

void require_size(const PointSpace& s, size_t got, const char* what) {
    if (got != static_cast<size_t>(s.size()))
        throw std::invalid_argument(std::string(what) + ": wrong vector length");
}

void require_densely_defined(const ScalarField& h) {
    for (double v : h)
        if (std::isinf(v)) throw std::domain_error("not densely defined");
}

// fiber sums S0(x) = sum_{y in phi^{-1}(x)} |w(y)|^2 m(y),
//            S1(x) = sum_{y in phi^{-1}(x)} f(y) |w(y)|^2 m(y)
double fiber_mu_w(const PointSpace& s, int x) {
    double acc = 0.0;
    for (int y : s.fibers().preimages[x]) acc += s.mu_w(y);
    return acc;
}

double fiber_weighted_sum(const PointSpace& s, int x, const ScalarField& f) {
    double acc = 0.0;
    for (int y : s.fibers().preimages[x]) acc += xmul(f[y], s.mu_w(y));
    return acc;
}

}  // namespace

ScalarField radon_nikodym(const PointSpace& s) {
    ScalarField h(s.size());
    for (int x = 0; x < s.size(); ++x) h[x] = fiber_mu_w(s, x) / s.mass(x);
    return h;
}

ExactField radon_nikodym_exact(const PointSpace& s) {
    ExactField h(s.size());
    for (int x = 0; x < s.size(); ++x) {
        BigRat acc = 0;
        for (int y : s.fibers().preimages[x])
            acc += s.weight_exact(y).norm2() * s.mass_exact(y);
        h[x] = XRat(acc / s.mass_exact(x));
    }
    return h;
}

ScalarField cond_exp(const PointSpace& s, const ScalarField& f) {
    require_size(s, f.size(), "cond_exp");
    ScalarField out(s.size(), 0.0);
    // constant on each fiber of phi: value at z depends only on phi(z)
    std::vector<double> by_target(s.size(), 0.0);
    for (int x = 0; x < s.size(); ++x) {
        double den = fiber_mu_w(s, x);
        by_target[x] = den == 0.0 ? 0.0 : xdiv(fiber_weighted_sum(s, x, f), den);
    }
    for (int z = 0; z < s.size(); ++z) out[z] = by_target[s.phi(z)];
    return out;
}

ExactField cond_exp_exact(const PointSpace& s, const ExactField& f) {
    require_size(s, f.size(), "cond_exp");
    std::vector<XRat> by_target(s.size());
    for (int x = 0; x < s.size(); ++x) {
        XRat num, den;
        for (int y : s.fibers().preimages[x]) {
            XRat m(s.weight_exact(y).norm2() * s.mass_exact(y));
            num = num + f[y] * m;
            den = den + m;
        }
        by_target[x] = XRat::div(num, den);
    }
    ExactField out(s.size());
    for (int z = 0; z < s.size(); ++z) out[z] = by_target[s.phi(z)];
    return out;
}

ScalarField cond_exp_pullback(const PointSpace& s, const ScalarField& f) {
    require_size(s, f.size(), "cond_exp_pullback");
    ScalarField g(s.size(), 0.0);
    for (int x = 0; x < s.size(); ++x) {
        double den = fiber_mu_w(s, x);
        // den = h(x) mass(x); the chi_{h>0} cutoff keeps g = 0 where h = 0
        g[x] = den == 0.0 ? 0.0 : xdiv(fiber_weighted_sum(s, x, f), den);
    }
    return g;
}

ExactField cond_exp_pullback_exact(const PointSpace& s, const ExactField& f) {
    require_size(s, f.size(), "cond_exp_pullback");
    ExactField g(s.size());
    for (int x = 0; x < s.size(); ++x) {
        XRat num, den;
        for (int y : s.fibers().preimages[x]) {
            XRat m(s.weight_exact(y).norm2() * s.mass_exact(y));
            num = num + f[y] * m;
            den = den + m;
        }
        g[x] = XRat::div(num, den);
    }
    return g;
}

WeightFunction aluthge_weight(const PointSpace& s, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("aluthge_weight: alpha must lie in (0,1]");
    ScalarField h = radon_nikodym(s);
    require_densely_defined(h);
    WeightFunction w(s.size());
    for (int x = 0; x < s.size(); ++x) {
        if (s.weight_is_zero(x)) {
            w[x] = Complex(0.0, 0.0);
            continue;
        }
        // h(phi(x)) > 0 whenever w(x) != 0, since x contributes to that fiber
        double factor = xpow(xdiv(h[x], h[s.phi(x)]), alpha / 2.0);
        w[x] = s.weight(x) * factor;
    }
    return w;
}

std::optional<ExactWeight> aluthge_weight_exact(const PointSpace& s, const BigRat& alpha) {
    if (!(alpha > 0 && alpha <= 1))
        throw std::invalid_argument("aluthge_weight: alpha must lie in (0,1]");
    ExactField h = radon_nikodym_exact(s);
    ExactWeight w(s.size());
    const BigRat half_alpha = alpha / 2;
    for (int x = 0; x < s.size(); ++x) {
        if (s.weight_exact(x).is_zero()) {
            w[x] = RatComplex(BigRat(0), BigRat(0));
            continue;
        }
        auto factor = pow_exact(XRat::div(h[x], h[s.phi(x)]), half_alpha);
        if (!factor || factor->is_inf()) return std::nullopt;
        BigRat f = factor->is_zero() ? BigRat(0) : factor->value();
        w[x] = RatComplex(s.weight_exact(x).re * f, s.weight_exact(x).im * f);
    }
    return w;
}

ScalarField aluthge_rn(const PointSpace& s, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("aluthge_rn: alpha must lie in (0,1]");
    ScalarField h = radon_nikodym(s);
    require_densely_defined(h);
    ScalarField ha(s.size());
    for (int x = 0; x < s.size(); ++x) ha[x] = xpow(h[x], alpha);
    ScalarField g = cond_exp_pullback(s, ha);
    ScalarField out(s.size());
    // the chi_{h>0} cutoff needed at alpha = 1 is built into the pullback
    for (int x = 0; x < s.size(); ++x) out[x] = xmul(g[x], xpow(h[x], 1.0 - alpha));
    return out;
}

WeightFunction partial_isometry_weight(const PointSpace& s) {
    ScalarField h = radon_nikodym(s);
    require_densely_defined(h);
    WeightFunction w(s.size());
    for (int x = 0; x < s.size(); ++x) {
        if (s.weight_is_zero(x)) {
            w[x] = Complex(0.0, 0.0);
            continue;
        }
        w[x] = s.weight(x) / std::sqrt(h[s.phi(x)]);
    }
    return w;
}

Vec apply_operator(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "apply_operator");
    Vec out(s.size());
    for (int x = 0; x < s.size(); ++x) out[x] = s.weight(x) * f[s.phi(x)];
    return out;
}

Vec cond_exp_complex(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "cond_exp_complex");
    std::vector<Complex> by_target(s.size(), Complex(0, 0));
    for (int x = 0; x < s.size(); ++x) {
        double den = fiber_mu_w(s, x);
        if (den == 0.0) continue;
        Complex num(0, 0);
        for (int y : s.fibers().preimages[x]) num += f[y] * s.mu_w(y);
        by_target[x] = num / den;
    }
    Vec out(s.size());
    for (int z = 0; z < s.size(); ++z) out[z] = by_target[s.phi(z)];
    return out;
}

Vec cond_exp_pullback_complex(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "cond_exp_pullback_complex");
    Vec g(s.size(), Complex(0, 0));
    for (int x = 0; x < s.size(); ++x) {
        double den = fiber_mu_w(s, x);
        if (den == 0.0) continue;
        Complex num(0, 0);
        for (int y : s.fibers().preimages[x]) num += f[y] * s.mu_w(y);
        g[x] = num / den;
    }
    return g;
}

namespace {

Vec truncate_by_weight(const PointSpace& s, const Vec& f) {
    // f_w = chi_{w != 0} f / w
    Vec fw(s.size(), Complex(0, 0));
    for (int x = 0; x < s.size(); ++x)
        if (!s.weight_is_zero(x)) fw[x] = f[x] / s.weight(x);
    return fw;
}

}  // namespace

Vec apply_adjoint(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "apply_adjoint");
    ScalarField h = radon_nikodym(s);
    require_densely_defined(h);
    Vec g = cond_exp_pullback_complex(s, truncate_by_weight(s, f));
    Vec out(s.size());
    for (int x = 0; x < s.size(); ++x) out[x] = h[x] * g[x];
    return out;
}

Vec apply_modulus_power(const PointSpace& s, double p, const Vec& f) {
    require_size(s, f.size(), "apply_modulus_power");
    if (!(p > 0.0)) throw std::invalid_argument("apply_modulus_power: p must be positive");
    ScalarField h = radon_nikodym(s);
    Vec out(s.size());
    for (int x = 0; x < s.size(); ++x) out[x] = xpow(h[x], p / 2.0) * f[x];
    return out;
}

Vec apply_adjoint_modulus_power(const PointSpace& s, double p, const Vec& f) {
    require_size(s, f.size(), "apply_adjoint_modulus_power");
    if (!(p > 0.0))
        throw std::invalid_argument("apply_adjoint_modulus_power: p must be positive");
    ScalarField h = radon_nikodym(s);
    require_densely_defined(h);
    Vec e = cond_exp_complex(s, truncate_by_weight(s, f));
    Vec out(s.size());
    for (int x = 0; x < s.size(); ++x)
        out[x] = s.weight(x) * xpow(h[s.phi(x)], p / 2.0) * e[x];
    return out;
}

Vec projection(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "projection");
    Vec e = cond_exp_complex(s, truncate_by_weight(s, f));
    Vec out(s.size());
    for (int x = 0; x < s.size(); ++x) out[x] = s.weight(x) * e[x];
    return out;
}

Vec to_coords(const PointSpace& s, const Vec& f) {
    require_size(s, f.size(), "to_coords");
    Vec c(s.size());
    for (int x = 0; x < s.size(); ++x) c[x] = f[x] * std::sqrt(s.mass(x));
    return c;
}

Vec from_coords(const PointSpace& s, const Vec& c) {
    require_size(s, c.size(), "from_coords");
    Vec f(s.size());
    for (int x = 0; x < s.size(); ++x) f[x] = c[x] / std::sqrt(s.mass(x));
    return f;
}

}  // namespace wco
