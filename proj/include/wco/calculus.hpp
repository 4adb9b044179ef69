#pragma once

#include "wco/space.hpp"

#include <vector>

namespace wco {

// Fields take values in [0, inf]; infinity is represented explicitly.
using ScalarField = std::vector<double>;
// Complex-valued function on points; also used for L^2 vectors on finite spaces.
using Vec = std::vector<Complex>;
using WeightFunction = std::vector<Complex>;

using ExactField = std::vector<XRat>;
using ExactWeight = std::vector<RatComplex>;

// Radon-Nikodym derivative of mu_w o phi^{-1} against mu:
//   h(x) = (1/mass(x)) * sum_{y in phi^{-1}(x)} |w(y)|^2 mass(y).
ScalarField radon_nikodym(const PointSpace& s);
ExactField radon_nikodym_exact(const PointSpace& s);

// Conditional expectation onto phi^{-1}(A) under mu_w; constant on fibers of
// phi, zero at points whose fiber carries no mu_w mass.
ScalarField cond_exp(const PointSpace& s, const ScalarField& f);
ExactField cond_exp_exact(const PointSpace& s, const ExactField& f);

// Fiber-indexed representative g with g o phi = E(f) on supp mu_w and
// g = g * chi_{h>0}.
ScalarField cond_exp_pullback(const PointSpace& s, const ScalarField& f);
ExactField cond_exp_pullback_exact(const PointSpace& s, const ExactField& f);

// Weight of the alpha-Aluthge transform's closure:
//   w_alpha = w * (h / h o phi)^{alpha/2}.
// Throws std::domain_error("not densely defined") when h is infinite somewhere.
WeightFunction aluthge_weight(const PointSpace& s, double alpha);
// Exact variant; nullopt when some required power is irrational.
std::optional<ExactWeight> aluthge_weight_exact(const PointSpace& s, const BigRat& alpha);

// h of the alpha-transformed operator, computed as E(h^alpha) o phi^{-1} * h^{1-alpha}.
// Must agree with radon_nikodym of the space reweighted by w_alpha.
ScalarField aluthge_rn(const PointSpace& s, double alpha);

// Weight of the partial isometry in the polar decomposition:
//   w~ = w / (h o phi)^{1/2}.
WeightFunction partial_isometry_weight(const PointSpace& s);

// (C f)(x) = w(x) f(phi(x))
Vec apply_operator(const PointSpace& s, const Vec& f);
// (C* f)(x) = h(x) * (E(f_w) o phi^{-1})(x) with f_w = chi_{w != 0} f / w
Vec apply_adjoint(const PointSpace& s, const Vec& f);
// |C|^p f = h^{p/2} f
Vec apply_modulus_power(const PointSpace& s, double p, const Vec& f);
// |C*|^p f = w * (h o phi)^{p/2} * E(f_w)
Vec apply_adjoint_modulus_power(const PointSpace& s, double p, const Vec& f);
// P f = w * E(f_w); the range projection of the partial isometry
Vec projection(const PointSpace& s, const Vec& f);

// Complex conditional expectation (componentwise fiber average), exposed for
// tests and the adjoint path.
Vec cond_exp_complex(const PointSpace& s, const Vec& f);
Vec cond_exp_pullback_complex(const PointSpace& s, const Vec& f);

// Basis change between function values and coordinates in the orthonormal
// basis e_x = chi_{x} / sqrt(mass(x)).
Vec to_coords(const PointSpace& s, const Vec& f);
Vec from_coords(const PointSpace& s, const Vec& c);

}  // namespace wco
