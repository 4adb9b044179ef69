#pragma once

#include "wco/numeric.hpp"
#include "wco/rational.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace wco {

// Preimage lists: preimages[x] = { y : phi(y) = x }, each in point order.
struct FiberIndex {
    std::vector<std::vector<int>> preimages;
};

// A discrete measure space with a total self-map phi and a complex weight w.
// All point masses are strictly positive, the sigma-algebra is the power set,
// and phi maps every point to a point of the space. Immutable once built.
//
// Masses and weights are stored exactly (rationals); doubles are cached for
// the default floating-point evaluation path.
class PointSpace {
public:
    PointSpace(std::vector<std::string> labels,
               std::vector<BigRat> mass,
               std::vector<int> phi,
               std::vector<RatComplex> weight);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[i]; }
    // -1 when the label is not a point of the space
    int index_of(const std::string& label) const;

    int phi(int i) const { return phi_[i]; }
    double mass(int i) const { return mass_d_[i]; }
    Complex weight(int i) const { return weight_d_[i]; }
    const BigRat& mass_exact(int i) const { return mass_[i]; }
    const RatComplex& weight_exact(int i) const { return weight_[i]; }

    bool weight_is_zero(int i) const { return weight_[i].is_zero(); }
    // mu_w({i}) = |w(i)|^2 * mass(i)
    double mu_w(int i) const { return std::norm(weight_d_[i]) * mass_d_[i]; }

    const FiberIndex& fibers() const { return fibers_; }

    PointSpace reweighted(const std::vector<Complex>& w) const;
    PointSpace reweighted_exact(const std::vector<RatComplex>& w) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<BigRat> mass_;
    std::vector<int> phi_;
    std::vector<RatComplex> weight_;
    std::vector<double> mass_d_;
    std::vector<Complex> weight_d_;
    FiberIndex fibers_;
};

// Label-keyed construction as used by the JSON loader. Throws
// std::invalid_argument on duplicate labels, nonpositive masses, or a phi
// target outside the point set.
PointSpace build_space(const std::vector<std::string>& points,
                       const std::vector<double>& masses,
                       const std::vector<std::string>& phi_targets,
                       const std::vector<Complex>& weights);

PointSpace build_space_exact(const std::vector<std::string>& points,
                             const std::vector<BigRat>& masses,
                             const std::vector<std::string>& phi_targets,
                             const std::vector<RatComplex>& weights);

const FiberIndex& fibers(const PointSpace& s);

}  // namespace wco
