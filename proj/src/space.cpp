#include "wco/space.hpp"

#include <stdexcept>

namespace wco {

namespace {

FiberIndex build_fibers(const std::vector<int>& phi, int n) {
    FiberIndex fi;
    fi.preimages.assign(n, {});
    for (int y = 0; y < n; ++y) fi.preimages[phi[y]].push_back(y);
    return fi;
}

}  // namespace

PointSpace::PointSpace(std::vector<std::string> labels,
                       std::vector<BigRat> mass,
                       std::vector<int> phi,
                       std::vector<RatComplex> weight)
    : labels_(std::move(labels)),
      mass_(std::move(mass)),
      phi_(std::move(phi)),
      weight_(std::move(weight)) {
    const int n = static_cast<int>(labels_.size());
    if (static_cast<int>(mass_.size()) != n || static_cast<int>(phi_.size()) != n ||
        static_cast<int>(weight_.size()) != n)
        throw std::invalid_argument("PointSpace: mismatched component sizes");
    for (int i = 0; i < n; ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted) throw std::invalid_argument("duplicate point label: " + labels_[i]);
    }
    mass_d_.resize(n);
    weight_d_.resize(n);
    for (int i = 0; i < n; ++i) {
        if (mass_[i] <= 0)
            throw std::invalid_argument("nonpositive mass at point " + labels_[i]);
        if (phi_[i] < 0 || phi_[i] >= n)
            throw std::invalid_argument("phi target not in point set (point " + labels_[i] + ")");
        mass_d_[i] = rat_to_double(mass_[i]);
        weight_d_[i] = Complex(rat_to_double(weight_[i].re), rat_to_double(weight_[i].im));
    }
    fibers_ = build_fibers(phi_, n);
}

int PointSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

PointSpace PointSpace::reweighted(const std::vector<Complex>& w) const {
    std::vector<RatComplex> rw(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        rw[i] = RatComplex(rat_from_double(w[i].real()), rat_from_double(w[i].imag()));
    return reweighted_exact(rw);
}

PointSpace PointSpace::reweighted_exact(const std::vector<RatComplex>& w) const {
    if (static_cast<int>(w.size()) != size())
        throw std::invalid_argument("reweighted: wrong weight count");
    return PointSpace(labels_, mass_, phi_, w);
}

PointSpace build_space_exact(const std::vector<std::string>& points,
                             const std::vector<BigRat>& masses,
                             const std::vector<std::string>& phi_targets,
                             const std::vector<RatComplex>& weights) {
    const size_t n = points.size();
    if (masses.size() != n || phi_targets.size() != n || weights.size() != n)
        throw std::invalid_argument("build_space: mismatched component sizes");
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < n; ++i) {
        if (!index.emplace(points[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate point label: " + points[i]);
    }
    std::vector<int> phi(n);
    for (size_t i = 0; i < n; ++i) {
        auto it = index.find(phi_targets[i]);
        if (it == index.end())
            throw std::invalid_argument("phi target not in point set: " + points[i] + " -> " +
                                        phi_targets[i]);
        phi[i] = it->second;
    }
    return PointSpace(points, masses, phi, weights);
}

PointSpace build_space(const std::vector<std::string>& points,
                       const std::vector<double>& masses,
                       const std::vector<std::string>& phi_targets,
                       const std::vector<Complex>& weights) {
    std::vector<BigRat> m(masses.size());
    std::vector<RatComplex> w(weights.size());
    for (size_t i = 0; i < masses.size(); ++i) {
        if (!std::isfinite(masses[i]))
            throw std::invalid_argument("non-finite mass at point " + points[i]);
        m[i] = rat_from_double(masses[i]);
    }
    for (size_t i = 0; i < weights.size(); ++i) {
        if (!std::isfinite(weights[i].real()) || !std::isfinite(weights[i].imag()))
            throw std::invalid_argument("non-finite weight at point " + points[i]);
        w[i] = RatComplex(rat_from_double(weights[i].real()), rat_from_double(weights[i].imag()));
    }
    return build_space_exact(points, m, phi_targets, w);
}

const FiberIndex& fibers(const PointSpace& s) { return s.fibers(); }

}  // namespace wco
