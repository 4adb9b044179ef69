#pragma once

#include "wco/space.hpp"

// Two-point space: masses 1, phi constant at 0, w = (1,1).
// h = (2,0); the smallest non-injective example.
inline wco::PointSpace make_s2() {
    return wco::build_space({"0", "1"}, {1.0, 1.0}, {"0", "0"},
                            {{1.0, 0.0}, {1.0, 0.0}});
}

// Three-cycle: phi(n) = (n+1) mod 3, w = (1,2,4). h = (16,1,4).
inline wco::PointSpace make_c3() {
    return wco::build_space({"0", "1", "2"}, {1.0, 1.0, 1.0}, {"1", "2", "0"},
                            {{1.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}});
}

inline wco::PointSpace make_identity(const std::vector<wco::Complex>& w) {
    std::vector<std::string> pts;
    std::vector<double> mass;
    std::vector<std::string> phi;
    for (size_t i = 0; i < w.size(); ++i) {
        pts.push_back(std::to_string(i));
        mass.push_back(1.0);
        phi.push_back(std::to_string(i));
    }
    return wco::build_space(pts, mass, phi, w);
}
