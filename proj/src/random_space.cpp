#include "wco/random_space.hpp"

#include <cmath>

namespace wco {

PointSpace random_space(std::mt19937_64& rng, int max_dim) {
    std::uniform_int_distribution<int> dim_dist(2, max_dim);
    const int n = dim_dist(rng);

    std::uniform_real_distribution<double> log_mag(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> target(0, n - 1);

    std::vector<std::string> labels(n);
    std::vector<double> mass(n);
    std::vector<std::string> phi(n);
    std::vector<Complex> w(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        mass[i] = std::exp(log_mag(rng));
        phi[i] = std::to_string(target(rng));
        if (unit(rng) < 0.2) {
            w[i] = Complex(0.0, 0.0);  // exact zero, exercising mu_w null sets
        } else {
            double r = std::exp(log_mag(rng));
            double a = angle(rng);
            w[i] = Complex(r * std::cos(a), r * std::sin(a));
        }
    }
    return build_space(labels, mass, phi, w);
}

std::vector<Complex> random_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
    return v;
}

std::vector<double> random_nonneg_field(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 4.0);
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = u(rng);
    return f;
}

}  // namespace wco
