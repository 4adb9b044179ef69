#pragma once

#include "wco/analytic.hpp"
#include "wco/calculus.hpp"
#include "wco/gallery.hpp"
#include "wco/space.hpp"
#include "wco/verdict.hpp"

namespace wco {

// "a.e. [mu_w]" checks skip points with w = 0; "a.e. [mu]" means every point.
// restrict_to limits a check to the given point indices (used for the core of
// a windowed family, where boundary effects would be spurious).
struct CheckOptions {
    double tol = 1e-12;
    const std::vector<int>* restrict_to = nullptr;
};

// h < infinity everywhere (always on a finite space)
Verdict is_densely_defined(const PointSpace& s);
// sup h < infinity; the sup is reported as the constant. When bound is given,
// holds additionally requires sup h <= bound (a bound on h, not on |C|).
Verdict is_bounded(const PointSpace& s, std::optional<double> bound = std::nullopt);
// { x : E(h^alpha) o phi^{-1} (x) = infinity }; empty on finite spaces
std::vector<std::string> aluthge_domain_perp(const PointSpace& s, double alpha);
// h^{1-alpha} <= c (1 + E(h^alpha) o phi^{-1} h^{1-alpha}) for some c; the
// least such c is reported
Verdict aluthge_closed_criterion(const PointSpace& s, double alpha,
                                 const CheckOptions& opt = {});

struct SerwisReport {
    Verdict i;    // h >= c
    Verdict ii;   // E(h^alpha) o phi^{-1} >= c on {h != 0}
    Verdict iii;  // c E(h^alpha) o phi^{-1} h^{1-alpha} >= h^{1-alpha} on {h != 0}
    Verdict iv;   // c (1 + E(h^alpha) o phi^{-1} h^{1-alpha}) >= h^{1-alpha} on {h != 0}
    bool chain_consistent;  // (i)=>(ii), (ii)<=>(iii), (iii)=>(iv) on these verdicts
};
SerwisReport serwis_conditions(const PointSpace& s, double alpha,
                               const CheckOptions& opt = {});

// h > 0 a.e. [mu_w] and E(h^p o phi / h^p) <= 1 a.e. [mu_w]
Verdict is_p_hyponormal(const PointSpace& s, double p, const CheckOptions& opt = {});
// h^p o phi <= E(h^p) a.e. [mu_w]
Verdict in_class_Q(const PointSpace& s, double p, const CheckOptions& opt = {});
// h o phi = h a.e. [mu_w]
Verdict is_quasinormal(const PointSpace& s, const CheckOptions& opt = {});
// w_alpha = w at every point; equivalent to quasinormality
Verdict aluthge_fixed_point(const PointSpace& s, double alpha,
                            const CheckOptions& opt = {});
// exact variant of the fixed-point check (rational arithmetic)
bool aluthge_fixed_point_exact(const PointSpace& s, const BigRat& alpha);

// Builds the w_alpha-reweighted space and checks (p+alpha)-hyponormality.
// Requires is_p_hyponormal(s, p) and alpha in (0, 1-p]; by the improvement
// theorems the verdict must be holds, so fails is a theorem violation.
Verdict improvement_report(const PointSpace& s, double p, double alpha,
                           const CheckOptions& opt = {});
// E_{w_alpha}(h_alpha^{p+alpha} o phi / h_alpha^{p+alpha})
//   <= (E_w(h^alpha) / h^alpha)^{p+alpha-1} pointwise on supp mu_{w_alpha}
Verdict ups_inequality(const PointSpace& s, double p, double alpha,
                       const CheckOptions& opt = {});
// p-hyponormal implies q-hyponormal for q < p; vacuous when not p-hyponormal
Verdict pq_monotonicity(const PointSpace& s, double p, double q,
                        const CheckOptions& opt = {});

// ---- lazy-family variants (certificate-aware) ----

// Window sums can only prove divergence; 1e12 across window doublings.
inline constexpr double kDivergenceThreshold = 1e12;

// Decide a series certificate: declared verdicts are final; undeclared ones
// are probed at window, 2x and 4x and fail once past the threshold.
Verdict decide_series(const gallery::SeriesCertificate& c, long window);

Verdict is_densely_defined(const gallery::Family& fam, int window);
Verdict is_bounded(const gallery::Family& fam, int window);
std::vector<std::string> aluthge_domain_perp(const gallery::Family& fam, double alpha,
                                             int window);
Verdict is_p_hyponormal(const gallery::Family& fam, double p, int window);
// window-core verdicts with the family's infimum/boundedness certificates
// overriding what finite windows cannot see
SerwisReport serwis_conditions(const gallery::Family& fam, double alpha, int window);

}  // namespace wco
