#pragma once

#include "wco/analytic.hpp"
#include "wco/space.hpp"
#include "wco/verdict.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace wco::gallery {

// Convergence certificate for a series attached to a lazy family. Window
// computations can only ever prove divergence (by crossing a threshold), so
// convergence claims must be declared with a reason.
struct SeriesCertificate {
    std::string name;
    std::optional<bool> converges;  // nullopt: undeclared, decide by windowing
    std::string reason;             // "p-series s=2", "terms do not vanish", ...
    double exponent = 0.0;          // s for p-series sum k^{-s}, 0 otherwise
    std::function<double(long)> partial_sum;  // sum of the first K terms
};

struct BoundednessCertificate {
    bool bounded = false;
    double sup = 0.0;  // finite when bounded
    std::string reason;
};

// Finite truncation of a countable family together with the core points on
// which the family's closed forms are exact (boundary effects trimmed).
struct WindowedSpace {
    PointSpace space;
    std::vector<int> core;
};

class Family {
public:
    virtual ~Family() = default;
    const std::string& name() const { return name_; }
    const std::string& doc() const { return doc_; }

    virtual WindowedSpace window(int n) const = 0;

    // Restriction of the family to an explicit point set. Applies the family's
    // declared boundary convention, if any; otherwise throws
    // std::invalid_argument when the set is not closed under phi.
    PointSpace truncate(const std::vector<std::string>& pts) const;

    // pointwise rules over the family's full countable domain
    virtual bool in_domain(const std::string& label) const = 0;
    virtual std::string phi_label(const std::string& label) const = 0;
    virtual RatComplex weight_label(const std::string& label) const = 0;
    virtual BigRat mass_label(const std::string& label) const;  // default: counting measure

    virtual bool has_boundary_convention() const { return false; }

    // Series sum_{y in phi^{-1}(x)} h(y)^alpha |w(y)|^2 at points whose fiber
    // within the family is infinite (alpha = 0 gives the plain mu_w fiber
    // mass); nullopt when the fiber is finite.
    virtual std::optional<SeriesCertificate> fiber_series(const std::string& point,
                                                          double alpha) const;
    virtual std::optional<BoundednessCertificate> boundedness() const;
    // constant value of h o phi / h across the family, when there is one
    virtual std::optional<double> constant_h_ratio() const;
    // infima over the whole family, when finite windows cannot see them;
    // nullopt means the window values are faithful
    virtual std::optional<double> h_infimum() const;
    virtual std::optional<double> e_pullback_infimum(double alpha) const;

    virtual nlohmann::json describe() const;

protected:
    std::string name_;
    std::string doc_;
};

// X = N with phi(2n) = 2n-1, phi(2n-1) = 2n; counting measure.
// h(n) = w(phi(n))^2 and E(f) acts as the identity on supp mu_w.
class SwapFamily : public Family {
public:
    explicit SwapFamily(std::function<double(long)> w,
                        std::optional<BoundednessCertificate> bound = std::nullopt);
    static SwapFamily serwis_example();  // w(1)=0, w(2)=1, w(n)=1 for n>=3
    static SwapFamily linear();          // w(n)=n, declared unbounded
    static SwapFamily constant(double c);

    WindowedSpace window(int n) const override;
    bool in_domain(const std::string& label) const override;
    std::string phi_label(const std::string& label) const override;
    RatComplex weight_label(const std::string& label) const override;
    std::optional<BoundednessCertificate> boundedness() const override;
    nlohmann::json describe() const override;

    double w(long n) const { return w_(n); }
    double h_certificate(long n) const;
    double e_pullback_certificate(long n, double alpha) const;  // h^alpha o phi

private:
    std::function<double(long)> w_;
    std::optional<BoundednessCertificate> bound_;
};

// X = N x N with phi(n,m+1) = (n,m), phi(n+1,1) = (n,1), phi(1,1) = (1,1);
// weights w(n,m)=1 for m>=3, w(n,1)=a_n, w(n,2)=a_{n+1}.
//
// The source example's root rule sends (n+1,1) to (n,0), which lies outside
// the grid; this instance uses (n,1), the map consistent with the certified
// h values.
class GridTreeFamily : public Family {
public:
    explicit GridTreeFamily(std::function<BigRat(long)> a, bool zero_cluster_point = true);
    static GridTreeFamily harmonic();  // a_n = 1/n
    static GridTreeFamily geometric(const BigRat& q);

    WindowedSpace window(int n) const override;
    bool in_domain(const std::string& label) const override;
    std::string phi_label(const std::string& label) const override;
    RatComplex weight_label(const std::string& label) const override;
    std::optional<BoundednessCertificate> boundedness() const override;
    nlohmann::json describe() const override;

    std::optional<double> h_infimum() const override;
    std::optional<double> e_pullback_infimum(double alpha) const override;

    BigRat a(long n) const { return a_(n); }
    bool zero_cluster_point() const { return zero_cluster_; }
    BigRat h_certificate(long n, long m) const;
    // E(h^alpha) o phi^{-1} by the discrete fiber formula
    double e_pullback_certificate(long n, long m, double alpha) const;
    double serwis_ii_constant() const { return 0.5; }

private:
    std::function<BigRat(long)> a_;
    bool zero_cluster_;
};

// X = Z_+ union N x N; phi(k-1) = k on the chain, phi((k,1)) = 0 and
// phi((m,n)) = (m,n-1) on the grid. The fiber of 0 is infinite, so its sums
// are certified series. w((k,1)) = 1/k, w((k,2)) = sqrt(k), otherwise 1.
// Boundary convention: the chain top of a finite window absorbs.
class BudaFamily : public Family {
public:
    BudaFamily();

    WindowedSpace window(int n) const override;
    bool in_domain(const std::string& label) const override;
    std::string phi_label(const std::string& label) const override;
    RatComplex weight_label(const std::string& label) const override;
    bool has_boundary_convention() const override { return true; }
    std::optional<SeriesCertificate> fiber_series(const std::string& point,
                                                  double alpha) const override;
    nlohmann::json describe() const override;

    // the three series conditions defining the example, at the given alpha:
    // sum w(k,1)^2, sum w(k,1)^2 w(k,2)^{2 alpha}, sum w(k,1)^2 w(k,2)^2
    std::array<SeriesCertificate, 3> defining_series(double alpha) const;
};

// X = Z, phi(n) = n-1, counting measure, w(n) = scale * base^n. Singleton
// fibers make E the identity on supp mu_w; h(n) = w(n+1)^2 and
// h o phi / h == base^{-2}.
class BilateralShiftFamily : public Family {
public:
    explicit BilateralShiftFamily(double base, double scale = 1.0,
                                  bool absorb_boundary = true);

    WindowedSpace window(int n) const override;
    bool in_domain(const std::string& label) const override;
    std::string phi_label(const std::string& label) const override;
    RatComplex weight_label(const std::string& label) const override;
    bool has_boundary_convention() const override { return absorb_; }
    std::optional<BoundednessCertificate> boundedness() const override;
    std::optional<double> constant_h_ratio() const override;
    std::optional<double> h_infimum() const override;
    std::optional<double> e_pullback_infimum(double alpha) const override;
    nlohmann::json describe() const override;

    double base() const { return base_; }
    double w(long n) const;
    double h_certificate(long n) const;
    double aluthge_weight_certificate(long n, double alpha) const;  // scale * base^{n+alpha}

private:
    double base_;
    double scale_;
    bool absorb_;
};

// Analytic instance on (R^2, exp(|x|^2) dx) with phi(x1,x2) = (theta x2, x1);
// no point space, everything is closed form.
class LinearGaussianFamily {
public:
    explicit LinearGaussianFamily(double theta);  // theta in (0,inf) \ {1}

    double theta() const { return theta_; }
    RealMatrix phi() const;
    double rn(const std::vector<double>& x) const;
    // h of the alpha-transformed operator: h(phi^{-1} x)^alpha * h(x)^{1-alpha}
    double aluthge_rn(double alpha, const std::vector<double>& x) const;
    std::pair<bool, bool> stages(double alpha) const;
    // direct pointwise check of h_alpha o phi <= h_alpha over a sample grid
    bool transform_hyponormal_on_grid(double alpha, double tol = 1e-12) const;
    Verdict bounded() const;  // rho is not a polynomial: bounded iff |phi^{-1}| <= 1
    std::vector<double> feasible_alphas(const std::vector<double>& grid) const;
    nlohmann::json describe() const;

private:
    double theta_;
};

std::unique_ptr<Family> make_family(const std::string& name,
                                    const std::map<std::string, std::string>& params);
nlohmann::json list_families();

}  // namespace wco::gallery
