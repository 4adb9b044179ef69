#include "wco/gallery.hpp"

#include "wco/calculus.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wco::gallery {

namespace {

std::optional<long> parse_long(const std::string& s) {
    if (s.empty()) return std::nullopt;
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<std::pair<long, long>> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    auto a = parse_long(s.substr(0, comma));
    auto b = parse_long(s.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return std::make_pair(*a, *b);
}

std::string pair_label(long a, long b) {
    return std::to_string(a) + "," + std::to_string(b);
}

RatComplex real_weight(const BigRat& v) { return RatComplex(v, BigRat(0)); }
RatComplex real_weight(double v) { return RatComplex(rat_from_double(v), BigRat(0)); }

}  // namespace

BigRat Family::mass_label(const std::string&) const { return BigRat(1); }

std::optional<SeriesCertificate> Family::fiber_series(const std::string&, double) const {
    return std::nullopt;
}

std::optional<BoundednessCertificate> Family::boundedness() const { return std::nullopt; }

std::optional<double> Family::constant_h_ratio() const { return std::nullopt; }

std::optional<double> Family::h_infimum() const { return std::nullopt; }

std::optional<double> Family::e_pullback_infimum(double) const { return std::nullopt; }

nlohmann::json Family::describe() const {
    return nlohmann::json{{"name", name_}, {"doc", doc_}};
}

PointSpace Family::truncate(const std::vector<std::string>& pts) const {
    std::vector<std::string> phi_targets(pts.size());
    std::vector<BigRat> masses(pts.size());
    std::vector<RatComplex> weights(pts.size());
    std::unordered_map<std::string, int> in_set;
    for (size_t i = 0; i < pts.size(); ++i) in_set.emplace(pts[i], static_cast<int>(i));

    for (size_t i = 0; i < pts.size(); ++i) {
        if (!in_domain(pts[i]))
            throw std::invalid_argument("point not in family domain: " + pts[i]);
        std::string target = phi_label(pts[i]);
        if (!in_set.count(target)) {
            if (!has_boundary_convention())
                throw std::invalid_argument("window not closed under phi: " + pts[i] + " -> " +
                                            target);
            target = pts[i];  // absorbing boundary
        }
        phi_targets[i] = std::move(target);
        masses[i] = mass_label(pts[i]);
        weights[i] = weight_label(pts[i]);
    }
    return build_space_exact(pts, masses, phi_targets, weights);
}

// ---- swap family ----

SwapFamily::SwapFamily(std::function<double(long)> w,
                       std::optional<BoundednessCertificate> bound)
    : w_(std::move(w)), bound_(std::move(bound)) {
    name_ = "swap";
    doc_ = "X = N with phi exchanging 2n and 2n-1; counting measure";
}

SwapFamily SwapFamily::serwis_example() {
    SwapFamily f([](long n) { return n == 1 ? 0.0 : 1.0; },
                 BoundednessCertificate{true, 1.0, "weights bounded by 1"});
    return f;
}

SwapFamily SwapFamily::linear() {
    return SwapFamily([](long n) { return static_cast<double>(n); },
                      BoundednessCertificate{false, kInf, "sup w = infinity"});
}

SwapFamily SwapFamily::constant(double c) {
    return SwapFamily([c](long) { return c; },
                      BoundednessCertificate{true, c * c, "constant weight"});
}

WindowedSpace SwapFamily::window(int n) const {
    n = std::max(n, 1);
    std::vector<std::string> pts;
    for (long k = 1; k <= 2L * n; ++k) pts.push_back(std::to_string(k));
    PointSpace s = truncate(pts);
    std::vector<int> core(s.size());
    for (int i = 0; i < s.size(); ++i) core[i] = i;  // windows are exactly phi-closed
    return WindowedSpace{std::move(s), std::move(core)};
}

bool SwapFamily::in_domain(const std::string& label) const {
    auto v = parse_long(label);
    return v && *v >= 1;
}

std::string SwapFamily::phi_label(const std::string& label) const {
    long k = *parse_long(label);
    return std::to_string(k % 2 == 0 ? k - 1 : k + 1);
}

RatComplex SwapFamily::weight_label(const std::string& label) const {
    return real_weight(w_(*parse_long(label)));
}

std::optional<BoundednessCertificate> SwapFamily::boundedness() const { return bound_; }

nlohmann::json SwapFamily::describe() const {
    auto j = Family::describe();
    j["certificates"] = {{{"name", "h(n) = w(phi(n))^2"}, {"kind", "closed-form"}},
                         {{"name", "E(h^a) o phi^{-1} = h^a o phi"}, {"kind", "closed-form"}}};
    if (bound_) j["bounded"] = {{"value", bound_->bounded}, {"reason", bound_->reason}};
    return j;
}

double SwapFamily::h_certificate(long n) const {
    double w = w_(n % 2 == 0 ? n - 1 : n + 1);
    return w * w;
}

double SwapFamily::e_pullback_certificate(long n, double alpha) const {
    double w = w_(n);  // h^alpha(phi(n)) = w(phi(phi(n)))^{2 alpha} = w(n)^{2 alpha}
    return std::pow(w * w, alpha);
}

// ---- grid-tree family ----

GridTreeFamily::GridTreeFamily(std::function<BigRat(long)> a, bool zero_cluster_point)
    : a_(std::move(a)), zero_cluster_(zero_cluster_point) {
    name_ = "grid-tree";
    doc_ =
        "X = N x N, phi(n,m+1) = (n,m), phi(n+1,1) = (n,1), phi(1,1) = (1,1); "
        "w(n,1) = a_n, w(n,2) = a_{n+1}, otherwise 1. The root rule (n+1,1) -> (n,1) "
        "replaces a published (n,0) target that lies outside the grid; the certified "
        "h values are the ones consistent with this map.";
}

GridTreeFamily GridTreeFamily::harmonic() {
    return GridTreeFamily([](long n) { return BigRat(1, n); }, true);
}

GridTreeFamily GridTreeFamily::geometric(const BigRat& q) {
    if (!(q > 0 && q < 1))
        throw std::invalid_argument("grid-tree geometric: q must lie in (0,1)");
    return GridTreeFamily(
        [q](long n) {
            BigRat v = 1;
            for (long i = 0; i < n; ++i) v *= q;
            return v;
        },
        true);
}

WindowedSpace GridTreeFamily::window(int n) const {
    n = std::max(n, 2);
    const long hi = n + 2;  // two extra layers so fiber data is exact on the core
    std::vector<std::string> pts;
    for (long i = 1; i <= hi; ++i)
        for (long j = 1; j <= hi; ++j) pts.push_back(pair_label(i, j));
    PointSpace s = truncate(pts);
    std::vector<int> core;
    for (int idx = 0; idx < s.size(); ++idx) {
        auto [i, j] = *parse_pair(s.label(idx));
        if (i <= n && j <= n) core.push_back(idx);
    }
    return WindowedSpace{std::move(s), std::move(core)};
}

bool GridTreeFamily::in_domain(const std::string& label) const {
    auto p = parse_pair(label);
    return p && p->first >= 1 && p->second >= 1;
}

std::string GridTreeFamily::phi_label(const std::string& label) const {
    auto [n, m] = *parse_pair(label);
    if (m >= 2) return pair_label(n, m - 1);
    if (n >= 2) return pair_label(n - 1, 1);
    return pair_label(1, 1);
}

RatComplex GridTreeFamily::weight_label(const std::string& label) const {
    auto [n, m] = *parse_pair(label);
    if (m == 1) return real_weight(a_(n));
    if (m == 2) return real_weight(a_(n + 1));
    return real_weight(BigRat(1));
}

std::optional<BoundednessCertificate> GridTreeFamily::boundedness() const {
    return std::nullopt;  // depends on the whole sequence (a_n)
}

std::optional<double> GridTreeFamily::h_infimum() const {
    // 0 is a cluster point of (a_n), so h(n,1) = 2 a_{n+1}^2 gets arbitrarily small
    if (zero_cluster_) return 0.0;
    return std::nullopt;
}

std::optional<double> GridTreeFamily::e_pullback_infimum(double) const {
    // values are 1 on the grid body and (1 + (2 a_{n+2}^2)^alpha)/2 >= 1/2 on the
    // spine, with 1/2 approached along the cluster subsequence
    if (zero_cluster_) return 0.5;
    return std::nullopt;
}

nlohmann::json GridTreeFamily::describe() const {
    auto j = Family::describe();
    j["certificates"] = {
        {{"name", "h(n,m) = 1 for m >= 2"}, {"kind", "closed-form"}},
        {{"name", "h(n,1) = 2 a_{n+1}^2 for n >= 2"}, {"kind", "closed-form"}},
        {{"name", "h(1,1) = a_1^2 + 2 a_2^2"}, {"kind", "closed-form"}},
        {{"name", "E(h^a) o phi^{-1} >= 1/2 on {h != 0}"}, {"kind", "lower-bound"}}};
    j["zero_cluster_point"] = zero_cluster_;
    return j;
}

BigRat GridTreeFamily::h_certificate(long n, long m) const {
    if (m >= 2) return BigRat(1);
    if (n >= 2) return 2 * a_(n + 1) * a_(n + 1);
    return a_(1) * a_(1) + 2 * a_(2) * a_(2);
}

double GridTreeFamily::e_pullback_certificate(long n, long m, double alpha) const {
    // fiber average of h^alpha, by the discrete formula on the full grid
    if (m >= 2) return 1.0;
    double a_n = rat_to_double(a_(n));
    double a_n1 = rat_to_double(a_(n + 1));
    double a_n2 = rat_to_double(a_(n + 2));
    if (n >= 2) {
        double h_next = 2.0 * a_n2 * a_n2;  // h(n+1,1)
        return (1.0 + std::pow(h_next, alpha)) / 2.0;
    }
    double h_11 = rat_to_double(h_certificate(1, 1));
    double h_21 = 2.0 * rat_to_double(a_(3)) * rat_to_double(a_(3));
    double num = a_n1 * a_n1 * (1.0 + std::pow(h_21, alpha)) + a_n * a_n * std::pow(h_11, alpha);
    double den = a_n * a_n + 2.0 * a_n1 * a_n1;
    return num / den;
}

// ---- buda family ----

BudaFamily::BudaFamily() {
    name_ = "buda";
    doc_ =
        "X = Z_+ together with N x N; phi ascends the chain, sends (k,1) to 0 and "
        "(m,n) to (m,n-1). w((k,1)) = 1/k, w((k,2)) = sqrt(k), otherwise 1. The fiber "
        "of 0 is infinite; its sums carry series certificates. Finite windows absorb "
        "at the chain top.";
}

WindowedSpace BudaFamily::window(int n) const {
    n = std::max(n, 2);
    std::vector<std::string> pts;
    for (long j = 0; j <= n + 1; ++j) pts.push_back(std::to_string(j));
    for (long k = 1; k <= n; ++k)
        for (long m = 1; m <= n + 2; ++m) pts.push_back(pair_label(k, m));
    PointSpace s = truncate(pts);
    std::vector<int> core;
    for (int idx = 0; idx < s.size(); ++idx) {
        const std::string& lab = s.label(idx);
        if (auto v = parse_long(lab)) {
            if (*v >= 1 && *v <= n) core.push_back(idx);  // 0 has a truncated fiber
        } else {
            auto [k, m] = *parse_pair(lab);
            if (k <= n && m <= n + 1) core.push_back(idx);
        }
    }
    return WindowedSpace{std::move(s), std::move(core)};
}

bool BudaFamily::in_domain(const std::string& label) const {
    if (auto v = parse_long(label)) return *v >= 0;
    auto p = parse_pair(label);
    return p && p->first >= 1 && p->second >= 1;
}

std::string BudaFamily::phi_label(const std::string& label) const {
    if (auto v = parse_long(label)) return std::to_string(*v + 1);
    auto [k, m] = *parse_pair(label);
    if (m == 1) return "0";
    return pair_label(k, m - 1);
}

RatComplex BudaFamily::weight_label(const std::string& label) const {
    if (parse_long(label)) return real_weight(BigRat(1));
    auto [k, m] = *parse_pair(label);
    if (m == 1) return real_weight(BigRat(1, k));
    if (m == 2) return real_weight(std::sqrt(static_cast<double>(k)));
    return real_weight(BigRat(1));
}

namespace {

SeriesCertificate p_series(std::string name, double s) {
    SeriesCertificate c;
    c.name = std::move(name);
    c.exponent = s;
    c.converges = s > 1.0;
    c.reason = s > 1.0 ? "p-series s=" + std::to_string(s)
                       : (s == 1.0 ? "harmonic series" : "p-series s=" + std::to_string(s));
    c.partial_sum = [s](long K) {
        double acc = 0.0;
        for (long k = 1; k <= K; ++k) acc += std::pow(static_cast<double>(k), -s);
        return acc;
    };
    return c;
}

}  // namespace

std::optional<SeriesCertificate> BudaFamily::fiber_series(const std::string& point,
                                                          double alpha) const {
    if (point != "0") return std::nullopt;
    // sum_k h(k,1)^alpha w(k,1)^2 = sum_k k^{alpha - 2}
    return p_series("sum_k h(k,1)^a w(k,1)^2 at a=" + std::to_string(alpha), 2.0 - alpha);
}

std::array<SeriesCertificate, 3> BudaFamily::defining_series(double alpha) const {
    return {p_series("sum w(k,1)^2", 2.0),
            p_series("sum w(k,1)^2 w(k,2)^{2a} at a=" + std::to_string(alpha), 2.0 - alpha),
            p_series("sum w(k,1)^2 w(k,2)^2", 1.0)};
}

nlohmann::json BudaFamily::describe() const {
    auto j = Family::describe();
    j["certificates"] = {
        {{"name", "sum w(k,1)^2"}, {"kind", "p-series"}, {"s", 2.0}, {"converges", true}},
        {{"name", "sum w(k,1)^2 w(k,2)^{2a}"},
         {"kind", "p-series"},
         {"s", "2-a"},
         {"converges", "a < 1"}},
        {{"name", "sum w(k,1)^2 w(k,2)^2"},
         {"kind", "p-series"},
         {"s", 1.0},
         {"converges", false}}};
    return j;
}

// ---- bilateral shift ----

BilateralShiftFamily::BilateralShiftFamily(double base, double scale, bool absorb_boundary)
    : base_(base), scale_(scale), absorb_(absorb_boundary) {
    if (!(base > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("bilateral shift: base and scale must be positive");
    name_ = "bilateral";
    doc_ =
        "X = Z with phi(n) = n-1 and w(n) = scale * base^n; counting measure. Fibers "
        "are singletons, so the conditional expectation is the identity on supp mu_w. "
        "Finite windows absorb at the bottom end.";
}

WindowedSpace BilateralShiftFamily::window(int n) const {
    if (!absorb_)
        throw std::invalid_argument("bilateral shift: no boundary convention declared");
    n = std::max(n, 1);
    const long pad = 4;
    std::vector<std::string> pts;
    for (long i = -(n + pad); i <= n + pad; ++i) pts.push_back(std::to_string(i));
    PointSpace s = truncate(pts);
    std::vector<int> core;
    for (int idx = 0; idx < s.size(); ++idx) {
        long v = *parse_long(s.label(idx));
        if (std::labs(v) <= n) core.push_back(idx);
    }
    return WindowedSpace{std::move(s), std::move(core)};
}

bool BilateralShiftFamily::in_domain(const std::string& label) const {
    return parse_long(label).has_value();
}

std::string BilateralShiftFamily::phi_label(const std::string& label) const {
    return std::to_string(*parse_long(label) - 1);
}

double BilateralShiftFamily::w(long n) const {
    return scale_ * std::pow(base_, static_cast<double>(n));
}

RatComplex BilateralShiftFamily::weight_label(const std::string& label) const {
    return real_weight(w(*parse_long(label)));
}

std::optional<BoundednessCertificate> BilateralShiftFamily::boundedness() const {
    if (base_ == 1.0)
        return BoundednessCertificate{true, scale_ * scale_, "constant weight"};
    return BoundednessCertificate{false, kInf, "h = (scale * base^{n+1})^2 is unbounded on Z"};
}

std::optional<double> BilateralShiftFamily::constant_h_ratio() const {
    return 1.0 / (base_ * base_);
}

std::optional<double> BilateralShiftFamily::h_infimum() const {
    if (base_ == 1.0) return scale_ * scale_;
    return 0.0;  // h = (scale * base^{n+1})^2 decays along one end of Z
}

std::optional<double> BilateralShiftFamily::e_pullback_infimum(double alpha) const {
    if (base_ == 1.0) return std::pow(scale_ * scale_, alpha);
    return 0.0;
}

double BilateralShiftFamily::h_certificate(long n) const {
    double v = w(n + 1);
    return v * v;
}

double BilateralShiftFamily::aluthge_weight_certificate(long n, double alpha) const {
    return scale_ * std::pow(base_, static_cast<double>(n) + alpha);
}

nlohmann::json BilateralShiftFamily::describe() const {
    auto j = Family::describe();
    j["base"] = base_;
    j["scale"] = scale_;
    j["certificates"] = {
        {{"name", "h(n) = (scale * base^{n+1})^2"}, {"kind", "closed-form"}},
        {{"name", "h o phi / h = base^{-2}"}, {"kind", "constant-ratio"}},
        {{"name", "w_alpha(n) = scale * base^{n+alpha}"}, {"kind", "closed-form"}}};
    return j;
}

// ---- linear Gaussian family ----

LinearGaussianFamily::LinearGaussianFamily(double theta) : theta_(theta) {
    if (!(theta > 0.0) || theta == 1.0)
        throw std::invalid_argument("linear-gaussian: theta must lie in (0,inf) \\ {1}");
}

RealMatrix LinearGaussianFamily::phi() const {
    RealMatrix m;
    m.n = 2;
    m.a = {0.0, theta_, 1.0, 0.0};
    return m;
}

double LinearGaussianFamily::rn(const std::vector<double>& x) const {
    return rn_linear_gaussian(phi(), RadialDensity::exponential(), x);
}

double LinearGaussianFamily::aluthge_rn(double alpha, const std::vector<double>& x) const {
    // phi invertible: E acts as the identity, so h_alpha = (h o phi^{-1})^alpha h^{1-alpha}
    RealMatrix inv = phi().inverse();
    double h_pre = rn(inv.apply(x));
    double h_here = rn(x);
    return std::pow(h_pre, alpha) * std::pow(h_here, 1.0 - alpha);
}

std::pair<bool, bool> LinearGaussianFamily::stages(double alpha) const {
    return stages_feasible(alpha, theta_);
}

bool LinearGaussianFamily::transform_hyponormal_on_grid(double alpha, double tol) const {
    const std::vector<double> grid{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    RealMatrix ph = phi();
    for (double x1 : grid) {
        for (double x2 : grid) {
            if (x1 == 0.0 && x2 == 0.0) continue;
            std::vector<double> x{x1, x2};
            double lhs = aluthge_rn(alpha, ph.apply(x));
            double rhs = aluthge_rn(alpha, x);
            if (lhs > rhs * (1.0 + tol)) return false;
        }
    }
    return true;
}

Verdict LinearGaussianFamily::bounded() const {
    // rho = exp is not a polynomial: bounded iff |phi^{-1}| <= 1
    double norm = phi().inverse().operator_norm();
    if (norm <= 1.0) return Verdict::yes_with(norm, "operator norm of the inverse map");
    Witness w;
    w.point = "phi_inverse";
    w.values["norm"] = norm;
    return Verdict::no(std::move(w), "inverse map has norm > 1");
}

std::vector<double> LinearGaussianFamily::feasible_alphas(const std::vector<double>& grid) const {
    std::vector<double> out;
    for (double a : grid) {
        auto [f1, f2] = stages(a);
        if (f1 && f2) out.push_back(a);
    }
    return out;
}

nlohmann::json LinearGaussianFamily::describe() const {
    return nlohmann::json{
        {"name", "linear-gaussian"},
        {"theta", theta_},
        {"doc",
         "analytic instance on (R^2, exp(|x|^2) dx) with phi(x1,x2) = (theta x2, x1); "
         "the alpha-transformed operator is hyponormal iff the two-inequality system "
         "in (alpha, theta) is feasible"}};
}

// ---- factory ----

std::unique_ptr<Family> make_family(const std::string& name,
                                    const std::map<std::string, std::string>& params) {
    auto get = [&](const std::string& key, const std::string& dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };
    if (name == "swap") {
        std::string w = get("w", "serwis");
        if (w == "serwis") return std::make_unique<SwapFamily>(SwapFamily::serwis_example());
        if (w == "linear") return std::make_unique<SwapFamily>(SwapFamily::linear());
        if (w == "const")
            return std::make_unique<SwapFamily>(SwapFamily::constant(std::stod(get("c", "1"))));
        throw std::invalid_argument("swap: unknown preset w=" + w);
    }
    if (name == "grid-tree") {
        std::string a = get("a", "harmonic");
        if (a == "harmonic")
            return std::make_unique<GridTreeFamily>(GridTreeFamily::harmonic());
        if (a == "geometric")
            return std::make_unique<GridTreeFamily>(
                GridTreeFamily::geometric(rat_parse(get("q", "1/2"))));
        throw std::invalid_argument("grid-tree: unknown preset a=" + a);
    }
    if (name == "buda") return std::make_unique<BudaFamily>();
    if (name == "bilateral")
        return std::make_unique<BilateralShiftFamily>(std::stod(get("base", "2")),
                                                      std::stod(get("scale", "1")));
    throw std::invalid_argument("unknown gallery family: " + name);
}

nlohmann::json list_families() {
    return nlohmann::json::array(
        {{{"name", "swap"}, {"params", {{"w", "serwis | linear | const"}, {"c", "weight for const"}}}},
         {{"name", "grid-tree"},
          {"params", {{"a", "harmonic | geometric"}, {"q", "ratio for geometric (rational)"}}}},
         {{"name", "buda"}, {"params", nlohmann::json::object()}},
         {{"name", "bilateral"}, {"params", {{"base", "weight base (default 2)"}, {"scale", "weight scale"}}}},
         {{"name", "linear-gaussian"},
          {"params", {{"theta", "parameter in (0,inf) != 1"}}},
          {"note", "analytic; no point space, exposed through stages/rn checks"}}});
}

}  // namespace wco::gallery
