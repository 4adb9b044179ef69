#include "wco/properties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

const char* status_name(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        default: return "inconclusive";
    }
}

namespace {

std::vector<int> all_points(const PointSpace& s) {
    std::vector<int> v(s.size());
    for (int i = 0; i < s.size(); ++i) v[i] = i;
    return v;
}

std::vector<int> points_to_check(const PointSpace& s, const CheckOptions& opt) {
    if (opt.restrict_to) return *opt.restrict_to;
    return all_points(s);
}

bool rel_eq(double a, double b, double tol) {
    if (a == b) return true;
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

Witness witness_at(const PointSpace& s, int x, std::map<std::string, double> values) {
    return Witness{s.label(x), std::move(values)};
}

}  // namespace

Verdict is_densely_defined(const PointSpace& s) {
    ScalarField h = radon_nikodym(s);
    for (int x = 0; x < s.size(); ++x)
        if (std::isinf(h[x]))
            return Verdict::no(witness_at(s, x, {{"h", h[x]}}), "h is infinite");
    return Verdict::yes("h finite at every point");
}

Verdict is_bounded(const PointSpace& s, std::optional<double> bound) {
    ScalarField h = radon_nikodym(s);
    int arg = 0;
    for (int x = 1; x < s.size(); ++x)
        if (h[x] > h[arg]) arg = x;
    double sup = s.size() ? h[arg] : 0.0;
    if (std::isinf(sup))
        return Verdict::no(witness_at(s, arg, {{"h", sup}}), "sup h infinite");
    if (bound && sup > *bound)
        return Verdict::no(witness_at(s, arg, {{"h", sup}, {"bound", *bound}}),
                           "sup h exceeds the requested bound");
    return Verdict::yes_with(sup, "sup h");
}

std::vector<std::string> aluthge_domain_perp(const PointSpace& s, double alpha) {
    ScalarField h = radon_nikodym(s);
    ScalarField ha(s.size());
    for (int x = 0; x < s.size(); ++x) ha[x] = xpow(h[x], alpha);
    ScalarField g = cond_exp_pullback(s, ha);
    std::vector<std::string> out;
    for (int x = 0; x < s.size(); ++x)
        if (std::isinf(g[x])) out.push_back(s.label(x));
    return out;
}

Verdict aluthge_closed_criterion(const PointSpace& s, double alpha, const CheckOptions& opt) {
    ScalarField h = radon_nikodym(s);
    ScalarField ha(s.size());
    for (int x = 0; x < s.size(); ++x) ha[x] = xpow(h[x], alpha);
    ScalarField g = cond_exp_pullback(s, ha);
    double sup = 0.0;
    int arg = -1;
    for (int x : points_to_check(s, opt)) {
        double pw = xpow(h[x], 1.0 - alpha);
        double ratio = xdiv(pw, 1.0 + xmul(g[x], pw));
        if (ratio > sup) {
            sup = ratio;
            arg = x;
        }
    }
    if (std::isinf(sup))
        return Verdict::no(witness_at(s, arg, {{"ratio", sup}}),
                           "no finite constant closes the domain inequality");
    return Verdict::yes_with(sup, "least admissible constant");
}

SerwisReport serwis_conditions(const PointSpace& s, double alpha, const CheckOptions& opt) {
    ScalarField h = radon_nikodym(s);
    ScalarField ha(s.size());
    for (int x = 0; x < s.size(); ++x) ha[x] = xpow(h[x], alpha);
    ScalarField g = cond_exp_pullback(s, ha);
    auto pts = points_to_check(s, opt);

    SerwisReport r;

    // (i) h >= c a.e. [mu]
    {
        int arg = pts.empty() ? -1 : pts.front();
        for (int x : pts)
            if (h[x] < h[arg]) arg = x;
        if (arg >= 0 && h[arg] > 0.0)
            r.i = Verdict::yes_with(h[arg], "essential infimum of h");
        else
            r.i = Verdict::no(witness_at(s, std::max(arg, 0), {{"h", arg >= 0 ? h[arg] : 0.0}}),
                              "h vanishes");
    }

    // (ii) E(h^a) o phi^{-1} >= c on {h != 0}
    {
        int arg = -1;
        for (int x : pts) {
            if (h[x] == 0.0) continue;
            if (arg < 0 || g[x] < g[arg]) arg = x;
        }
        if (arg < 0)
            r.ii = Verdict::yes_with(1.0, "vacuous: {h != 0} is empty");
        else if (g[arg] > 0.0)
            r.ii = Verdict::yes_with(g[arg], "infimum over {h != 0}");
        else
            r.ii = Verdict::no(witness_at(s, arg, {{"E", g[arg]}}),
                               "E(h^a) o phi^{-1} vanishes on {h != 0}");
    }

    // (iii) c E(h^a) o phi^{-1} h^{1-a} >= h^{1-a} on {h != 0}
    {
        double sup = 0.0;
        int arg = -1;
        bool nonempty = false;
        for (int x : pts) {
            if (h[x] == 0.0) continue;
            nonempty = true;
            double pw = xpow(h[x], 1.0 - alpha);
            double ratio = xdiv(pw, xmul(g[x], pw));
            if (ratio > sup || arg < 0) {
                sup = ratio;
                arg = x;
            }
        }
        if (!nonempty)
            r.iii = Verdict::yes_with(1.0, "vacuous: {h != 0} is empty");
        else if (std::isinf(sup))
            r.iii = Verdict::no(witness_at(s, arg, {{"E", g[arg]}}),
                                "right-hand side vanishes on {h != 0}");
        else
            r.iii = Verdict::yes_with(sup, "least admissible constant");
    }

    // (iv) c (1 + E(h^a) o phi^{-1} h^{1-a}) >= h^{1-a} on {h != 0}
    {
        double sup = 0.0;
        int arg = -1;
        bool nonempty = false;
        for (int x : pts) {
            if (h[x] == 0.0) continue;
            nonempty = true;
            double pw = xpow(h[x], 1.0 - alpha);
            double ratio = xdiv(pw, 1.0 + xmul(g[x], pw));
            if (ratio > sup || arg < 0) {
                sup = ratio;
                arg = x;
            }
        }
        if (!nonempty)
            r.iv = Verdict::yes_with(1.0, "vacuous: {h != 0} is empty");
        else if (std::isinf(sup))
            r.iv = Verdict::no(witness_at(s, arg, {{"ratio", sup}}), "unbounded ratio");
        else
            r.iv = Verdict::yes_with(sup, "least admissible constant");
    }

    r.chain_consistent = (!r.i.holds() || r.ii.holds()) && (r.ii.holds() == r.iii.holds()) &&
                         (!r.iii.holds() || r.iv.holds());
    return r;
}

Verdict is_p_hyponormal(const PointSpace& s, double p, const CheckOptions& opt) {
    if (!(p > 0.0)) throw std::invalid_argument("is_p_hyponormal: p must be positive");
    ScalarField h = radon_nikodym(s);
    for (double v : h)
        if (std::isinf(v)) throw std::domain_error("not densely defined");
    auto pts = points_to_check(s, opt);

    // h > 0 a.e. [mu_w]
    for (int z : pts) {
        if (s.weight_is_zero(z)) continue;
        if (h[z] == 0.0)
            return Verdict::no(witness_at(s, z, {{"h", 0.0}}), "h vanishes on supp mu_w");
    }
    // E(h^p o phi / h^p) <= 1 a.e. [mu_w]
    ScalarField ratio(s.size());
    for (int y = 0; y < s.size(); ++y)
        ratio[y] = xdiv(xpow(h[s.phi(y)], p), xpow(h[y], p));
    ScalarField e = cond_exp(s, ratio);
    for (int z : pts) {
        if (s.weight_is_zero(z)) continue;
        if (!(e[z] <= 1.0 + opt.tol))
            return Verdict::no(witness_at(s, z, {{"E", e[z]}}),
                               "conditional expectation of the ratio exceeds 1");
    }
    return Verdict::yes();
}

Verdict in_class_Q(const PointSpace& s, double p, const CheckOptions& opt) {
    if (!(p > 0.0)) throw std::invalid_argument("in_class_Q: p must be positive");
    ScalarField h = radon_nikodym(s);
    ScalarField hp(s.size());
    for (int x = 0; x < s.size(); ++x) hp[x] = xpow(h[x], p);
    ScalarField e = cond_exp(s, hp);
    for (int z : points_to_check(s, opt)) {
        if (s.weight_is_zero(z)) continue;
        double lhs = hp[s.phi(z)];
        if (!(lhs <= e[z] + opt.tol * std::max(1.0, e[z])))
            return Verdict::no(witness_at(s, z, {{"lhs", lhs}, {"E", e[z]}}),
                               "h^p o phi exceeds E(h^p)");
    }
    return Verdict::yes();
}

Verdict is_quasinormal(const PointSpace& s, const CheckOptions& opt) {
    ScalarField h = radon_nikodym(s);
    for (int z : points_to_check(s, opt)) {
        if (s.weight_is_zero(z)) continue;
        if (!rel_eq(h[s.phi(z)], h[z], opt.tol))
            return Verdict::no(witness_at(s, z, {{"h", h[z]}, {"h_phi", h[s.phi(z)]}}),
                               "h o phi differs from h on supp mu_w");
    }
    return Verdict::yes();
}

Verdict aluthge_fixed_point(const PointSpace& s, double alpha, const CheckOptions& opt) {
    WeightFunction wa = aluthge_weight(s, alpha);
    for (int x : points_to_check(s, opt)) {
        double diff = std::abs(wa[x] - s.weight(x));
        double scale = std::max(std::abs(wa[x]), std::abs(s.weight(x)));
        if (diff > opt.tol * scale)
            return Verdict::no(
                witness_at(s, x, {{"w", std::abs(s.weight(x))}, {"w_alpha", std::abs(wa[x])}}),
                "w_alpha differs from w");
    }
    return Verdict::yes();
}

bool aluthge_fixed_point_exact(const PointSpace& s, const BigRat& alpha) {
    auto wa = aluthge_weight_exact(s, alpha);
    if (!wa) return false;  // some power is irrational, hence != 1, hence w_alpha != w
    for (int x = 0; x < s.size(); ++x)
        if ((*wa)[x].re != s.weight_exact(x).re || (*wa)[x].im != s.weight_exact(x).im)
            return false;
    return true;
}

Verdict improvement_report(const PointSpace& s, double p, double alpha,
                           const CheckOptions& opt) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("improvement_report: p must lie in (0,1)");
    if (!(alpha > 0.0 && alpha <= 1.0 - p + 1e-15))
        throw std::invalid_argument("improvement_report: alpha must lie in (0, 1-p]");
    if (!is_p_hyponormal(s, p, opt).holds())
        throw std::domain_error("improvement_report: operator is not p-hyponormal");

    PointSpace transformed = s.reweighted(aluthge_weight(s, alpha));
    Verdict v = is_p_hyponormal(transformed, p + alpha, opt);
    if (v.fails()) v.details = "theorem violation: transform is not (p+alpha)-hyponormal";
    return v;
}

Verdict ups_inequality(const PointSpace& s, double p, double alpha, const CheckOptions& opt) {
    if (!(p > 0.0)) throw std::invalid_argument("ups_inequality: p must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("ups_inequality: alpha must lie in (0,1]");
    if (!is_p_hyponormal(s, p, opt).holds())
        throw std::domain_error("ups_inequality: operator is not p-hyponormal");

    ScalarField h = radon_nikodym(s);
    ScalarField ha(s.size());
    for (int x = 0; x < s.size(); ++x) ha[x] = xpow(h[x], alpha);
    ScalarField e_ha = cond_exp(s, ha);

    PointSpace ta = s.reweighted(aluthge_weight(s, alpha));
    ScalarField h2 = radon_nikodym(ta);
    ScalarField ratio(s.size());
    const double q = p + alpha;
    for (int y = 0; y < s.size(); ++y)
        ratio[y] = xdiv(xpow(h2[ta.phi(y)], q), xpow(h2[y], q));
    ScalarField lhs = cond_exp(ta, ratio);

    for (int z : points_to_check(s, opt)) {
        if (ta.weight_is_zero(z)) continue;  // pointwise on supp mu_{w_alpha}
        double rhs = xpow(xdiv(e_ha[z], ha[z]), q - 1.0);
        if (!(lhs[z] <= rhs + opt.tol * std::max(1.0, rhs)))
            return Verdict::no(witness_at(s, z, {{"lhs", lhs[z]}, {"rhs", rhs}}),
                               "transform inequality violated");
    }
    return Verdict::yes();
}

Verdict pq_monotonicity(const PointSpace& s, double p, double q, const CheckOptions& opt) {
    if (!(q > 0.0 && q < p)) throw std::invalid_argument("pq_monotonicity: need 0 < q < p");
    if (!is_p_hyponormal(s, p, opt).holds())
        return Verdict::yes("vacuous: not p-hyponormal at the larger exponent");
    Verdict v = is_p_hyponormal(s, q, opt);
    if (v.fails()) v.details = "theorem violation: p-hyponormal but not q-hyponormal";
    return v;
}

// ---- lazy-family variants ----

Verdict decide_series(const gallery::SeriesCertificate& c, long window) {
    if (c.converges.has_value()) {
        if (*c.converges)
            return Verdict::yes_with(c.partial_sum ? c.partial_sum(window) : 0.0, c.reason);
        Witness w;
        w.point = "";
        if (c.partial_sum) w.values["partial_sum"] = c.partial_sum(window);
        return Verdict::no(std::move(w), "declared divergent: " + c.reason);
    }
    if (!c.partial_sum) return Verdict::unknown("no partial-sum evaluator");
    double s4 = c.partial_sum(4 * window);
    if (s4 > kDivergenceThreshold) {
        Witness w;
        w.point = "";
        w.values["partial_sum"] = s4;
        return Verdict::no(std::move(w), "partial sums exceed the divergence threshold");
    }
    return Verdict::unknown("partial sums below threshold; convergence undeclared");
}

Verdict is_densely_defined(const gallery::Family& fam, int window) {
    gallery::WindowedSpace ws = fam.window(window);
    const long series_window = 10000;
    for (int x = 0; x < ws.space.size(); ++x) {
        auto cert = fam.fiber_series(ws.space.label(x), 0.0);
        if (!cert) continue;  // finite fiber, finite sum
        Verdict v = decide_series(*cert, series_window);
        if (v.fails()) {
            v.witness->point = ws.space.label(x);
            v.details = "divergent fiber sum: " + v.details;
            return v;
        }
        if (!v.holds()) return Verdict::unknown("fiber sum at " + ws.space.label(x) +
                                                " undecided on the window");
    }
    return Verdict::yes("all fiber sums finite (certificates + finite fibers)");
}

Verdict is_bounded(const gallery::Family& fam, int window) {
    if (auto cert = fam.boundedness()) {
        if (cert->bounded) return Verdict::yes_with(cert->sup, cert->reason);
        gallery::WindowedSpace ws = fam.window(window);
        ScalarField h = radon_nikodym(ws.space);
        int arg = ws.core.empty() ? 0 : ws.core.front();
        for (int x : ws.core)
            if (h[x] > h[arg]) arg = x;
        return Verdict::no(witness_at(ws.space, arg, {{"h", h[arg]}}),
                           "unbounded certificate: " + cert->reason);
    }
    // no certificate: only divergence past the threshold is decidable
    double sup = 0.0;
    int arg_label = 0;
    for (int n : {window, 2 * window, 4 * window}) {
        gallery::WindowedSpace ws = fam.window(n);
        ScalarField h = radon_nikodym(ws.space);
        for (int x : ws.core)
            if (h[x] > sup) {
                sup = h[x];
                arg_label = x;
            }
        if (sup > kDivergenceThreshold) {
            return Verdict::no(witness_at(ws.space, arg_label, {{"h", sup}}),
                               "sup h exceeds the divergence threshold across window doublings");
        }
    }
    Verdict v = Verdict::unknown("sup still growing or stable on windows; no certificate");
    v.constant = sup;
    return v;
}

std::vector<std::string> aluthge_domain_perp(const gallery::Family& fam, double alpha,
                                             int window) {
    gallery::WindowedSpace ws = fam.window(window);
    const long series_window = 10000;
    std::vector<std::string> out;
    for (int x = 0; x < ws.space.size(); ++x) {
        auto cert = fam.fiber_series(ws.space.label(x), alpha);
        if (!cert) continue;
        if (decide_series(*cert, series_window).fails()) out.push_back(ws.space.label(x));
    }
    return out;
}

SerwisReport serwis_conditions(const gallery::Family& fam, double alpha, int window) {
    gallery::WindowedSpace ws = fam.window(window);
    CheckOptions opt;
    opt.restrict_to = &ws.core;
    SerwisReport r = serwis_conditions(ws.space, alpha, opt);

    if (auto inf = fam.h_infimum()) {
        if (*inf > 0.0)
            r.i = Verdict::yes_with(*inf, "family infimum certificate");
        else
            r.i = Verdict::no(Witness{"", {{"inf_h", 0.0}}},
                              "the family's essential infimum of h is 0");
    }
    if (auto inf = fam.e_pullback_infimum(alpha)) {
        if (*inf > 0.0) {
            r.ii = Verdict::yes_with(*inf, "family infimum certificate");
            r.iii = Verdict::yes_with(1.0 / *inf, "family infimum certificate");
        } else {
            Witness w{"", {{"inf_E", 0.0}}};
            r.ii = Verdict::no(w, "the family's infimum of E(h^a) o phi^{-1} is 0");
            r.iii = Verdict::no(w, "no constant works on {h != 0}");
        }
    }
    // (iii) => (iv) with the same constant; (iv) also follows from bounded h
    if (r.iii.holds() && !r.iv.holds())
        r.iv = Verdict::yes_with(*r.iii.constant, "implied by the stronger condition");
    if (!r.iv.holds()) {
        if (auto b = fam.boundedness(); b && b->bounded) {
            double c = std::max(1.0, xpow(b->sup, 1.0 - alpha));
            r.iv = Verdict::yes_with(std::max(c, r.iv.constant.value_or(0.0)),
                                     "h essentially bounded");
        }
    }
    r.chain_consistent = (!r.i.holds() || r.ii.holds()) && (r.ii.holds() == r.iii.holds()) &&
                         (!r.iii.holds() || r.iv.holds());
    return r;
}

Verdict is_p_hyponormal(const gallery::Family& fam, double p, int window) {
    gallery::WindowedSpace ws = fam.window(window);
    CheckOptions opt;
    opt.restrict_to = &ws.core;
    Verdict v = is_p_hyponormal(ws.space, p, opt);
    if (v.fails()) return v;  // core values are exact family values
    if (auto ratio = fam.constant_h_ratio()) {
        if (*ratio <= 1.0)
            return Verdict::yes("window core + constant-ratio certificate (ratio = " +
                                std::to_string(*ratio) + ")");
        Witness w;
        w.point = "";
        w.values["ratio"] = *ratio;
        return Verdict::no(std::move(w), "constant ratio exceeds 1");
    }
    if (v.holds()) return Verdict::unknown("holds on the window core; no family certificate");
    return v;
}

}  // namespace wco
