#include "wco/cli.hpp"

#include "wco/properties.hpp"
#include "wco/random_space.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

namespace wco::cli {

namespace {

struct LoadedInput {
    PointSpace space;
    std::vector<int> core;  // empty: check every point
    std::unique_ptr<gallery::Family> family;
    json descriptor;
};

LoadedInput load_input(const InputSpec& in) {
    if (!in.space_file.empty()) {
        PointSpace s = load_space(in.space_file);
        json d{{"space", in.space_file}, {"dim", s.size()}};
        return LoadedInput{std::move(s), {}, nullptr, std::move(d)};
    }
    auto fam = gallery::make_family(in.gallery, in.params);
    gallery::WindowedSpace ws = fam->window(in.window);
    json d{{"gallery", in.gallery},
           {"params", in.params},
           {"window", in.window},
           {"dim", ws.space.size()}};
    return LoadedInput{std::move(ws.space), std::move(ws.core), std::move(fam), std::move(d)};
}

void emit(const json& doc, const std::optional<std::string>& out_file, std::ostream& out) {
    if (out_file) {
        std::ofstream f(*out_file);
        f << doc.dump(2) << "\n";
    }
    out << doc.dump(2) << "\n";
}

double require_param(const std::optional<double>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
    return *v;
}

bool is_theorem_violation(const Verdict& v) {
    return v.fails() && v.details.rfind("theorem violation", 0) == 0;
}

json run_one_check(const std::string& name, const LoadedInput& input,
                   const ReportOptions& opt, const CheckOptions& copt, bool* violation) {
    const PointSpace& s = input.space;
    const gallery::Family* fam = input.family.get();
    json entry;
    entry["name"] = name;

    auto put = [&](const Verdict& v) {
        entry["verdict"] = verdict_to_json(v);
        if (is_theorem_violation(v)) *violation = true;
    };

    if (name == "densely-defined") {
        put(fam ? is_densely_defined(*fam, input.descriptor["window"].get<int>())
                : is_densely_defined(s));
    } else if (name == "bounded") {
        put(fam ? is_bounded(*fam, input.descriptor["window"].get<int>()) : is_bounded(s));
    } else if (name == "perp") {
        double a = require_param(opt.alpha, "--alpha");
        entry["alpha"] = a;
        auto pts = fam ? aluthge_domain_perp(*fam, a, input.descriptor["window"].get<int>())
                       : aluthge_domain_perp(s, a);
        entry["points"] = pts;
        Verdict v = pts.empty() ? Verdict::yes("transform densely defined")
                                : Verdict::no(Witness{pts.front(), {}},
                                              "transform domain has a nontrivial complement");
        put(v);
    } else if (name == "aluthge-closed") {
        double a = require_param(opt.alpha, "--alpha");
        entry["alpha"] = a;
        put(aluthge_closed_criterion(s, a, copt));
    } else if (name == "serwis") {
        double a = require_param(opt.alpha, "--alpha");
        entry["alpha"] = a;
        SerwisReport r = fam ? serwis_conditions(*fam, a, input.descriptor["window"].get<int>())
                             : serwis_conditions(s, a, copt);
        entry["i"] = verdict_to_json(r.i);
        entry["ii"] = verdict_to_json(r.ii);
        entry["iii"] = verdict_to_json(r.iii);
        entry["iv"] = verdict_to_json(r.iv);
        entry["chain_consistent"] = r.chain_consistent;
        if (!r.chain_consistent) *violation = true;
    } else if (name == "p-hyponormal") {
        double p = require_param(opt.p, "--p");
        entry["p"] = p;
        put(fam ? is_p_hyponormal(*fam, p, input.descriptor["window"].get<int>())
                : is_p_hyponormal(s, p, copt));
    } else if (name == "class-Q") {
        double p = require_param(opt.p, "--p");
        entry["p"] = p;
        put(in_class_Q(s, p, copt));
    } else if (name == "quasinormal") {
        put(is_quasinormal(s, copt));
    } else if (name == "aluthge-fixed-point") {
        double a = require_param(opt.alpha, "--alpha");
        entry["alpha"] = a;
        if (opt.exact) {
            bool fixed = aluthge_fixed_point_exact(s, rat_from_double(a));
            entry["exact"] = true;
            put(fixed ? Verdict::yes("w_alpha = w exactly")
                      : Verdict::no(Witness{"", {}}, "w_alpha differs from w (exact mode)"));
        } else {
            put(aluthge_fixed_point(s, a, copt));
        }
    } else if (name == "improvement") {
        double p = require_param(opt.p, "--p");
        double a = require_param(opt.alpha, "--alpha");
        entry["p"] = p;
        entry["alpha"] = a;
        put(improvement_report(s, p, a, copt));
    } else if (name == "ups") {
        double p = require_param(opt.p, "--p");
        double a = require_param(opt.alpha, "--alpha");
        entry["p"] = p;
        entry["alpha"] = a;
        put(ups_inequality(s, p, a, copt));
    } else if (name == "pq-monotonicity") {
        double p = require_param(opt.p, "--p");
        double q = require_param(opt.q, "--q");
        entry["p"] = p;
        entry["q"] = q;
        put(pq_monotonicity(s, p, q, copt));
    } else {
        throw std::invalid_argument("unknown check name: " + name);
    }
    return entry;
}

}  // namespace

int run_report(const ReportOptions& opt, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    bool violation = false;
    bool input_error = false;

    // the analytic family has no point space; only its closed-form checks apply
    if (opt.input.gallery == "linear-gaussian") {
        try {
            double theta = std::stod(opt.input.params.count("theta")
                                         ? opt.input.params.at("theta")
                                         : "0.5");
            gallery::LinearGaussianFamily fam(theta);
            report["input"] = fam.describe();
            report["checks"] = json::array();
            for (const auto& name : opt.checks) {
                json entry;
                entry["name"] = name;
                if (name == "stages") {
                    double a = require_param(opt.alpha, "--alpha");
                    auto [f1, f2] = opt.exact
                                        ? stages_feasible_exact(rat_from_double(a),
                                                                rat_from_double(theta))
                                        : fam.stages(a);
                    entry["alpha"] = a;
                    entry["first"] = f1;
                    entry["second"] = f2;
                    entry["feasible"] = f1 && f2;
                    // two independent routes must agree
                    bool direct = fam.transform_hyponormal_on_grid(a);
                    entry["grid_agrees"] = direct == (f1 && f2);
                    if (!entry["grid_agrees"].get<bool>()) violation = true;
                } else if (name == "bounded") {
                    entry["verdict"] = verdict_to_json(fam.bounded());
                } else {
                    throw std::invalid_argument("unknown check for linear-gaussian: " + name);
                }
                report["checks"].push_back(entry);
            }
        } catch (const std::exception& e) {
            json doc{{"error", e.what()}};
            emit(doc, opt.out_file, out);
            err << "error: " << e.what() << "\n";
            return kInputError;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report["timing_ms"] = ms;
        emit(report, opt.out_file, out);
        return violation ? kTheoremViolation : kOk;
    }

    std::optional<LoadedInput> maybe_input;
    try {
        maybe_input = load_input(opt.input);
    } catch (const std::exception& e) {
        json doc{{"error", e.what()}};
        emit(doc, opt.out_file, out);
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    LoadedInput& input = *maybe_input;

    report["input"] = input.descriptor;
    report["checks"] = json::array();

    CheckOptions copt;
    copt.tol = Tolerances::from_env().exact;
    if (!input.core.empty()) copt.restrict_to = &input.core;

    for (const auto& name : opt.checks) {
        try {
            report["checks"].push_back(run_one_check(name, input, opt, copt, &violation));
        } catch (const std::exception& e) {
            // errors never abort the report; they appear as failed entries
            report["checks"].push_back(json{{"name", name}, {"error", e.what()}});
            input_error = true;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["timing_ms"] = ms;
    emit(report, opt.out_file, out);
    if (violation) return kTheoremViolation;
    return input_error ? kInputError : kOk;
}

int run_aluthge(const AluthgeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        LoadedInput input = load_input(opt.input);
        const PointSpace& s = input.space;
        json doc;
        doc["input"] = input.descriptor;
        doc["alpha"] = opt.alpha;

        if (opt.exact) {
            auto wa = aluthge_weight_exact(s, rat_from_double(opt.alpha));
            doc["exact"] = wa.has_value();
            if (wa) {
                WeightFunction wd(s.size());
                for (int i = 0; i < s.size(); ++i)
                    wd[i] = Complex(rat_to_double((*wa)[i].re), rat_to_double((*wa)[i].im));
                doc["w_alpha"] = weight_to_json(s, wd);
            }
        }
        if (!doc.contains("w_alpha"))
            doc["w_alpha"] = weight_to_json(s, aluthge_weight(s, opt.alpha));
        doc["h_alpha"] = field_to_json(s, aluthge_rn(s, opt.alpha));
        auto perp = input.family
                        ? aluthge_domain_perp(*input.family, opt.alpha,
                                              input.descriptor["window"].get<int>())
                        : aluthge_domain_perp(s, opt.alpha);
        doc["perp"] = perp;
        CheckOptions copt;
        copt.tol = Tolerances::from_env().exact;
        if (!input.core.empty()) copt.restrict_to = &input.core;
        doc["closed_criterion"] = verdict_to_json(aluthge_closed_criterion(s, opt.alpha, copt));
        emit(doc, opt.out_file, out);
        return kOk;
    } catch (const std::exception& e) {
        json doc{{"error", e.what()}};
        emit(doc, opt.out_file, out);
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

namespace {

DenseMatrix operator_matrix(const PointSpace& s,
                            const std::function<Vec(const PointSpace&, const Vec&)>& op) {
    const int n = s.size();
    DenseMatrix m(n);
    for (int y = 0; y < n; ++y) {
        Vec c(n, Complex(0, 0));
        c[y] = Complex(1, 0);
        Vec gc = to_coords(s, op(s, from_coords(s, c)));
        for (int i = 0; i < n; ++i) m.at(i, y) = gc[i];
    }
    return m;
}

double vec_norm(const Vec& v) {
    double acc = 0.0;
    for (const Complex& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

double vec_dist(const Vec& a, const Vec& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
    return std::sqrt(acc);
}

}  // namespace

std::vector<AgreementEntry> agreement_suites(const PointSpace& s,
                                             const std::vector<double>& alphas,
                                             const std::vector<double>& ps,
                                             std::mt19937_64& rng) {
    std::vector<AgreementEntry> out;
    const int n = s.size();
    DenseMatrix a = matrix_of(s);
    DenseMatrix ata = a.adjoint() * a;
    DenseMatrix aat = a * a.adjoint();
    const double scale = 1.0 + a.frobenius();
    const double lmax = std::max(0.0, sym_eig(ata).values.back());
    ScalarField h = radon_nikodym(s);

    // Delta_alpha(A) against the matrix of the reweighted operator
    {
        AgreementEntry e{"aluthge", 0.0, 1e-8, true};
        for (double al : alphas) {
            DenseMatrix lhs = aluthge_matrix(a, al);
            DenseMatrix rhs = matrix_of(s.reweighted(aluthge_weight(s, al)));
            e.max_error = std::max(e.max_error, (lhs - rhs).frobenius() / scale);
        }
        e.pass = e.max_error <= e.tol;
        out.push_back(e);
    }

    PolarDecomposition pd = polar(a);
    {
        AgreementEntry e{"polar-u", 0.0, 1e-9, true};
        DenseMatrix u2 = matrix_of(s.reweighted(partial_isometry_weight(s)));
        e.max_error = (pd.u - u2).frobenius() / scale;
        e.pass = e.max_error <= e.tol;
        out.push_back(e);
    }
    {
        AgreementEntry e{"polar-m-action", 0.0, 1e-9, true};
        for (int k = 0; k < 10; ++k) {
            Vec c = random_vector(rng, n);
            Vec lhs = pd.m.apply(c);
            Vec rhs(n);
            for (int i = 0; i < n; ++i) rhs[i] = std::sqrt(h[i]) * c[i];
            e.max_error = std::max(e.max_error, vec_dist(lhs, rhs) / (scale * vec_norm(c)));
        }
        e.pass = e.max_error <= e.tol;
        out.push_back(e);
    }

    {
        AgreementEntry e{"adjoint", 0.0, 1e-12, true};
        DenseMatrix adj = operator_matrix(s, apply_adjoint);
        e.max_error = (adj - a.adjoint()).max_abs();
        e.pass = e.max_error <= e.tol;
        out.push_back(e);
    }

    {
        AgreementEntry e{"modulus-power", 0.0, 1e-9, true};
        AgreementEntry e2{"adjoint-modulus-power", 0.0, 1e-9, true};
        for (double p : {0.5, 1.0, 2.0}) {
            DenseMatrix mp = matrix_power_psd(ata, p / 2.0);
            DenseMatrix mps = matrix_power_psd(aat, p / 2.0);
            double pscale = 1.0 + std::pow(std::sqrt(lmax), p);
            for (int k = 0; k < 5; ++k) {
                Vec c = random_vector(rng, n);
                Vec f = from_coords(s, c);
                double nc = vec_norm(c);
                Vec lhs = mp.apply(c);
                Vec rhs = to_coords(s, apply_modulus_power(s, p, f));
                e.max_error = std::max(e.max_error, vec_dist(lhs, rhs) / (pscale * nc));
                Vec lhs2 = mps.apply(c);
                Vec rhs2 = to_coords(s, apply_adjoint_modulus_power(s, p, f));
                e2.max_error = std::max(e2.max_error, vec_dist(lhs2, rhs2) / (pscale * nc));
            }
        }
        e.pass = e.max_error <= e.tol;
        e2.pass = e2.max_error <= e2.tol;
        out.push_back(e);
        out.push_back(e2);
    }

    {
        AgreementEntry e{"projection", 0.0, 1e-9, true};
        DenseMatrix pmat = operator_matrix(s, projection);
        e.max_error = (pmat - pd.u * pd.u.adjoint()).frobenius();
        e.pass = e.max_error <= e.tol;
        out.push_back(e);

        AgreementEntry e2{"projection-idempotent", 0.0, 1e-10, true};
        e2.max_error = std::max((pmat * pmat - pmat).frobenius(),
                                (pmat.adjoint() - pmat).frobenius());
        e2.pass = e2.max_error <= e2.tol;
        out.push_back(e2);
    }

    {
        AgreementEntry e{"p-hyponormal-agreement", 0.0, 0.5, true};
        for (double p : ps) {
            Verdict crit = is_p_hyponormal(s, p);
            DenseMatrix t = matrix_power_psd(ata, p);
            DenseMatrix ss = matrix_power_psd(aat, p);
            Verdict psd = psd_order_test(ss, t, 1e-9 * std::pow(lmax, p));
            if (crit.holds() != psd.holds()) e.max_error += 1.0;
        }
        e.pass = e.max_error == 0.0;
        out.push_back(e);
    }

    {
        AgreementEntry e{"fixed-point-quasinormal", 0.0, 0.5, true};
        Verdict qn = is_quasinormal(s);
        for (double al : alphas) {
            Verdict fp = aluthge_fixed_point(s, al);
            if (fp.holds() != qn.holds()) e.max_error += 1.0;
        }
        e.pass = e.max_error == 0.0;
        out.push_back(e);
    }

    return out;
}

namespace {

void merge_suite(std::map<std::string, AgreementEntry>& acc,
                 const std::vector<AgreementEntry>& entries) {
    for (const auto& e : entries) {
        auto [it, fresh] = acc.emplace(e.name, e);
        if (!fresh) {
            it->second.max_error = std::max(it->second.max_error, e.max_error);
            it->second.pass = it->second.pass && e.pass;
        }
    }
}

}  // namespace

int run_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    json doc;
    doc["seed"] = opt.seed;
    doc["n_random"] = opt.n_random;
    try {
        std::mt19937_64 rng(opt.seed);
        std::map<std::string, AgreementEntry> acc;
        int count = 0;
        if (opt.input) {
            LoadedInput input = load_input(*opt.input);
            doc["input"] = input.descriptor;
            merge_suite(acc, agreement_suites(input.space, opt.alphas, opt.ps, rng));
            ++count;
        }
        for (int i = 0; i < opt.n_random; ++i) {
            PointSpace s = random_space(rng, opt.max_dim);
            merge_suite(acc, agreement_suites(s, opt.alphas, opt.ps, rng));
            ++count;
        }
        doc["spaces"] = count;
        doc["suites"] = json::array();
        bool all_pass = true;
        for (const auto& [name, e] : acc) {
            doc["suites"].push_back(json{{"name", e.name},
                                         {"max_error", e.max_error},
                                         {"tol", e.tol},
                                         {"pass", e.pass}});
            all_pass = all_pass && e.pass;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        doc["timing_ms"] = ms;
        emit(doc, opt.out_file, out);
        return all_pass ? kOk : kTheoremViolation;
    } catch (const std::exception& e) {
        doc["error"] = e.what();
        emit(doc, opt.out_file, out);
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int run_gallery_list(std::ostream& out) {
    out << gallery::list_families().dump(2) << "\n";
    return kOk;
}

int run_gallery_build(const GalleryBuildOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        json doc;
        if (opt.name == "linear-gaussian") {
            double theta =
                std::stod(opt.params.count("theta") ? opt.params.at("theta") : "0.5");
            doc = gallery::LinearGaussianFamily(theta).describe();
        } else {
            auto fam = gallery::make_family(opt.name, opt.params);
            gallery::WindowedSpace ws = fam->window(opt.window);
            doc["family"] = fam->describe();
            doc["window"] = opt.window;
            doc["space"] = space_to_json(ws.space);
            json core = json::array();
            for (int i : ws.core) core.push_back(ws.space.label(i));
            doc["core"] = core;
        }
        emit(doc, opt.out_file, out);
        return kOk;
    } catch (const std::exception& e) {
        json doc{{"error", e.what()}};
        emit(doc, opt.out_file, out);
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace wco::cli
