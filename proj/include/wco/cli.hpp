#pragma once

#include "wco/json_io.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wco::cli {

// exit codes shared by all subcommands
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kTheoremViolation = 2;

struct InputSpec {
    std::string space_file;  // exactly one of space_file / gallery is set
    std::string gallery;
    std::map<std::string, std::string> params;
    int window = 16;
};

struct ReportOptions {
    InputSpec input;
    std::vector<std::string> checks;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> alpha;
    bool exact = false;
    std::optional<std::string> out_file;
};

struct AluthgeOptions {
    InputSpec input;
    double alpha = 0.5;
    bool exact = false;
    std::optional<std::string> out_file;
};

struct OracleOptions {
    std::optional<InputSpec> input;
    std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> ps{0.25, 0.5, 1.0, 2.0};
    std::uint64_t seed = 42;
    int n_random = 100;
    int max_dim = 12;
    std::optional<std::string> out_file;
};

struct GalleryBuildOptions {
    std::string name;
    std::map<std::string, std::string> params;
    int window = 16;
    std::optional<std::string> out_file;
};

// Run all oracle/criterion agreement suites on one space; each entry is
// (suite name, max deviation, tolerance, pass). Appended to `entries`.
struct AgreementEntry {
    std::string name;
    double max_error = 0.0;
    double tol = 0.0;
    bool pass = true;
};
std::vector<AgreementEntry> agreement_suites(const PointSpace& s,
                                             const std::vector<double>& alphas,
                                             const std::vector<double>& ps,
                                             std::mt19937_64& rng);

int run_report(const ReportOptions& opt, std::ostream& out, std::ostream& err);
int run_aluthge(const AluthgeOptions& opt, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err);
int run_gallery_list(std::ostream& out);
int run_gallery_build(const GalleryBuildOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace wco::cli
