// Command-line front end: constants, dimensions, design verification,
// numerical search, catalog configurations and the regular-scheme check.

#include "ttd/designs.hpp"
#include "ttd/io.hpp"
#include "ttd/moments.hpp"
#include "ttd/polyspace.hpp"
#include "ttd/projective.hpp"
#include "ttd/rng.hpp"
#include "ttd/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct CommonOut {
    std::string format = "table"; // or "json"
};

void add_output_flag(CLI::App* cmd, CommonOut& out) {
    cmd->add_option("--output", out.format, "Output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
}

ttd::Field field_option(const std::string& name) { return ttd::parse_field(name); }

/// Angle token: a decimal, or g+ / g- for (3 +- sqrt(5))/8.
double parse_angle_token(const std::string& token) {
    if (token == "g+") return (3.0 + std::sqrt(5.0)) / 8.0;
    if (token == "g-" || token == "g−") return (3.0 - std::sqrt(5.0)) / 8.0;
    std::size_t pos = 0;
    const double value = std::stod(token, &pos);
    if (pos != token.size()) {
        throw CLI::ValidationError("angles", "bad angle token '" + token + "'");
    }
    return value;
}

std::vector<std::string> split_commas(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int run_constants(ttd::Field field, int d, int t, std::optional<long long> n,
                  const CommonOut& fmt) {
    const ttd::Rational ct = ttd::c_t_exact(field, d, t);
    const int m = ttd::field_dim(field);
    const long long b = t >= 1 ? ttd::b_const_exact(t, m) : 1;
    const long long dim_tt = ttd::dim_homtt(field, d, t);

    if (fmt.format == "json") {
        json j = {{"field", ttd::field_name(field)},
                  {"dim", d},
                  {"t", t},
                  {"c_t", ct.to_double()},
                  {"c_t_exact", ct.str()},
                  {"b_t_m", b},
                  {"dim_homtt", dim_tt}};
        if (n) j["bound"] = ct.to_double() * static_cast<double>(*n) * static_cast<double>(*n);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(15);
        std::cout << "c_" << t << "(" << ttd::field_name(field) << "^" << d << ") = "
                  << ct.str() << " = " << ct.to_double() << "\n";
        std::cout << "b_{" << t << "," << m << "} = " << b << "\n";
        std::cout << "dim Hom(" << t << "," << t << ") = " << dim_tt << "\n";
        if (n) {
            std::cout << "bound c_t n^2 = " << ct.to_double() * static_cast<double>(*n) *
                                                   static_cast<double>(*n)
                      << "  (n = " << *n << ")\n";
        }
    }
    return 0;
}

int run_dim(ttd::Field field, int d, int t, bool rank_check, int samples, std::uint64_t seed,
            const CommonOut& fmt) {
    const long long dim_tt = ttd::dim_homtt(field, d, t);
    const long long dim_2t = ttd::dim_hom_r(field, d, 2 * t);
    std::optional<ttd::RankResult> rank;
    if (rank_check) {
        const int use = samples > 0 ? samples : static_cast<int>(dim_tt) + 20;
        rank = ttd::homtt_dim_by_rank(field, d, t, use, seed);
    }
    if (fmt.format == "json") {
        json j = {{"field", ttd::field_name(field)},
                  {"dim", d},
                  {"t", t},
                  {"dim_homtt", dim_tt},
                  {"dim_hom_2t", dim_2t}};
        if (rank) {
            j["rank"] = rank->rank;
            j["enough_samples"] = rank->enough_samples;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim Hom(" << t << "," << t << ") = " << dim_tt << "\n";
        std::cout << "dim Hom_" << 2 * t << " = " << dim_2t << "\n";
        if (rank) {
            std::cout << "gram rank = " << rank->rank
                      << (rank->enough_samples ? "" : "  (warning: too few samples)") << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& path, int t, double tol, bool expect_design,
               const CommonOut& fmt) {
    const ttd::Configuration cfg = ttd::load_config(path);
    const ttd::DesignReport report = ttd::verify(cfg, t, tol);
    if (fmt.format == "json") {
        std::cout << ttd::report_to_json(report) << "\n";
    } else {
        std::cout << ttd::report_table(report);
    }
    if (expect_design && !report.is_design) return 2;
    return 0;
}

int run_search(ttd::SearchOptions opts, const std::string& out_path,
               const std::string& trajectory_path, const CommonOut& fmt) {
    const ttd::SearchResult result = ttd::minimize(opts);
    if (!out_path.empty()) ttd::save_config(result.best, out_path);
    if (!trajectory_path.empty()) ttd::save_trajectory_csv(result, trajectory_path);
    if (fmt.format == "json") {
        std::cout << ttd::search_result_to_json(result) << "\n";
    } else {
        std::cout << "restart " << result.restart_index << ", "
                  << (result.converged ? "converged" : "hit max iterations") << "\n";
        std::cout << ttd::report_table(result.report);
    }
    return 0;
}

int run_catalog(const std::string& which, ttd::Field field, int d) {
    ttd::Configuration cfg;
    if (which == "onb") {
        cfg = ttd::onb(field, d);
    } else if (which == "mub") {
        cfg = ttd::mub_family(field, d);
    } else {
        throw CLI::ValidationError("catalog", "unknown catalog entry '" + which + "'");
    }
    std::cout << ttd::config_to_json(cfg) << "\n";
    return 0;
}

int run_hoggar(long long n, ttd::Field field, int d, int t, const std::string& angles,
               const std::string& counts, const CommonOut& fmt) {
    ttd::RegularScheme scheme;
    scheme.n = n;
    for (const std::string& token : split_commas(angles)) {
        scheme.angles.push_back(parse_angle_token(token));
    }
    for (const std::string& token : split_commas(counts)) {
        scheme.counts.push_back(std::stoll(token));
    }

    json rows = json::array();
    bool all_pass = true;
    for (int r = 1; r <= t; ++r) {
        const auto [lhs, rhs] = ttd::regular_scheme_check(scheme, field, d, r);
        const bool pass = std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs));
        all_pass = all_pass && pass;
        if (fmt.format == "json") {
            rows.push_back({{"r", r}, {"lhs", lhs}, {"rhs", rhs}, {"pass", pass}});
        } else {
            std::cout << std::setprecision(15) << "r=" << r << "  lhs " << lhs << "  rhs "
                      << rhs << "  " << (pass ? "pass" : "FAIL") << "\n";
        }
    }
    if (fmt.format == "json") {
        std::cout << json{{"n", n},
                          {"field", ttd::field_name(field)},
                          {"dim", d},
                          {"checks", rows},
                          {"all_pass", all_pass}}
                         .dump(2)
                  << "\n";
    }
    return 0;
}

int run_kernel_test(ttd::Field field, int d, int t, int samples, std::uint64_t seed,
                    const CommonOut& fmt) {
    ttd::Rng rng(seed);
    double max_apolar_err = 0.0;
    double max_reproduce_err = 0.0;
    for (int i = 0; i < samples; ++i) {
        const ttd::Vector v = ttd::random_unit_vector(rng, field, d);
        const ttd::Vector w = ttd::random_unit_vector(rng, field, d);
        const ttd::Poly kv = ttd::kernel_poly(v, field, t);
        const ttd::Poly kw = ttd::kernel_poly(w, field, t);
        const double got = ttd::apolar(kv, kw, t, ttd::field_dim(field));
        double expected = 1.0;
        const double base = ttd::abs_ip_sq(v, w);
        for (int e = 0; e < t; ++e) expected *= base;
        max_apolar_err = std::max(max_apolar_err, std::abs(got - expected));

        const ttd::Poly f = kv * 3.0 + kw * 2.0;
        const ttd::Vector probe = ttd::random_unit_vector(rng, field, d);
        const auto [lhs, rhs] = ttd::reproduce(f, probe, t, field);
        max_reproduce_err = std::max(max_reproduce_err, std::abs(lhs - rhs));
    }
    const long long expected_dim = ttd::dim_homtt(field, d, t);
    const ttd::RankResult rank =
        ttd::homtt_dim_by_rank(field, d, t, static_cast<int>(expected_dim) + 20, seed);

    if (fmt.format == "json") {
        json j = {{"field", ttd::field_name(field)},
                  {"dim", d},
                  {"t", t},
                  {"samples", samples},
                  {"max_apolar_residual", max_apolar_err},
                  {"max_reproduce_residual", max_reproduce_err},
                  {"gram_rank", rank.rank},
                  {"dim_homtt", expected_dim}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::setprecision(6);
        std::cout << "max |<K_v,K_w> - |<v,w>|^{2t}|  : " << max_apolar_err << "\n";
        std::cout << "max reproduce residual          : " << max_reproduce_err << "\n";
        std::cout << "gram rank " << rank.rank << " vs dim Hom(t,t) " << expected_dim << "\n";
    }
    return (rank.rank == expected_dim && max_apolar_err < 1e-8 && max_reproduce_err < 1e-8)
               ? 0
               : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical (t,t)-design toolkit for R^d, C^d and H^d"};
    app.require_subcommand(1);

    std::string field_name = "H";
    int dim = 2;
    int t = 1;

    // constants
    auto* constants = app.add_subcommand("constants", "Closed-form constants c_t, b_{t,m}, dims");
    CommonOut constants_fmt;
    std::optional<long long> constants_n;
    constants->add_option("--field", field_name, "Field R, C or H")->required();
    constants->add_option("--dim", dim, "Dimension d")->required();
    constants->add_option("--t", t, "Design order t")->required();
    constants->add_option("--n", constants_n, "Vector count for the bound c_t n^2");
    add_output_flag(constants, constants_fmt);

    // dim
    auto* dim_cmd = app.add_subcommand("dim", "Dimension of Hom(t,t), optionally by Gram rank");
    CommonOut dim_fmt;
    bool rank_check = false;
    int dim_samples = 0;
    std::uint64_t dim_seed = 1;
    dim_cmd->add_option("--field", field_name, "Field R, C or H")->required();
    dim_cmd->add_option("--dim", dim, "Dimension d")->required();
    dim_cmd->add_option("--t", t, "Design order t")->required();
    dim_cmd->add_flag("--rank-check", rank_check, "Also measure the kernel Gram rank");
    dim_cmd->add_option("--samples", dim_samples, "Sample count for the rank check");
    dim_cmd->add_option("--seed", dim_seed, "Random seed for the rank check");
    add_output_flag(dim_cmd, dim_fmt);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verify a configuration file");
    CommonOut verify_fmt;
    std::string config_path;
    double tol = ttd::kCatalogTol;
    bool expect_design = false;
    verify_cmd->add_option("config", config_path, "Configuration JSON file")->required();
    verify_cmd->add_option("--t", t, "Design order t")->required();
    verify_cmd->add_option("--tol", tol, "Relative gap tolerance");
    verify_cmd->add_flag("--expect-design", expect_design,
                         "Exit with status 2 when the verdict is negative");
    add_output_flag(verify_cmd, verify_fmt);

    // search
    auto* search_cmd = app.add_subcommand("search", "Minimize the frame potential");
    CommonOut search_fmt;
    ttd::SearchOptions opts;
    std::string out_path;
    std::string trajectory_path;
    search_cmd->add_option("--field", field_name, "Field R, C or H")->required();
    search_cmd->add_option("--dim", dim, "Dimension d")->required();
    search_cmd->add_option("--n", opts.n, "Number of vectors")->required();
    search_cmd->add_option("--t", opts.t, "Design order t")->required();
    search_cmd->add_option("--restarts", opts.restarts, "Independent restarts");
    search_cmd->add_option("--seed", opts.seed, "Master seed");
    search_cmd->add_option("--max-iters", opts.max_iters, "Iteration cap per restart");
    search_cmd->add_option("--grad-tol", opts.grad_tol, "Tangent gradient stopping norm");
    search_cmd->add_option("--target-gap", opts.target_gap, "Relative gap stopping threshold");
    search_cmd->add_option("--out", out_path, "Write the best configuration JSON here");
    search_cmd->add_option("--emit-trajectory", trajectory_path,
                           "Write iteration,potential CSV here");
    add_output_flag(search_cmd, search_fmt);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Emit a closed-form configuration");
    std::string which;
    catalog_cmd->add_option("entry", which, "onb or mub")->required();
    catalog_cmd->add_option("--field", field_name, "Field R, C or H")->required();
    catalog_cmd->add_option("--dim", dim, "Dimension d")->required();

    // hoggar
    auto* hoggar_cmd = app.add_subcommand("hoggar", "Regular-scheme design check");
    CommonOut hoggar_fmt;
    long long scheme_n = 0;
    std::string angles;
    std::string counts;
    hoggar_cmd->add_option("--n", scheme_n, "Number of points")->required();
    hoggar_cmd->add_option("--field", field_name, "Field R, C or H")->required();
    hoggar_cmd->add_option("--dim", dim, "Dimension d")->required();
    hoggar_cmd->add_option("--t", t, "Check orders r = 1..t")->required();
    hoggar_cmd->add_option("--angles", angles, "Comma-separated angles; g+ and g- accepted")
        ->required();
    hoggar_cmd->add_option("--counts", counts, "Comma-separated counts")->required();
    add_output_flag(hoggar_cmd, hoggar_fmt);

    // kernel-test
    auto* kernel_cmd = app.add_subcommand("kernel-test", "Reproducing-kernel self checks");
    CommonOut kernel_fmt;
    int kernel_samples = 20;
    std::uint64_t kernel_seed = 1;
    kernel_cmd->add_option("--field", field_name, "Field R, C or H")->required();
    kernel_cmd->add_option("--dim", dim, "Dimension d")->required();
    kernel_cmd->add_option("--t", t, "Design order t")->required();
    kernel_cmd->add_option("--samples", kernel_samples, "Random kernel pairs to test");
    kernel_cmd->add_option("--seed", kernel_seed, "Random seed");
    add_output_flag(kernel_cmd, kernel_fmt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (constants->parsed()) {
            return run_constants(field_option(field_name), dim, t, constants_n, constants_fmt);
        }
        if (dim_cmd->parsed()) {
            return run_dim(field_option(field_name), dim, t, rank_check, dim_samples, dim_seed,
                           dim_fmt);
        }
        if (verify_cmd->parsed()) {
            return run_verify(config_path, t, tol, expect_design, verify_fmt);
        }
        if (search_cmd->parsed()) {
            opts.field = field_option(field_name);
            opts.dim = dim;
            return run_search(opts, out_path, trajectory_path, search_fmt);
        }
        if (catalog_cmd->parsed()) {
            return run_catalog(which, field_option(field_name), dim);
        }
        if (hoggar_cmd->parsed()) {
            return run_hoggar(scheme_n, field_option(field_name), dim, t, angles, counts,
                              hoggar_fmt);
        }
        if (kernel_cmd->parsed()) {
            return run_kernel_test(field_option(field_name), dim, t, kernel_samples, kernel_seed,
                                   kernel_fmt);
        }
    } catch (const std::length_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
