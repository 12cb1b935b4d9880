// Command-line front end for the sub-Bergman toolkit.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "subbergman/cnp.hpp"
#include "subbergman/config.hpp"
#include "subbergman/harness.hpp"
#include "subbergman/io.hpp"
#include "subbergman/kernels.hpp"
#include "subbergman/operators.hpp"
#include "subbergman/report.hpp"
#include "subbergman/symbol_text.hpp"

namespace fs = std::filesystem;
using namespace subbergman;

namespace {

constexpr int kExitError = 2;

PowerSeriesSymbol load_series(const std::string& text, double alpha, std::size_t length) {
    const auto spec = parse_symbol(text, alpha);
    return length == 0 ? to_series(spec) : to_series(spec, length);
}

DefectSide parse_side(const std::string& s) {
    if (s == "phi") return DefectSide::phi;
    if (s == "conj") return DefectSide::conj;
    throw std::invalid_argument("side must be 'phi' or 'conj', got '" + s + "'");
}

void ensure_parent(const std::string& path) {
    const auto parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
}

void write_json(const nlohmann::json& j, const std::string& path) {
    ensure_parent(path);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string f;
    std::istringstream in(line);
    while (std::getline(in, f, ',')) out.push_back(f);
    return out;
}

// z_re,z_im,w_re,w_im per row; writes the same rows with k_re,k_im appended.
void kernel_batch(KernelEvaluator& eval, const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open '" + in_path + "' for reading");
    ensure_parent(out_path);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    std::string line;
    std::getline(in, line);
    out << "z_re,z_im,w_re,w_im,k_re,k_im\n";
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        const auto f = csv_fields(line);
        if (f.size() != 4) throw std::invalid_argument(in_path + ":" + std::to_string(row) + ": expected 4 fields");
        const DiskPoint z(std::stod(f[0]), std::stod(f[1]));
        const DiskPoint w(std::stod(f[2]), std::stod(f[3]));
        const cplx k = eval(z, w);
        char buf[64];
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g", k.real(), k.imag());
        out << line << buf << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sub-Bergman spaces: kernels, defect operators, CNP tests"};
    app.require_subcommand(1);

    // kernel eval
    auto* kernel = app.add_subcommand("kernel", "Reproducing kernels");
    kernel->require_subcommand(1);
    auto* kernel_eval = kernel->add_subcommand("eval", "Evaluate K(z, w)");
    std::string kind_text = "bergman", symbol_text, z_text, w_text, batch_in, batch_out;
    double alpha = 0.0;
    std::size_t series_length = 0;
    kernel_eval->add_option("--kind", kind_text, "bergman | sub | conj_sub")->capture_default_str();
    kernel_eval->add_option("--alpha", alpha, "Weight exponent, > -2")->required();
    kernel_eval->add_option("--symbol", symbol_text, "Symbol, e.g. \"mobius a=0.5\"");
    kernel_eval->add_option("--series-length", series_length, "Taylor truncation (0 = automatic)");
    kernel_eval->add_option("--z", z_text, "First point, e.g. 0.1+0.2i");
    kernel_eval->add_option("--w", w_text, "Second point");
    kernel_eval->add_option("--batch", batch_in, "CSV of z_re,z_im,w_re,w_im rows");
    kernel_eval->add_option("--out", batch_out, "Output CSV for --batch");

    // cnp test
    auto* cnp = app.add_subcommand("cnp", "Complete Nevanlinna-Pick property");
    cnp->require_subcommand(1);
    auto* cnp_test = cnp->add_subcommand("test", "Randomized Pick-matrix search for a non-CNP witness");
    std::size_t points = 30, trials = 20;
    std::uint64_t seed = 7;
    double tol = 1e-9;
    std::string out_path;
    cnp_test->add_option("--symbol", symbol_text)->required();
    cnp_test->add_option("--alpha", alpha)->required();
    cnp_test->add_option("--points", points)->capture_default_str();
    cnp_test->add_option("--trials", trials)->capture_default_str();
    cnp_test->add_option("--seed", seed)->capture_default_str();
    cnp_test->add_option("--tol", tol)->capture_default_str();
    cnp_test->add_option("--series-length", series_length);
    cnp_test->add_option("--out", out_path, "JSON report; a failing witness goes to witness.csv beside it");

    // toeplitz build
    auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz matrices");
    toeplitz->require_subcommand(1);
    auto* toeplitz_build = toeplitz->add_subcommand("build", "Finite section of T_phi as CSV");
    std::size_t size = 400;
    toeplitz_build->add_option("--symbol", symbol_text)->required();
    toeplitz_build->add_option("--alpha", alpha)->required();
    toeplitz_build->add_option("--size", size)->capture_default_str();
    toeplitz_build->add_option("--series-length", series_length);
    toeplitz_build->add_option("--out", out_path)->required();

    // defect spectrum
    auto* defect = app.add_subcommand("defect", "Defect operators");
    defect->require_subcommand(1);
    auto* defect_spectrum = defect->add_subcommand("spectrum", "Eigenvalues, decay fit and Schatten sums");
    std::string side_text = "phi", window_text = "20:200";
    defect_spectrum->add_option("--symbol", symbol_text)->required();
    defect_spectrum->add_option("--alpha", alpha)->required();
    defect_spectrum->add_option("--size", size)->capture_default_str();
    defect_spectrum->add_option("--side", side_text, "phi (I - TT*) or conj (I - T*T)")->capture_default_str();
    defect_spectrum->add_option("--window", window_text, "1-based rank range a:b")->capture_default_str();
    defect_spectrum->add_option("--series-length", series_length);
    defect_spectrum->add_option("--out", out_path, "JSON output (stdout if omitted)");

    // berezin
    auto* berezin_cmd = app.add_subcommand("berezin", "Berezin transform of a defect operator");
    std::vector<std::string> point_texts;
    berezin_cmd->add_option("--symbol", symbol_text)->required();
    berezin_cmd->add_option("--alpha", alpha)->required();
    berezin_cmd->add_option("--size", size)->capture_default_str();
    berezin_cmd->add_option("--side", side_text)->capture_default_str();
    berezin_cmd->add_option("--series-length", series_length);
    berezin_cmd->add_option("--point", point_texts, "Point a; repeatable")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a scenario and write report.json and report.csv");
    std::string scenario_arg, config_path, out_dir = ".";
    std::vector<std::string> overrides;
    verify->add_option("scenario", scenario_arg, "Scenario file, or 'all' for the bundled scenario")->required();
    verify->add_option("--config", config_path, "key = value file");
    verify->add_option("--set", overrides, "key=value override; wins over --config");
    verify->add_option("--out", out_dir)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*kernel_eval) {
            const KernelKind kind = parse_kernel_kind(kind_text);
            std::optional<PowerSeriesSymbol> symbol;
            if (!symbol_text.empty()) symbol = load_series(symbol_text, alpha, series_length);
            KernelEvaluator eval(KernelSpec(kind, WeightParameter(alpha), symbol));
            if (!batch_in.empty()) {
                if (batch_out.empty()) throw std::invalid_argument("--batch needs --out");
                kernel_batch(eval, batch_in, batch_out);
                return 0;
            }
            if (z_text.empty() || w_text.empty()) throw std::invalid_argument("give --z and --w, or --batch");
            const cplx k = eval(DiskPoint(parse_complex(z_text)), DiskPoint(parse_complex(w_text)));
            std::printf("%.15g %.15g\n", k.real(), k.imag());
            return 0;
        }
        if (*cnp_test) {
            const auto s = load_series(symbol_text, alpha, series_length);
            const auto report = cnp_scan(s, WeightParameter(alpha), points, trials, seed, tol);
            const auto j = pick_report_to_json(report, alpha, symbol_text, points);
            if (out_path.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                write_json(j, out_path);
                if (report.witness) {
                    write_witness_csv(*report.witness, (fs::path(out_path).parent_path() / "witness.csv").string());
                }
            }
            std::fprintf(stderr, "%s: lambda_min %.6g over %zu trials, %zu failing\n",
                         report.certificate() ? "fail" : "psd_pass", report.min_eigenvalue, report.trials,
                         report.failing_trials);
            return report.certificate() ? 1 : 0;
        }
        if (*toeplitz_build) {
            const auto s = load_series(symbol_text, alpha, series_length);
            ensure_parent(out_path);
            write_matrix_csv(toeplitz_matrix(s, WeightParameter(alpha), size).entries, out_path);
            return 0;
        }
        if (*defect_spectrum) {
            const auto s = load_series(symbol_text, alpha, series_length);
            const auto op = defect_matrix(s, WeightParameter(alpha), size, parse_side(side_text));
            const auto j = spectrum_to_json(spectrum(op, parse_window(window_text)), alpha, symbol_text, size);
            if (out_path.empty()) {
                std::cout << j.dump(2) << '\n';
            } else {
                write_json(j, out_path);
            }
            return 0;
        }
        if (*berezin_cmd) {
            const auto spec = parse_symbol(symbol_text, alpha);
            const auto s = series_length == 0 ? to_series(spec) : to_series(spec, series_length);
            const auto op = defect_matrix(s, WeightParameter(alpha), size, parse_side(side_text));
            for (const auto& t : point_texts) {
                const DiskPoint a(parse_complex(t));
                std::printf("%.15g %.15g %.15g\n", a.value().real(), a.value().imag(), berezin(op, a));
            }
            return 0;
        }
        if (*verify) {
            Config config = config_path.empty() ? Config() : Config::from_file(config_path);
            for (const auto& o : overrides) config.apply_override(o);
            config.validate();
            const Scenario scenario = scenario_arg == "all" ? verify_all_scenario() : load_scenario(scenario_arg);
            const RunReport report = run_scenario(scenario, config);
            fs::create_directories(out_dir);
            emit_report(report, (fs::path(out_dir) / "report.json").string(), ReportFormat::json);
            emit_report(report, (fs::path(out_dir) / "report.csv").string(), ReportFormat::csv);
            for (const auto& c : report.checks) {
                if (c.status == CheckStatus::skipped) continue;
                std::printf("%-7s %-20s alpha=%-5g %s%s%s\n", to_string(c.status).c_str(), c.check.c_str(), c.alpha,
                            c.symbol.c_str(), c.reason.empty() ? "" : "  ", c.reason.c_str());
            }
            std::printf("%zu pass, %zu fail, %zu skipped\n", report.count(CheckStatus::pass),
                        report.count(CheckStatus::fail), report.count(CheckStatus::skipped));
            return report.any_failed() ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return 0;
}
