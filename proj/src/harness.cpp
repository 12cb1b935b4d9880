#include "subbergman/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "subbergman/cnp.hpp"
#include "subbergman/kernels.hpp"
#include "subbergman/operators.hpp"
#include "subbergman/sampling.hpp"
#include "subbergman/symbol_text.hpp"

namespace subbergman {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

bool known_check(const std::string& id) {
    return std::find(kCheckIds.begin(), kCheckIds.end(), id) != kCheckIds.end();
}

bool symbol_independent(const std::string& id) { return id == "inclusion_asymptote"; }

const std::string kVerifyAll = R"(# Exercises every check id at least once.
name    = verify-all
alphas  = -1.5, -1, -0.5, 0, 1
symbols = identity; mobius a=0.5; mobius a=0.3i; series 0,0,1; blaschke zeros=0.5,-0.5; blaschke zeros=0.3,-0.3i,0.2+0.2i; singular c=1; monomial n=2
checks  = cnp_moebius_pass, cnp_nonmoebius_fail, berezin_identity, blaschke_decay, singular_noncompact, rescaling_identity, hardy_degenerate, lemma11_ratio, inclusion_asymptote
)";

// Thrown by a check body when a precondition is violated.
struct Precondition {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Precondition{what};
}

struct Cell {
    std::string check;
    double alpha;
    std::string symbol_text;
    std::optional<SymbolSpec> symbol;
    const Config& config;
    std::map<std::string, double>& metrics;

    WeightParameter weight() const { return WeightParameter(alpha); }

    const SymbolSpec& spec() const { return *symbol; }

    PowerSeriesSymbol series() const {
        if (is_singular_inner(spec())) return to_series(spec(), config.count("singular_series_length"));
        return to_series(spec(), std::max(default_series_length(spec()), config.count("series_length")));
    }

    void require_alpha_in_cnp_range() const {
        require(alpha > -1.0 && alpha <= 0.0, "alpha_outside_(-1,0]");
    }
    void require_alpha_integrable() const { require(alpha > -1.0, "alpha_not_above_-1"); }
};

void record_cnp(Cell& cell, const PickReport& r) {
    cell.metrics["min_eigenvalue"] = r.min_eigenvalue;
    cell.metrics["trace"] = r.trace;
    cell.metrics["trials"] = static_cast<double>(r.trials);
    cell.metrics["failing_trials"] = static_cast<double>(r.failing_trials);
    cell.metrics["worst_trial"] = static_cast<double>(r.worst_trial);
    cell.metrics["hazards"] = static_cast<double>(r.hazards.size());
    if (r.witness) {
        cell.metrics["witness_size"] = static_cast<double>(r.witness->points.size());
        cell.metrics["witness_min_eigenvalue"] = r.witness->min_eigenvalue;
    }
}

PickReport scan(const Cell& cell) {
    return cnp_scan(cell.series(), cell.weight(), cell.config.count("cnp_points"), cell.config.count("cnp_trials"),
                    cell.config.seed("seed"), cell.config.real("cnp_tol"));
}

bool cnp_moebius_pass(Cell& cell) {
    cell.require_alpha_in_cnp_range();
    require(is_mobius(cell.spec()), "symbol_not_mobius");
    const auto r = scan(cell);
    record_cnp(cell, r);
    return r.failing_trials == 0;
}

bool cnp_nonmoebius_fail(Cell& cell) {
    cell.require_alpha_in_cnp_range();
    require(!is_mobius(cell.spec()), "symbol_is_mobius");
    const auto r = scan(cell);
    record_cnp(cell, r);
    return r.failing_trials > 0 && r.witness && r.witness->min_eigenvalue < -cell.config.real("cnp_fail_threshold");
}

std::vector<DiskPoint> boundary_circle(double radius, std::size_t directions) {
    std::vector<DiskPoint> pts;
    for (std::size_t k = 0; k < directions; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(directions);
        pts.emplace_back(std::polar(radius, t));
    }
    return pts;
}

double max_boundary_berezin(const Cell& cell) {
    const auto e = defect_matrix(cell.series(), cell.weight(), cell.config.count("boundary_size"), DefectSide::phi);
    double worst = 0.0;
    for (const auto& a :
         boundary_circle(cell.config.real("boundary_radius"), cell.config.count("boundary_directions"))) {
        worst = std::max(worst, berezin(e, a));
    }
    return worst;
}

bool berezin_identity(Cell& cell) {
    cell.require_alpha_integrable();
    const auto e = defect_matrix(cell.series(), cell.weight(), cell.config.count("matrix_size"), DefectSide::phi);
    DiskSampler sampler(cell.config.seed("seed"), 1000);
    const auto pts = sampler.uniform_disk(cell.config.count("berezin_points"), cell.config.real("berezin_radius"));
    double worst = 0.0;
    for (const auto& a : pts) {
        const double expected = 1.0 - std::norm(eval_closed_form(cell.spec(), a.value()));
        worst = std::max(worst, std::abs(berezin(e, a) - expected));
    }
    cell.metrics["max_residual"] = worst;
    cell.metrics["points"] = static_cast<double>(pts.size());
    return worst < cell.config.real("berezin_tol");
}

bool blaschke_decay(Cell& cell) {
    cell.require_alpha_integrable();
    require(is_finite_blaschke(cell.spec()), "symbol_not_finite_blaschke");
    const auto e = defect_matrix(cell.series(), cell.weight(), cell.config.count("matrix_size"), DefectSide::phi);
    const auto report = spectrum(e, parse_window(cell.config.raw("decay_window")));
    const double slope = report.decay_exponent;
    const double boundary = max_boundary_berezin(cell);
    cell.metrics["decay_exponent"] = slope;
    cell.metrics["max_boundary_berezin"] = boundary;
    for (const auto& s : report.schatten) {
        char name[32];
        std::snprintf(name, sizeof name, "schatten_p%g", s.p);
        cell.metrics[name] = s.value;
    }
    return slope >= cell.config.real("decay_min") && slope <= cell.config.real("decay_max") &&
           boundary < cell.config.real("boundary_blaschke_max");
}

bool singular_noncompact(Cell& cell) {
    cell.require_alpha_integrable();
    require(is_singular_inner(cell.spec()), "symbol_not_singular_inner");
    const double boundary = max_boundary_berezin(cell);
    cell.metrics["max_boundary_berezin"] = boundary;
    return boundary >= cell.config.real("boundary_singular_min");
}

bool rescaling_identity(Cell& cell) {
    const auto s = cell.series();
    require(!s.is_constant(kAlgebraicTol), "symbol_constant");
    DiskSampler sampler(cell.config.seed("seed"), 2000);
    const auto pts = sampler.uniform_disk(cell.config.count("rescaling_points"), cell.config.real("rescaling_radius"));
    const double residual = rescaling_check(s, cell.weight(), pts);
    cell.metrics["max_residual"] = residual;
    return residual < cell.config.real("rescaling_tol");
}

bool hardy_degenerate(Cell& cell) {
    require(cell.alpha == -1.0, "alpha_not_-1");
    const auto degree = blaschke_degree(cell.spec());
    require(degree.has_value(), "symbol_not_finite_blaschke");
    const std::size_t n = cell.config.count("hardy_size");
    const auto s = cell.series();
    const auto conj = defect_matrix(s, cell.weight(), n, DefectSide::conj);
    const double conj_max = conj.entries.cwiseAbs().maxCoeff();
    const auto eig = hermitian_eigenvalues(defect_matrix(s, cell.weight(), n, DefectSide::phi).entries);
    std::size_t rank = 0;
    double top_dev = 0.0;
    for (double v : eig) {
        if (v > kAlgebraicTol) {
            ++rank;
            top_dev = std::max(top_dev, std::abs(v - 1.0));
        }
    }
    const double tol = cell.config.real("hardy_tol");
    cell.metrics["conj_max_abs"] = conj_max;
    cell.metrics["phi_rank"] = static_cast<double>(rank);
    cell.metrics["phi_top_deviation"] = top_dev;
    cell.metrics["degree"] = static_cast<double>(*degree);
    return conj_max < tol && rank == *degree && top_dev < tol;
}

bool lemma11_ratio(Cell& cell) {
    const auto radii = cell.config.real_list("lemma11_radii");
    const auto ext = lemma11_ratio_check(cell.spec(), radii, cell.config.count("lemma11_directions"));
    cell.metrics["sup"] = ext.sup;
    cell.metrics["inf"] = ext.inf;
    if (const auto a = mobius_zero(cell.spec())) {
        const double r = std::abs(*a);
        const double hi = (1.0 + r) / (1.0 - r);
        const double tol = cell.config.real("lemma11_rel_tol");
        cell.metrics["expected_sup"] = hi;
        cell.metrics["expected_inf"] = 1.0 / hi;
        return std::abs(ext.sup - hi) <= tol * hi && std::abs(ext.inf - 1.0 / hi) <= tol / hi;
    }
    if (is_finite_blaschke(cell.spec())) return ext.inf > 0.0 && std::isfinite(ext.sup);
    require(is_singular_inner(cell.spec()), "symbol_not_inner");
    const double r = cell.config.real("lemma11_singular_radius");
    const double at = boundary_ratio(cell.spec(), DiskPoint(r, 0.0));
    cell.metrics["ratio_at_radius"] = at;
    return at > cell.config.real("lemma11_singular_min");
}

bool inclusion_asymptote(Cell& cell) {
    const double gap = cell.config.real("inclusion_gap");
    const double gamma = cell.alpha - gap;
    require(gap > 0.0 && gamma > -2.0, "gamma_not_above_-2");
    const std::size_t n = cell.config.count("inclusion_size");
    const std::size_t from = cell.config.count("inclusion_from");
    require(from <= n, "inclusion_from_beyond_size");
    const auto eig = inclusion_eigenvalues(cell.weight(), gamma, n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double oracle_dev = 0.0;
    for (std::size_t k = 0; k < eig.size(); ++k) {
        const double lg = std::lgamma(static_cast<double>(k) + 2.0 + gamma) - std::lgamma(2.0 + gamma) -
                          std::lgamma(static_cast<double>(k) + 2.0 + cell.alpha) + std::lgamma(2.0 + cell.alpha);
        oracle_dev = std::max(oracle_dev, std::abs(eig[k] - std::exp(lg)) / std::exp(lg));
        if (k < from) continue;
        const double scaled = eig[k] * std::pow(static_cast<double>(k) + 1.0, gap);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    cell.metrics["gamma"] = gamma;
    cell.metrics["min_scaled"] = lo;
    cell.metrics["max_scaled"] = hi;
    cell.metrics["lgamma_rel_deviation"] = oracle_dev;
    return lo >= cell.config.real("inclusion_lo") && hi <= cell.config.real("inclusion_hi");
}

using CheckFn = bool (*)(Cell&);

CheckFn routine(const std::string& id) {
    if (id == "cnp_moebius_pass") return cnp_moebius_pass;
    if (id == "cnp_nonmoebius_fail") return cnp_nonmoebius_fail;
    if (id == "berezin_identity") return berezin_identity;
    if (id == "blaschke_decay") return blaschke_decay;
    if (id == "singular_noncompact") return singular_noncompact;
    if (id == "rescaling_identity") return rescaling_identity;
    if (id == "hardy_degenerate") return hardy_degenerate;
    if (id == "lemma11_ratio") return lemma11_ratio;
    if (id == "inclusion_asymptote") return inclusion_asymptote;
    throw std::invalid_argument("unknown check id '" + id + "'");
}

CheckResult run_cell(const std::string& check, double alpha, const std::string& symbol_text, const Config& config) {
    CheckResult result;
    result.check = check;
    result.alpha = alpha;
    result.symbol = symbol_text;
    const auto start = std::chrono::steady_clock::now();
    std::optional<SymbolSpec> spec;
    try {
        if (!symbol_text.empty()) spec = parse_symbol(symbol_text, alpha);
    } catch (const std::exception& e) {
        result.status = CheckStatus::skipped;
        result.reason = std::string("precondition:symbol_undefined_at_alpha (") + e.what() + ")";
    }
    if (symbol_text.empty() || spec) {
        Cell cell{check, alpha, symbol_text, spec, config, result.metrics};
        try {
            result.status = routine(check)(cell) ? CheckStatus::pass : CheckStatus::fail;
            if (result.status == CheckStatus::fail) result.reason = "threshold";
        } catch (const Precondition& p) {
            result.status = CheckStatus::skipped;
            result.reason = "precondition:" + p.what;
            result.metrics.clear();
        } catch (const std::exception& e) {
            result.status = CheckStatus::fail;
            result.reason = std::string("error:") + e.what();
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    bool have_alphas = false;
    bool have_checks = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "name") {
            s.name = value;
        } else if (key == "alphas") {
            have_alphas = true;
            for (const auto& item : split(value, ',')) {
                std::size_t used = 0;
                double a = 0.0;
                try {
                    a = std::stod(item, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != item.size() || used == 0) throw std::invalid_argument("scenario: bad alpha '" + item + "'");
                (void)WeightParameter(a);
                s.alphas.push_back(a);
            }
        } else if (key == "symbols") {
            s.symbols = split(value, ';');
        } else if (key == "checks") {
            have_checks = true;
            for (const auto& id : split(value, ',')) {
                if (!known_check(id)) throw std::invalid_argument("scenario: unknown check id '" + id + "'");
                s.checks.push_back(id);
            }
        } else {
            throw std::invalid_argument("scenario line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (!have_alphas || s.alphas.empty()) throw std::invalid_argument("scenario: no alphas given");
    if (!have_checks || s.checks.empty()) throw std::invalid_argument("scenario: no checks given");
    for (const auto& sym : s.symbols) {
        std::string first_error;
        const bool parses_somewhere = std::any_of(s.alphas.begin(), s.alphas.end(), [&](double a) {
            try {
                parse_symbol(sym, a);
                return true;
            } catch (const std::exception& e) {
                if (first_error.empty()) first_error = e.what();
                return false;
            }
        });
        if (!parses_somewhere) throw std::invalid_argument("scenario: symbol '" + sym + "': " + first_error);
    }
    const bool needs_symbols =
        std::any_of(s.checks.begin(), s.checks.end(), [](const std::string& c) { return !symbol_independent(c); });
    if (needs_symbols && s.symbols.empty()) throw std::invalid_argument("scenario: checks need at least one symbol");
    if (s.name.empty()) s.name = "unnamed";
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

const std::string& verify_all_scenario_text() { return kVerifyAll; }

Scenario verify_all_scenario() { return parse_scenario(kVerifyAll); }

double boundary_ratio(const SymbolSpec& symbol, DiskPoint z) {
    return (1.0 - std::norm(eval_closed_form(symbol, z.value()))) / (1.0 - std::norm(z.value()));
}

RatioExtrema lemma11_ratio_check(const SymbolSpec& symbol, const std::vector<double>& radii, std::size_t directions) {
    if (radii.empty() || directions == 0) throw std::invalid_argument("ratio grid needs radii and directions");
    RatioExtrema ext{0.0, std::numeric_limits<double>::infinity()};
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0)) throw std::domain_error("ratio grid radii must lie in (0, 1)");
        for (const auto& z : boundary_circle(r, directions)) {
            const double v = boundary_ratio(symbol, z);
            ext.sup = std::max(ext.sup, v);
            ext.inf = std::min(ext.inf, v);
        }
    }
    return ext;
}

RunReport run_scenario(const Scenario& scenario, const Config& config) {
    config.validate();
    for (const auto& c : scenario.checks) routine(c);

    RunReport report;
    report.scenario = scenario.name;
    report.environment = config.values();
    report.started_at = utc_timestamp();
    for (const auto& check : scenario.checks) {
        for (double alpha : scenario.alphas) {
            if (symbol_independent(check)) {
                report.checks.push_back(run_cell(check, alpha, "", config));
                continue;
            }
            for (const auto& sym : scenario.symbols) report.checks.push_back(run_cell(check, alpha, sym, config));
        }
    }
    report.finished_at = utc_timestamp();
    report.canonicalize();
    return report;
}

}  // namespace subbergman
