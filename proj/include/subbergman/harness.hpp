#ifndef SUBBERGMAN_HARNESS_HPP
#define SUBBERGMAN_HARNESS_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "subbergman/config.hpp"
#include "subbergman/report.hpp"
#include "subbergman/symbols.hpp"

namespace subbergman {

inline constexpr std::array<std::string_view, 9> kCheckIds{
    "cnp_moebius_pass", "cnp_nonmoebius_fail", "berezin_identity",  "blaschke_decay",     "singular_noncompact",
    "rescaling_identity", "hardy_degenerate",  "lemma11_ratio",     "inclusion_asymptote",
};

/// A batch of checks over the cartesian product alphas x symbols.
///
/// Text form (one `key = value` per line, `#` comments):
///   name    = verify-all
///   alphas  = -1, -0.5, 0, 1
///   symbols = identity; mobius a=0.5; blaschke zeros=0.5,-0.5
///   checks  = berezin_identity, blaschke_decay
/// Symbols are separated by ';' because symbol texts contain commas.
struct Scenario {
    std::string name;
    std::vector<double> alphas;
    std::vector<std::string> symbols;
    std::vector<std::string> checks;
};

/// Throws std::invalid_argument for unknown check ids, alpha <= -2, or
/// symbol text that does not parse.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// The bundled scenario that exercises every check id at least once.
Scenario verify_all_scenario();
const std::string& verify_all_scenario_text();

/// (1 - |phi(z)|^2) / (1 - |z|^2), with phi evaluated in closed form.
double boundary_ratio(const SymbolSpec& symbol, DiskPoint z);

/// Extrema of boundary_ratio over the polar grid radii x `directions`
/// equally spaced angles, the first angle at 0. Radii must lie in (0, 1).
struct RatioExtrema {
    double sup = 0.0;
    double inf = 0.0;
};
RatioExtrema lemma11_ratio_check(const SymbolSpec& symbol, const std::vector<double>& radii, std::size_t directions);

/// Runs every (check, alpha, symbol) cell. Preconditions that fail mark the
/// cell skipped with a reason of the form "precondition:<what>"; numerical
/// errors inside a cell mark it failed with reason "error:<message>".
/// Symbol-independent checks run once per alpha with an empty symbol.
RunReport run_scenario(const Scenario& scenario, const Config& config);

}  // namespace subbergman

#endif
