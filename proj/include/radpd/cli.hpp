#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace radpd::cli {

enum class Command { eval, spectral, op, pd_check, theorem_sweep, figure1, bounds };

enum class Format { csv, json };

enum class GridScale { linear, geometric };

/// Parsed command line. List-valued fields hold one entry except for theorem-sweep
/// (and bounds, for nu).
struct RunConfig {
    Command command = Command::eval;
    std::string family;
    std::vector<double> nu, delta, lambda, kappa, mu, eps;
    std::optional<double> beta1, beta2;
    double beta = 1.0;
    std::vector<std::string> dim;  ///< integers or "inf"
    std::optional<double> grid_min, grid_max;
    std::optional<int> grid_n;
    std::optional<GridScale> grid_scale;
    std::uint64_t seed = 42;
    int gram_n = 200;
    int k_max = 8;
    std::string method = "all";  ///< pd-check: spectral, gram, cm, or all
    int lemma = 0;               ///< bounds: 1, 2, or 0 for both
    std::string out;             ///< empty writes to stdout
    std::optional<Format> format;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitIncoherent = 3;

/// Runs a parsed configuration. Errors are reported on err and mapped to exit codes.
int run(const RunConfig& config, std::ostream& err);

/// Parses argv and runs. Usage errors return kExitValidation.
int main_entry(int argc, char** argv);

}  // namespace radpd::cli
