#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace seiffert::cli {

enum class OutputFormat { plain, json, csv };

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // violated inequality or constant gap too large
    kExitUsage = 2,    // bad arguments or domain error
};

struct RunConfig {
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 1;
    double ratio_max = 1e8;
    int series_order = 40;
    unsigned precision_digits = 100;
    OutputFormat format = OutputFormat::plain;
    double alpha_shift = 0.0;
    double beta_shift = 0.0;
    bool serial = false;
};

/// JSON records carry "schema": kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

struct EvalRequest {
    std::string kind;
    double a = 0.0;
    double b = 0.0;
    double p = 0.0;
    bool has_p = false;
    double x = 0.0;
    bool has_x = false;
    bool oracle = false;
};

int cmd_eval(const EvalRequest& request, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& which, const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_constants(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_series(const std::string& what, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seiffert::cli
