#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seiffert/means.hpp"
#include "seiffert/oracle.hpp"
#include "seiffert/series.hpp"
#include "seiffert/sharp_constants.hpp"

namespace seiffert::cli {

namespace {

using nlohmann::json;

json number(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

std::string csv_field(double value) { return std::isfinite(value) ? format_double(value) : std::string(); }

sharp::VerifyOptions verify_options(const RunConfig& config) {
    sharp::VerifyOptions options;
    options.sampling.samples = config.samples;
    options.sampling.seed = config.seed;
    options.sampling.ratio_max = config.ratio_max;
    options.alpha_shift = config.alpha_shift;
    options.beta_shift = config.beta_shift;
    options.backend = config.serial ? sweep::Backend::serial : sweep::Backend::openmp;
    return options;
}

double witness_sort_key(const sharp::SuiteReport& r) {
    return r.witness ? r.witness->ratio : std::numeric_limits<double>::infinity();
}

void emit_suite_plain(const sharp::SuiteReport& r, std::ostream& out) {
    out << r.suite << ' ' << (r.pass ? "PASS" : "FAIL") << " n=" << r.n_samples;
    if (std::isfinite(r.lower_constant)) out << " lower=" << format_double(r.lower_constant);
    if (std::isfinite(r.upper_constant)) out << " upper=" << format_double(r.upper_constant);
    out << " min_slack_left=" << format_double(r.min_slack_left) << " @" << format_double(r.ratio_left)
        << " min_slack_right=" << format_double(r.min_slack_right) << " @" << format_double(r.ratio_right);
    if (std::isfinite(r.tight_inf))
        out << " tight=[" << format_double(r.tight_inf) << ", " << format_double(r.tight_sup) << ']';
    out << " ratio=[" << format_double(r.ratio_inf) << ", " << format_double(r.ratio_sup) << ']'
        << " consistency=" << format_double(r.max_consistency_error);
    if (r.witness)
        out << " witness=" << format_double(r.witness->ratio) << " side=" << r.witness->side
            << " slack=" << format_double(r.witness->slack);
    out << '\n';
}

json suite_json(const sharp::SuiteReport& r) {
    json j = {
        {"schema", kSchemaVersion},
        {"suite", r.suite},
        {"pass", r.pass},
        {"n_samples", r.n_samples},
        {"min_slack_left", number(r.min_slack_left)},
        {"min_slack_right", number(r.min_slack_right)},
        {"ratio_at_min_left", number(r.ratio_left)},
        {"ratio_at_min_right", number(r.ratio_right)},
        {"lower_constant", number(r.lower_constant)},
        {"upper_constant", number(r.upper_constant)},
        {"tight_inf", number(r.tight_inf)},
        {"tight_sup", number(r.tight_sup)},
        {"ratio_inf", number(r.ratio_inf)},
        {"ratio_sup", number(r.ratio_sup)},
        {"violations", r.violations},
        {"max_consistency_error", number(r.max_consistency_error)},
        {"witness", nullptr},
    };
    if (r.witness)
        j["witness"] = {{"ratio", r.witness->ratio}, {"side", r.witness->side}, {"slack", number(r.witness->slack)}};
    return j;
}

constexpr const char* kCsvHeader = "name,closed_form,discovered,gap,witness_ratio,slack\n";

void emit_suite_csv(const sharp::SuiteReport& r, std::ostream& out) {
    auto row = [&](const char* side, double constant, double discovered, double slack, double at_ratio) {
        double witness = at_ratio;
        if (r.witness && r.witness->side == side) witness = r.witness->ratio;
        const double gap = std::abs(constant - discovered);
        out << r.suite << '.' << side << ',' << csv_field(constant) << ',' << csv_field(discovered) << ','
            << csv_field(gap) << ',' << csv_field(witness) << ',' << csv_field(slack) << '\n';
    };
    row("left", r.lower_constant, r.tight_inf, r.min_slack_left, r.ratio_left);
    row("right", r.upper_constant, r.tight_sup, r.min_slack_right, r.ratio_right);
}

const std::map<std::string, MeanTag>& mean_tags() {
    static const std::map<std::string, MeanTag> tags = {
        {"seiffert", MeanTag::seiffert},          {"arithmetic", MeanTag::arithmetic},
        {"geometric", MeanTag::geometric},        {"rootsquare", MeanTag::root_square},
        {"contraharmonic", MeanTag::contra_harmonic}, {"centroidal", MeanTag::centroidal},
        {"power", MeanTag::power},
    };
    return tags;
}

void add_common_options(CLI::App& sub, RunConfig& config) {
    sub.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"plain", OutputFormat::plain}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}}));
    sub.add_option("--seed", config.seed, "Seed of the ratio sampler");
    sub.add_option("--samples", config.samples, "Number of log-uniform ratios")->check(CLI::PositiveNumber);
    sub.add_option("--ratio-max", config.ratio_max, "Largest sampled ratio a/b")
        ->check([](const std::string& s) {
            double v = 0.0;
            const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
            return res.ec == std::errc() && v > 1.0 && std::isfinite(v) ? std::string() : std::string("must be a finite value above 1");
        });
    sub.add_option("--order", config.series_order, "Series truncation order")->check(CLI::Range(1, series::kMaxOrder));
    sub.add_option("--precision", config.precision_digits, "Decimal digits of the oracle")->check(CLI::Range(10u, 10000u));
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

int cmd_eval(const EvalRequest& request, const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const PositivePair pair(request.a, request.b);
        double value = 0.0;
        std::optional<oracle::Real> reference;
        std::optional<oracle::ScopedDigits> digits;
        if (request.oracle) digits.emplace(config.precision_digits);

        if (request.kind == "blend") {
            if (!request.has_x) throw std::domain_error("eval blend requires --x");
            value = blend_mean_J(request.x, pair);
            if (request.oracle) reference = oracle::blend_mean_J(request.x, request.a, request.b);
        } else {
            const auto it = mean_tags().find(request.kind);
            if (it == mean_tags().end()) throw std::domain_error("unknown mean kind '" + request.kind + "'");
            MeanKind kind = MeanKind::of(it->second);
            if (it->second == MeanTag::power) {
                if (!request.has_p) throw std::domain_error("eval power requires --p");
                kind = MeanKind::power(request.p);
            }
            value = classical_mean(kind, pair);
            if (request.oracle) reference = oracle::classical_mean(kind, request.a, request.b);
        }
        out << format_double(value) << '\n';
        if (reference) out << "oracle: " << oracle::to_string(*reference, config.precision_digits) << '\n';
        return kExitOk;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const std::string& which, const RunConfig& config, std::ostream& out, std::ostream& err) {
    const sharp::VerifyOptions options = verify_options(config);
    std::vector<sharp::SuiteReport> reports;
    try {
        const bool all = which == "all";
        if (all || which == "thm1") reports.push_back(sharp::theorem_1_1_verify(options));
        if (all || which == "thm2") reports.push_back(sharp::theorem_1_2_verify(options));
        if (all || which == "priors") {
            for (auto& r : sharp::prior_bounds_regression(options)) reports.push_back(std::move(r));
        }
        if (all || which == "chain") reports.push_back(sharp::ordering_chain_verify(options));
        if (reports.empty()) throw std::domain_error("unknown suite '" + which + "'");
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::stable_sort(reports.begin(), reports.end(), [](const auto& l, const auto& r) {
        if (l.suite != r.suite) return l.suite < r.suite;
        return witness_sort_key(l) < witness_sort_key(r);
    });

    if (config.format == OutputFormat::csv) out << kCsvHeader;
    bool pass = true;
    for (const auto& r : reports) {
        switch (config.format) {
            case OutputFormat::plain: emit_suite_plain(r, out); break;
            case OutputFormat::json: out << suite_json(r).dump() << '\n'; break;
            case OutputFormat::csv: emit_suite_csv(r, out); break;
        }
        if (!r.pass) {
            pass = false;
            if (r.witness)
                err << "violation in " << r.suite << ": ratio=" << format_double(r.witness->ratio)
                    << " side=" << r.witness->side << " slack=" << format_double(r.witness->slack) << '\n';
            else
                err << "consistency failure in " << r.suite << ": " << format_double(r.max_consistency_error) << '\n';
        }
    }
    return pass ? kExitOk : kExitFailure;
}

int cmd_constants(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto reports = sharp::discover_constants();
    if (config.format == OutputFormat::csv) out << kCsvHeader;
    bool ok = true;
    for (const auto& r : reports) {
        const double witness = r.witness_ratio.value_or(std::nan(""));
        switch (config.format) {
            case OutputFormat::plain:
                out << r.name << " closed_form=" << format_double(r.closed_form) << " discovered="
                    << format_double(r.discovered) << " gap=" << format_double(r.abs_gap) << " witness_ratio="
                    << format_double(witness) << " margin=" << format_double(r.margin)
                    << " slack=" << format_double(r.witness_slack) << '\n';
                break;
            case OutputFormat::json:
                out << json{{"schema", kSchemaVersion},
                            {"name", r.name},
                            {"closed_form", number(r.closed_form)},
                            {"discovered", number(r.discovered)},
                            {"abs_gap", number(r.abs_gap)},
                            {"margin", number(r.margin)},
                            {"witness_ratio", number(witness)},
                            {"witness_slack", number(r.witness_slack)}}
                           .dump()
                    << '\n';
                break;
            case OutputFormat::csv:
                out << r.name << ',' << csv_field(r.closed_form) << ',' << csv_field(r.discovered) << ','
                    << csv_field(r.abs_gap) << ',' << csv_field(witness) << ',' << csv_field(r.witness_slack) << '\n';
                break;
        }
        if (!(r.abs_gap <= sharp::kConstantGapTolerance)) {
            ok = false;
            err << "gap for " << r.name << " exceeds " << format_double(sharp::kConstantGapTolerance) << '\n';
        }
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_series(const std::string& what, const RunConfig& config, std::ostream& out, std::ostream& err) {
    const int order = config.series_order;
    if (order < 1 || order > series::kMaxOrder) {
        err << "error: order must lie in [1, " << series::kMaxOrder << "], got " << order << '\n';
        return kExitUsage;
    }

    if (what == "bernoulli") {
        if (config.format == OutputFormat::csv) out << "series,n,index,value\n";
        json rows = json::array();
        for (int n = 1; n <= order; ++n) {
            const std::string value = series::to_string(series::bernoulli_even(n));
            switch (config.format) {
                case OutputFormat::plain: out << "n=" << n << ": " << value << '\n'; break;
                case OutputFormat::csv: out << "bernoulli," << n << ',' << 2 * n << ',' << value << '\n'; break;
                case OutputFormat::json: rows.push_back({{"n", n}, {"index", 2 * n}, {"value", value}}); break;
            }
        }
        if (config.format == OutputFormat::json)
            out << json{{"schema", kSchemaVersion}, {"series", "bernoulli"}, {"order", order}, {"coefficients", rows}}.dump()
                << '\n';
        return kExitOk;
    }

    series::SeriesKind kind;
    double radius;
    if (what == "cot") {
        kind = series::SeriesKind::cot;
        radius = std::numbers::pi / 2.0;
    } else if (what == "csc2") {
        kind = series::SeriesKind::csc2;
        radius = std::numbers::pi / 2.0;
    } else if (what == "ratio") {
        kind = series::SeriesKind::ratio;
        radius = std::numbers::pi / 4.0;
    } else {
        err << "error: unknown series '" << what << "'\n";
        return kExitUsage;
    }

    const series::TruncatedSeries s = series::expand(kind, order, radius);
    switch (config.format) {
        case OutputFormat::plain: {
            const char* lead = kind == series::SeriesKind::cot ? "1/x" : kind == series::SeriesKind::csc2 ? "1/x^2" : "1";
            out << "# " << what << ": " << lead << " plus term n times x^" << (kind == series::SeriesKind::cot ? "(2n-1)" : "(2n-2)")
                << '\n';
            for (int n = 1; n <= order; ++n)
                out << "n=" << n << ": " << series::to_string(s.exact[static_cast<std::size_t>(n - 1)]) << '\n';
            out << "tail_bound: " << format_double(s.tail_bound) << " for 0 < |x| <= " << format_double(radius) << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "series,n,power,coefficient,tail_bound\n";
            for (int n = 1; n <= order; ++n)
                out << what << ',' << n << ',' << s.power(n) << ','
                    << series::to_string(s.exact[static_cast<std::size_t>(n - 1)]) << ',' << format_double(s.tail_bound)
                    << '\n';
            break;
        case OutputFormat::json: {
            json rows = json::array();
            for (int n = 1; n <= order; ++n)
                rows.push_back({{"n", n}, {"power", s.power(n)}, {"value", series::to_string(s.exact[static_cast<std::size_t>(n - 1)])}});
            out << json{{"schema", kSchemaVersion}, {"series", what},         {"order", order},
                        {"radius", radius},         {"tail_bound", s.tail_bound}, {"coefficients", rows}}
                       .dump()
                << '\n';
            break;
        }
    }
    return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Seiffert mean bounds: evaluation, verification sweeps and sharp constants"};
    app.require_subcommand(1);
    RunConfig config;

    EvalRequest eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a mean at (a, b)");
    eval_cmd->add_option("kind", eval.kind, "seiffert|centroidal|blend|arithmetic|geometric|rootsquare|contraharmonic|power")
        ->required();
    eval_cmd->add_option("a", eval.a)->required();
    eval_cmd->add_option("b", eval.b)->required();
    auto* p_opt = eval_cmd->add_option("--p", eval.p, "Power-mean exponent");
    auto* x_opt = eval_cmd->add_option("--x", eval.x, "Blend weight in [1/2, 1]");
    eval_cmd->add_flag("--oracle", eval.oracle, "Also print a high-precision reference value");
    add_common_options(*eval_cmd, config);

    std::string which;
    auto* verify_cmd = app.add_subcommand("verify", "Run inequality sweeps");
    verify_cmd->add_option("which", which, "thm1|thm2|priors|chain|all")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "priors", "chain", "all"}));
    verify_cmd->add_option("--alpha-shift", config.alpha_shift, "Move the lower constant past its optimum by this amount");
    verify_cmd->add_option("--beta-shift", config.beta_shift, "Move the upper constant past its optimum by this amount");
    verify_cmd->add_flag("--serial", config.serial, "Use the serial reference kernels");
    add_common_options(*verify_cmd, config);

    auto* constants_cmd = app.add_subcommand("constants", "Re-derive the sharp constants");
    add_common_options(*constants_cmd, config);

    std::string what;
    auto* series_cmd = app.add_subcommand("series", "Dump exact series coefficients");
    series_cmd->add_option("what", what, "bernoulli|cot|csc2|ratio")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "cot", "csc2", "ratio"}));
    add_common_options(*series_cmd, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    if (*eval_cmd) {
        eval.has_p = p_opt->count() > 0;
        eval.has_x = x_opt->count() > 0;
        return cmd_eval(eval, config, out, err);
    }
    if (*verify_cmd) return cmd_verify(which, config, out, err);
    if (*constants_cmd) return cmd_constants(config, out, err);
    return cmd_series(what, config, out, err);
}

}  // namespace seiffert::cli
