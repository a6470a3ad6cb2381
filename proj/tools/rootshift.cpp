// Command-line front end: analyze, verify, figure.
//
// Exit status: 0 clean, 1 a checked inequality failed, 2 bad usage or input.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootshift/bounds.hpp"
#include "rootshift/figure.hpp"
#include "rootshift/harness.hpp"
#include "rootshift/json_io.hpp"
#include "rootshift/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr int kDefaultKfSamples = 256;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ROOTSHIFT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("ROOTSHIFT_SEED is not an unsigned integer: ") + env);
        }
    }
    return 42;
}

// Accepts a path to a JSON file or the JSON text itself.
nlohmann::json load_json(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw rootshift::FormatError("cannot parse '" + arg + "' as JSON or read it as a file: " + e.what());
    }
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open " + path + " for writing");
    out << body;
}

int run_analyze(const std::string& poly_arg, const std::string& op_arg, std::optional<double> kf,
                std::optional<std::uint64_t> seed, const std::string& out_path) {
    using namespace rootshift;
    const Poly f = poly_from_json(load_json(poly_arg));
    const DiffOperator T = operator_from_json(load_json(op_arg));
    if (!T.admissible()) throw UsageError("operator is not admissible: alpha_0 must be nonzero");
    if (f.degree() < 2) throw UsageError("polynomial must have degree at least 2");
    if (f.degree() > T.n()) throw UsageError("polynomial degree exceeds operator n");
    const double k = kf ? *kf : estimate_kf(T, kDefaultKfSamples, seed.value_or(default_seed()));
    const PerturbationReport rep = analyze(T, f, k);
    write_output(out_path, to_json(rep).dump(2) + "\n");
    return rep.has_violation() ? kExitViolation : kExitOk;
}

int run_verify(const std::string& suite_arg, std::optional<std::uint64_t> seed, int samples,
               const std::string& out_path) {
    using namespace rootshift;
    const auto suite = parse_suite(suite_arg);
    if (!suite) throw UsageError("unknown suite '" + suite_arg + "'");
    if (samples < 0) throw UsageError("--samples must be non-negative");
    const std::uint64_t s = seed.value_or(default_seed());
    const auto rows = run_suite(*suite, s, samples);
    const std::string csv = rows_to_csv(rows);
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        write_output(out_path, csv);
    }
    const SweepSummary sum = summarize(rows);
    std::cerr << "suite=" << suite_arg << " seed=" << s << " rows=" << sum.rows << " passed=" << sum.passed
              << " skipped=" << sum.skipped << " violations=" << sum.violations << '\n';
    return sum.violations > 0 ? kExitViolation : kExitOk;
}

int run_figure(int which, double a, const std::string& out_path, const std::string& csv_path) {
    using namespace rootshift;
    FigureBuild fig;
    try {
        fig = make_figure(which, a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& w : fig.warnings) std::cerr << "warning: " << w << '\n';
    write_output(out_path, render_svg(fig.spec));
    if (!csv_path.empty()) write_output(csv_path, render_csv(fig.spec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root displacement under linear differential operators"};
    app.require_subcommand(1);

    std::string poly_arg, op_arg, out_path;
    std::optional<double> kf;
    std::optional<std::uint64_t> seed;
    auto* analyze = app.add_subcommand("analyze", "Perturbation report for one polynomial and operator");
    analyze->add_option("poly", poly_arg, "Polynomial JSON (file or inline)")->required();
    analyze->add_option("operator", op_arg, "Operator JSON (file or inline)")->required();
    analyze->add_option("--kf", kf, "Bottleneck constant; estimated when omitted");
    analyze->add_option("--seed", seed, "Seed for estimating --kf");
    analyze->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    std::string suite_arg = "all";
    int samples = 100;
    auto* verify = app.add_subcommand("verify", "Randomized sweep; CSV rows, summary on stderr");
    verify->add_option("--suite", suite_arg, "omegatau|tca|lmt|clmt|crs|lfd|pub|convergence|all");
    verify->add_option("--seed", seed, "Base seed (default ROOTSHIFT_SEED or 42)");
    verify->add_option("--samples", samples, "Samples per suite");
    verify->add_option("--out", out_path, "CSV destination (default stdout)");

    int which = 1;
    double a = 45.0;
    std::string csv_path;
    auto* figure = app.add_subcommand("figure", "Root scatter for z^5 - a^5 under I + D");
    figure->add_option("--which", which, "1..4")->required();
    figure->add_option("--a", a, "Radius parameter");
    figure->add_option("--out", out_path, "SVG destination (default stdout)");
    figure->add_option("--csv", csv_path, "Also write plotted coordinates as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(poly_arg, op_arg, kf, seed, out_path);
        if (*verify) return run_verify(suite_arg, seed, samples, out_path);
        if (*figure) return run_figure(which, a, out_path, csv_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rootshift::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
