#pragma once

// Seeded randomized sweeps producing one flat row per check instance.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootshift/execution.hpp"

namespace rootshift {

enum class Suite { omegatau, tca, lmt, clmt, crs, lfd, pub, convergence, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct CheckRow {
    std::string suite;
    std::string check;
    std::uint64_t seed = 0;
    int degree = 0;
    double tau = 0.0;
    double sep1 = 0.0;
    double r_t = 0.0;
    double d_f = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool hypothesis_met = false;
    bool holds = false;
    /// Root finder certificate failed or the sample could not be generated.
    std::string note;

    bool violation() const noexcept { return hypothesis_met && !holds; }
    friend bool operator==(const CheckRow&, const CheckRow&) = default;
};

/// Rows for one suite (or every suite for Suite::all, in declaration order).
/// Sample i uses seed + i. Both execution policies return identical rows.
std::vector<CheckRow> run_suite(Suite suite, std::uint64_t seed, int samples,
                                Execution exec = Execution::parallel);

struct SweepSummary {
    int rows = 0;
    int passed = 0;
    int skipped = 0;  // hypothesis not met
    int violations = 0;
};

SweepSummary summarize(const std::vector<CheckRow>& rows);

inline constexpr std::string_view kCsvHeader =
    "suite,check,seed,degree,tau,sep1,r_t,d_f,lhs,rhs,hypothesis_met,holds";

/// Header plus one line per row; numbers printed with 17 significant digits.
std::string rows_to_csv(const std::vector<CheckRow>& rows);

}  // namespace rootshift
