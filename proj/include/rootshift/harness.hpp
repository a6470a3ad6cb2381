#pragma once

// Per-instance inequality checks and asymptotic trend records.

#include <string>
#include <vector>

#include "rootshift/bounds.hpp"
#include "rootshift/families.hpp"
#include "rootshift/poly.hpp"
#include "rootshift/rootfind.hpp"

namespace rootshift {

/// One inequality instance. A record with hypothesis_met && !holds is a violation.
struct CheckRecord {
    std::string name;
    bool hypothesis_met = false;
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Set when both sides are zero and the strict inequality is decided by slack.
    bool boundary = false;

    bool violation() const noexcept { return hypothesis_met && !holds; }
};

struct PerturbationReport {
    DiffOperator op = DiffOperator::identity(0);
    Poly poly;
    double kf = 0.0;
    RootMultiset roots;         // Z(f)
    RootMultiset critical;      // Z(f')
    RootMultiset moved;         // Z(Tf)
    double tau = 0.0;
    double sep1 = 0.0;
    double r_t = 0.0;           // R_T(f)
    double d_f = 0.0;           // d_F(Z(f), Z(Tf))
    double d_f_translated = 0.0;  // d_F(Z(S(alpha_1/alpha_0) f), Z(Tf))
    BoundSet bounds;
    std::vector<CheckRecord> checks;
    bool converged = true;      // every root computation certified

    bool has_violation() const;
    const CheckRecord* find_check(const std::string& name) const;
};

/// Slack used for the strict product bound when both sides vanish.
inline constexpr double kStrictSlack = 1e-12;
/// Additive slack for the disk inclusions.
inline constexpr double kInclusionSlack = 1e-9;
/// Additive slack for R_T(f) <= R_T(phi_n).
inline constexpr double kGlobalBoundSlack = 1e-8;
/// Relative slack for the tau/sep1 sandwich.
inline constexpr double kSandwichSlack = 1e-10;
/// Tolerance for d_F = R_T.
inline constexpr double kEqualityTol = 1e-9;

/// Computes every metric and evaluates each applicable check.
/// Requires alpha_0 != 0, 2 <= deg f <= T.n() and at least two distinct roots of f;
/// throws std::invalid_argument / std::domain_error otherwise.
PerturbationReport analyze(const DiffOperator& T, const Poly& f, double kf);

/// tau(f) R_T(f) < Gamma_T. hypothesis_met is false when alpha_1 != 0 or f has a repeated root.
CheckRecord check_lmt_product(const DiffOperator& T, const Poly& f);

struct TrendRecord {
    std::string name;
    std::vector<double> grid;
    std::vector<double> values;
    double epsilon = 0.0;
    bool tail_decreasing = false;  // non-increasing from index size/2 onward
    bool decreasing = false;       // non-increasing over the whole grid
    bool final_below_epsilon = false;
    bool converged = true;

    double final_value() const { return values.empty() ? 0.0 : values.back(); }
    bool holds() const noexcept { return tail_decreasing && final_below_epsilon; }
};

/// d_F trend over an increasing parameter grid:
///  - PsiFamily, QuarticFamily, RandomSimpleFamily (grid = dilation t):
///      d_F(Z(S(alpha_1/alpha_0) p), Z(T p))
///  - CoeffFamily:     d_F(Z(S(a_{n-1}/n) (z^n + a^n)), Z(f_a))   (T is not used)
///  - TruncatedFamily: d_F(Z(h_a), Z(f_a))                         (T is not used)
TrendRecord check_translation_convergence(const DiffOperator& T, const FamilySpec& family,
                                          const std::vector<double>& grid, double epsilon = 0.05);

}  // namespace rootshift
