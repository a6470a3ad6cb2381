#pragma once

#include <optional>
#include <vector>

#include "rootshift/poly.hpp"

namespace rootshift {

/// One distinct root value. For simple roots, `tail` holds a low-order
/// correction so that value + tail approximates the root to roughly twice
/// working precision; it is zero for clusters and user-supplied points.
struct RootEntry {
    Complex value;
    int multiplicity = 1;
    Complex tail{};
};

/// Distance between two root points, using the low-order tails.
double root_distance(const RootEntry& a, const RootEntry& b);

/// Multiset of complex roots stored as (value, multiplicity) entries.
struct RootMultiset {
    std::vector<RootEntry> entries;

    RootMultiset() = default;
    explicit RootMultiset(std::vector<RootEntry> e) : entries(std::move(e)) {}
    /// Each point becomes its own entry of multiplicity one.
    static RootMultiset from_points(const std::vector<Complex>& points);

    int total_multiplicity() const noexcept;
    std::size_t distinct_count() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
    bool all_simple() const noexcept;
    double max_modulus() const noexcept;
    /// Entries repeated according to multiplicity, each with multiplicity one.
    std::vector<RootEntry> expanded() const;
    /// Root values repeated according to multiplicity.
    std::vector<Complex> values() const;
};

/// {c} + A. The translation is carried out exactly into the tails.
RootMultiset translate(const RootMultiset& rs, Complex c);

struct RootCertificate {
    double max_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct RootFindOptions {
    double tol = 1e-12;
    int max_iterations = 200;
    /// Defaults to 1e-6 * (1 + max root modulus).
    std::optional<double> cluster_tol;
    int polish_steps = 3;
};

struct RootFindResult {
    RootMultiset roots;
    RootCertificate certificate;
};

/// Clustering threshold used when none is supplied.
double default_cluster_tol(double max_modulus);

/// All roots of p by Aberth-Ehrlich iteration, Newton polishing and
/// multiplicity clustering. Throws std::invalid_argument for deg p < 1 or tol <= 0.
/// Non-convergence is reported through the certificate, never thrown.
RootFindResult find_roots(const Poly& p, const RootFindOptions& options);
RootFindResult find_roots(const Poly& p, double tol = 1e-12);

/// Greedy single-linkage grouping at cluster_tol; centroid values.
RootMultiset cluster_roots(const std::vector<Complex>& raw, double cluster_tol);

/// max |p(value)| / (1 + max coefficient modulus).
double max_residual(const Poly& p, const RootMultiset& rs);

Poly from_roots(const RootMultiset& roots, Complex leading = 1.0);

}  // namespace rootshift
