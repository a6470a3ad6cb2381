#pragma once

// Distances between root multisets: minimum separation, the root/critical-point
// gap, the directed enclosure radius and the bottleneck (Frechet) distance.

#include <optional>
#include <utility>
#include <vector>

#include "rootshift/rootfind.hpp"

namespace rootshift {

/// A perfect matching between the expanded points of two multisets.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (index into A, index into B), expanded indexing
    double bottleneck = 0.0;
};

/// Minimum distance between distinct root values. Throws std::domain_error
/// when fewer than two distinct values are present.
double sep1(const RootMultiset& rs);

/// min |w - v| over w in Z(f), v in Z(f') with |v - w| > exclusion_tol.
/// The tolerance defaults to the root-clustering default over both sets.
/// Throws std::domain_error as sep1 does.
double tau(const RootMultiset& f_roots, const RootMultiset& fprime_roots,
           std::optional<double> exclusion_tol = std::nullopt);

/// max over v in moved of min over w in base of |v - w|.
/// With base = Z(f) and moved = Z(Tf) this is R_T(f). Throws on empty input.
double enclosure_radius(const RootMultiset& base, const RootMultiset& moved);

/// Bottleneck-optimal perfect matching. Throws std::invalid_argument when
/// total multiplicities differ or either side is empty.
Matching frechet_distance(const RootMultiset& A, const RootMultiset& B);

/// Exhaustive minimum over all permutations; m <= 8.
double brute_frechet(const RootMultiset& A, const RootMultiset& B);

}  // namespace rootshift
