#include "rootshift/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rootshift {

namespace {

// Kuhn's augmenting-path matching on the threshold graph. Returns match_of_b
// (index into A for each B point) or an empty vector when no perfect matching exists.
class ThresholdMatcher {
public:
    explicit ThresholdMatcher(const std::vector<std::vector<double>>& dist) : dist_(dist), m_(dist.size()) {}

    std::vector<int> perfect(double threshold) {
        threshold_ = threshold;
        match_of_b_.assign(m_, -1);
        for (std::size_t a = 0; a < m_; ++a) {
            visited_.assign(m_, 0);
            if (!augment(a)) return {};
        }
        return match_of_b_;
    }

private:
    bool augment(std::size_t a) {
        for (std::size_t b = 0; b < m_; ++b) {
            if (dist_[a][b] > threshold_ || visited_[b]) continue;
            visited_[b] = 1;
            if (match_of_b_[b] < 0 || augment(static_cast<std::size_t>(match_of_b_[b]))) {
                match_of_b_[b] = static_cast<int>(a);
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<double>>& dist_;
    std::size_t m_;
    double threshold_ = 0.0;
    std::vector<int> match_of_b_;
    std::vector<char> visited_;
};

void require_same_size(const RootMultiset& A, const RootMultiset& B, const char* who) {
    const int ma = A.total_multiplicity(), mb = B.total_multiplicity();
    if (ma == 0 || mb == 0) throw std::invalid_argument(std::string(who) + ": empty root multiset");
    if (ma != mb)
        throw std::invalid_argument(std::string(who) + ": multiset sizes differ (" + std::to_string(ma) + " vs " +
                                    std::to_string(mb) + ")");
}

}  // namespace

double sep1(const RootMultiset& rs) {
    if (rs.distinct_count() < 2) throw std::domain_error("sep1: need at least two distinct roots");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.entries.size(); ++i)
        for (std::size_t j = i + 1; j < rs.entries.size(); ++j)
            best = std::min(best, root_distance(rs.entries[i], rs.entries[j]));
    return best;
}

double tau(const RootMultiset& f_roots, const RootMultiset& fprime_roots, std::optional<double> exclusion_tol) {
    if (f_roots.distinct_count() < 2) throw std::domain_error("tau: need at least two distinct roots");
    const double tol =
        exclusion_tol.value_or(default_cluster_tol(std::max(f_roots.max_modulus(), fprime_roots.max_modulus())));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : f_roots.entries)
        for (const auto& v : fprime_roots.entries) {
            const double d = root_distance(w, v);
            if (d > tol) best = std::min(best, d);
        }
    return best;
}

double enclosure_radius(const RootMultiset& base, const RootMultiset& moved) {
    if (base.empty() || moved.empty()) throw std::invalid_argument("enclosure_radius: empty root multiset");
    double worst = 0.0;
    for (const auto& v : moved.entries) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& w : base.entries) nearest = std::min(nearest, root_distance(v, w));
        worst = std::max(worst, nearest);
    }
    return worst;
}

Matching frechet_distance(const RootMultiset& A, const RootMultiset& B) {
    require_same_size(A, B, "frechet_distance");
    const auto a = A.expanded();
    const auto b = B.expanded();
    const std::size_t m = a.size();

    std::vector<std::vector<double>> dist(m, std::vector<double>(m));
    std::vector<double> levels;
    levels.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            dist[i][j] = root_distance(a[i], b[j]);
            levels.push_back(dist[i][j]);
        }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    ThresholdMatcher matcher(dist);
    // Invariant: levels[hi] is feasible, levels[lo - 1] is not.
    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (!matcher.perfect(levels[mid]).empty())
            hi = mid;
        else
            lo = mid + 1;
    }
    const auto match_of_b = matcher.perfect(levels[hi]);

    Matching result;
    result.bottleneck = levels[hi];
    result.pairs.resize(m);
    for (std::size_t j = 0; j < m; ++j) result.pairs[static_cast<std::size_t>(match_of_b[j])] = {match_of_b[j], static_cast<int>(j)};
    return result;
}

double brute_frechet(const RootMultiset& A, const RootMultiset& B) {
    require_same_size(A, B, "brute_frechet");
    const auto a = A.expanded();
    const auto b = B.expanded();
    if (a.size() > 8) throw std::invalid_argument("brute_frechet: at most 8 points supported");
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, root_distance(a[k], b[perm[k]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace rootshift
