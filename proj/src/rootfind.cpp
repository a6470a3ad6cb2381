#include "rootshift/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "double_double.hpp"

namespace rootshift {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kAngleOffset = 0.3791;
const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));

struct HornerValue {
    Complex value;
    Complex deriv;
    double abs_bound;  // sum |c_k| |z|^k
};

HornerValue horner_with_derivative(const std::vector<Complex>& c, Complex z) {
    Complex p{}, dp{};
    double bound = 0.0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
        bound = bound * az + std::abs(*it);
    }
    return {p, dp, bound};
}

// Unique positive root of x^m = sum_{k<m} |b_k| x^k for monic b (Cauchy's bound).
double cauchy_radius(const std::vector<Complex>& monic) {
    const std::size_t m = monic.size() - 1;
    std::vector<double> mag(m);
    for (std::size_t k = 0; k < m; ++k) mag[k] = std::abs(monic[k]);
    auto g = [&](double x) {
        // 1 - sum |b_k| x^(k-m), increasing in x
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += mag[k] * std::pow(x, static_cast<double>(k) - static_cast<double>(m));
        return 1.0 - s;
    };
    double hi = 1.0 + *std::max_element(mag.begin(), mag.end());
    double lo = hi;
    while (g(lo) > 0.0 && lo > std::numeric_limits<double>::min()) lo *= 0.5;
    for (int it = 0; it < 200 && hi - lo > kEps * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? hi : lo) = mid;
    }
    return hi;
}

// Aberth-Ehrlich on a polynomial with nonzero constant term and degree >= 2.
bool aberth(const std::vector<Complex>& coeffs, const RootFindOptions& opt, std::vector<Complex>& z,
            int& iterations) {
    const std::size_t m = coeffs.size() - 1;
    std::vector<Complex> monic(coeffs);
    const Complex lead = coeffs.back();
    for (auto& c : monic) c /= lead;

    const double radius = cauchy_radius(monic);
    z.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        z[k] = std::polar(radius, kAngleOffset + kGoldenAngle * static_cast<double>(k));

    std::vector<char> done(m, 0);
    iterations = 0;
    while (iterations < opt.max_iterations) {
        ++iterations;
        bool all_done = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (done[i]) continue;
            const auto h = horner_with_derivative(monic, z[i]);
            if (h.value == Complex{} || std::abs(h.value) <= 4.0 * kEps * h.abs_bound) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            Complex sum{};
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            Complex w;
            if (h.deriv == Complex{}) {
                w = -std::polar(kEps * (1.0 + std::abs(z[i])), kAngleOffset);
            } else {
                const Complex ratio = h.value / h.deriv;
                w = ratio / (1.0 - ratio * sum);
            }
            z[i] -= w;
            if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = 1;
        }
        if (all_done) return true;
    }
    return std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
}

void newton_polish(const std::vector<Complex>& coeffs, Complex& z, int steps) {
    auto h = horner_with_derivative(coeffs, z);
    for (int s = 0; s < steps; ++s) {
        if (h.deriv == Complex{} || h.value == Complex{}) return;
        const Complex candidate = z - h.value / h.deriv;
        const auto hc = horner_with_derivative(coeffs, candidate);
        if (!(std::abs(hc.value) < std::abs(h.value))) return;
        z = candidate;
        h = hc;
    }
}

// Newton steps with the residual evaluated in double-double; writes value + tail.
// Rejected if the root would move further than max_move.
void compensated_polish(const std::vector<Complex>& coeffs, RootEntry& e, double max_move) {
    using namespace detail;
    const Poly dp = derivative(Poly(coeffs), 1);
    CDD x = lift(e.value);
    for (int s = 0; s < 3; ++s) {
        const Complex d = evaluate(dp, hi(x));
        if (d == Complex{}) return;
        const Complex step = collapse(horner(coeffs, x)) / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return;
        x = x - lift(step);
    }
    if (!(std::abs(hi(x) - e.value) <= max_move)) return;
    e.value = hi(x);
    e.tail = lo(x);
}

}  // namespace

double root_distance(const RootEntry& a, const RootEntry& b) {
    return std::abs((a.value - b.value) + (a.tail - b.tail));
}

RootMultiset RootMultiset::from_points(const std::vector<Complex>& points) {
    RootMultiset rs;
    rs.entries.reserve(points.size());
    for (const auto& p : points) rs.entries.push_back({p, 1, {}});
    return rs;
}

int RootMultiset::total_multiplicity() const noexcept {
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

bool RootMultiset::all_simple() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const RootEntry& e) { return e.multiplicity == 1; });
}

double RootMultiset::max_modulus() const noexcept {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, std::abs(e.value));
    return m;
}

std::vector<RootEntry> RootMultiset::expanded() const {
    std::vector<RootEntry> out;
    for (const auto& e : entries)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back({e.value, 1, e.tail});
    return out;
}

std::vector<Complex> RootMultiset::values() const {
    std::vector<Complex> out;
    for (const auto& e : entries)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    return out;
}

RootMultiset translate(const RootMultiset& rs, Complex c) {
    RootMultiset out = rs;
    for (auto& e : out.entries) {
        const auto re = detail::two_sum(e.value.real(), c.real());
        const auto im = detail::two_sum(e.value.imag(), c.imag());
        e.value = {re.hi, im.hi};
        e.tail += Complex{re.lo, im.lo};
    }
    return out;
}

double default_cluster_tol(double max_modulus) { return 1e-6 * (1.0 + max_modulus); }

RootMultiset cluster_roots(const std::vector<Complex>& raw, double cluster_tol) {
    if (!(cluster_tol > 0.0)) throw std::invalid_argument("cluster_roots: cluster_tol must be positive");
    const std::size_t m = raw.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(raw[i] - raw[j]) <= cluster_tol) {
                const auto a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }

    RootMultiset rs;
    std::vector<std::size_t> slot(m, m);
    std::vector<Complex> sums;
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = find(i);
        if (slot[r] == m) {
            slot[r] = rs.entries.size();
            rs.entries.push_back({Complex{}, 0, {}});
            sums.emplace_back();
        }
        sums[slot[r]] += raw[i];
        ++rs.entries[slot[r]].multiplicity;
    }
    for (std::size_t k = 0; k < rs.entries.size(); ++k)
        rs.entries[k].value = rs.entries[k].multiplicity == 1
                                  ? sums[k]
                                  : sums[k] / static_cast<double>(rs.entries[k].multiplicity);
    return rs;
}

double max_residual(const Poly& p, const RootMultiset& rs) {
    const double scale = 1.0 + p.max_coeff_modulus();
    double worst = 0.0;
    for (const auto& e : rs.entries)
        worst = std::max(worst, std::abs(detail::collapse(detail::horner(p.coeffs(), detail::make(e.value, e.tail)))) / scale);
    return worst;
}

RootFindResult find_roots(const Poly& p, const RootFindOptions& opt) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: polynomial must have degree >= 1");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("find_roots: tol must be positive");

    const auto& c = p.coeffs();
    std::size_t zeros = 0;
    while (c[zeros] == Complex{}) ++zeros;
    const std::vector<Complex> reduced(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    const std::size_t m = reduced.size() - 1;

    std::vector<Complex> found;
    int iterations = 0;
    bool ok = true;
    if (m == 1) {
        found.push_back(-reduced[0] / reduced[1]);
    } else if (m >= 2) {
        ok = aberth(reduced, opt, found, iterations);
        for (auto& z : found) newton_polish(reduced, z, opt.polish_steps);
    }

    std::vector<Complex> raw(zeros, Complex{});
    raw.insert(raw.end(), found.begin(), found.end());
    double maxmod = 0.0;
    for (const auto& z : raw) maxmod = std::max(maxmod, std::abs(z));
    const double tol = opt.cluster_tol.value_or(default_cluster_tol(maxmod));

    RootFindResult result;
    result.roots = cluster_roots(raw, tol);
    for (auto& e : result.roots.entries) {
        if (e.value == Complex{}) continue;
        if (e.multiplicity == 1) {
            compensated_polish(reduced, e, 1e-8 * (1.0 + std::abs(e.value)));
        } else {
            // an m-fold root is a simple root of the (m-1)-th derivative
            const Poly q = derivative(p, e.multiplicity - 1);
            compensated_polish(q.coeffs(), e, tol);
        }
    }

    result.certificate.iterations = iterations;
    result.certificate.max_residual = max_residual(p, result.roots);
    result.certificate.converged = ok && result.certificate.max_residual <= opt.tol;
    return result;
}

RootFindResult find_roots(const Poly& p, double tol) {
    RootFindOptions opt;
    opt.tol = tol;
    return find_roots(p, opt);
}

Poly from_roots(const RootMultiset& roots, Complex leading) { return from_roots(roots.values(), leading); }

}  // namespace rootshift
