#include "rootshift/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rootshift/metrics.hpp"

namespace rootshift {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

CheckRecord make_check(std::string name, bool hypothesis, bool holds, double lhs, double rhs) {
    CheckRecord c;
    c.name = std::move(name);
    c.hypothesis_met = hypothesis;
    c.holds = holds;
    c.lhs = lhs;
    c.rhs = rhs;
    return c;
}

bool non_increasing(const std::vector<double>& v, std::size_t from) {
    for (std::size_t i = from + 1; i < v.size(); ++i)
        if (v[i] > v[i - 1] + 1e-12) return false;
    return true;
}

}  // namespace

bool PerturbationReport::has_violation() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.violation(); });
}

const CheckRecord* PerturbationReport::find_check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

PerturbationReport analyze(const DiffOperator& T, const Poly& f, double kf) {
    if (!T.admissible()) throw std::invalid_argument("analyze: operator is not admissible (alpha_0 = 0)");
    if (f.degree() < 2) throw std::invalid_argument("analyze: polynomial must have degree >= 2");
    if (f.degree() > T.n())
        throw std::invalid_argument("analyze: polynomial degree exceeds the operator's degree cap");

    const DiffOperator N = normalize_operator(T);
    const int n = N.n();
    const int d = f.degree();

    PerturbationReport rep;
    rep.op = T;
    rep.poly = f;
    rep.kf = kf;

    const auto zf = find_roots(f);
    const auto zc = find_roots(derivative(f, 1));
    const auto zt = find_roots(apply_operator(N, f));
    rep.roots = zf.roots;
    rep.critical = zc.roots;
    rep.moved = zt.roots;
    rep.converged = zf.certificate.converged && zc.certificate.converged && zt.certificate.converged;
    if (rep.roots.distinct_count() < 2) throw std::domain_error("analyze: polynomial needs two distinct roots");

    rep.tau = tau(rep.roots, rep.critical);
    rep.sep1 = sep1(rep.roots);
    rep.r_t = enclosure_radius(rep.roots, rep.moved);
    rep.d_f = frechet_distance(rep.roots, rep.moved).bottleneck;
    rep.d_f_translated = frechet_distance(translate(rep.roots, -N[1]), rep.moved).bottleneck;
    rep.bounds = compute_bounds(N, kf);

    const bool simple = rep.roots.all_simple();
    const bool no_first = n >= 2 && first_order_vanishes(N);
    const bool first_form = n >= 2 && is_first_order_form(N);
    const double sin_n = n >= 2 ? std::sin(std::numbers::pi / n) : 0.0;
    const double tau_v = rep.tau;
    const double r_t = rep.r_t;
    const BoundSet& b = rep.bounds;

    {
        const double lower = rep.sep1 / d;
        const double upper = rep.sep1 / (2.0 * std::sin(std::numbers::pi / d));
        const double slack = kSandwichSlack * std::max(1.0, upper);
        rep.checks.push_back(
            make_check("omegatau", true, lower <= tau_v + slack && tau_v <= upper + slack, tau_v, upper));
    }

    rep.checks.push_back(make_check("tca", true, r_t <= b.r_phi + kGlobalBoundSlack, r_t, b.r_phi));

    {
        const double lhs = tau_v * r_t;
        const double rhs = no_first ? b.gamma : 0.0;
        auto c = make_check("lmt", no_first && simple, lhs < rhs + kStrictSlack, lhs, rhs);
        c.boundary = lhs == 0.0 && rhs == 0.0;
        rep.checks.push_back(c);
    }

    {
        const double rhs = no_first ? b.gamma_prime / tau_v : 0.0;
        const bool hyp = no_first && simple && tau_v > 2.0 * b.r_phi + 1.0;
        rep.checks.push_back(make_check("clmt", hyp, r_t <= rhs + kInclusionSlack, r_t, rhs));
    }

    if (first_form) {
        const Complex alpha = N[1];
        const double lhs = enclosure_radius(translate(rep.roots, -alpha), rep.moved);
        const double rhs = b.gamma_alpha.value_or(0.0) / tau_v;
        const bool hyp = simple && tau_v > 2.0 * std::abs(alpha) * (n - 1) + 1.0;
        rep.checks.push_back(make_check("crs", hyp, lhs <= rhs + kInclusionSlack, lhs, rhs));

        const TakagiRegion region = takagi_region(alpha, n);
        const double tl = enclosure_radius(translate(rep.roots, region.shift), rep.moved);
        rep.checks.push_back(make_check("takagi", d == n, tl <= region.radius + kInclusionSlack, tl, region.radius));
    }

    if (n >= 2) {
        const bool hyp = simple && r_t < 1.0 && tau_v > (1.0 + kf) / sin_n && rep.d_f <= kf;
        rep.checks.push_back(make_check("lfd", hyp, std::abs(rep.d_f - r_t) <= kEqualityTol,
                                        std::abs(rep.d_f - r_t), kEqualityTol));
    }

    if (no_first) {
        const double lhs = tau_v * rep.d_f;
        const double rhs = std::max({b.gamma, kf * b.gamma, kf * (1.0 + kf) / sin_n});
        const bool hyp = simple && rep.d_f <= kf;
        rep.checks.push_back(
            make_check("pub", hyp, lhs <= rhs + kStrictSlack * std::max(1.0, rhs), lhs, rhs));
    }

    return rep;
}

CheckRecord check_lmt_product(const DiffOperator& T, const Poly& f) {
    const auto rep = analyze(T, f, 0.0);
    return *rep.find_check("lmt");
}

TrendRecord check_translation_convergence(const DiffOperator& T, const FamilySpec& family,
                                          const std::vector<double>& grid, double epsilon) {
    validate(family);
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("check_translation_convergence: grid must be increasing");

    TrendRecord rec;
    rec.grid = grid;
    rec.epsilon = epsilon;
    rec.name = std::visit(overloaded{
                              [](const PsiFamily&) { return std::string("psi_translation"); },
                              [](const QuarticFamily&) { return std::string("quartic_translation"); },
                              [](const CoeffFamily&) { return std::string("frstcor"); },
                              [](const TruncatedFamily&) { return std::string("scndcor"); },
                              [](const RandomSimpleFamily&) { return std::string("dilation"); },
                          },
                          family);

    for (const double g : grid) {
        const FamilySpec member = with_parameter(family, g);
        RootFindResult A, B;
        Complex shift{};
        if (const auto* cf = std::get_if<CoeffFamily>(&member)) {
            const int n = cf->n();
            A = find_roots(plus_power(cf->a, n));
            B = find_roots(coeff_family_poly(cf->a, cf->lower));
            shift = -cf->lower.back() / static_cast<double>(n);
        } else if (const auto* tf = std::get_if<TruncatedFamily>(&member)) {
            A = find_roots(truncated_family_poly(tf->a, tf->lower));
            B = find_roots(coeff_family_poly(tf->a, tf->lower));
        } else {
            if (!T.admissible())
                throw std::invalid_argument("check_translation_convergence: operator is not admissible");
            const DiffOperator N = normalize_operator(T);
            const Poly p = build(member);
            A = find_roots(p);
            B = find_roots(apply_operator(N, p));
            shift = -N[1];
        }
        rec.converged = rec.converged && A.certificate.converged && B.certificate.converged;
        rec.values.push_back(frechet_distance(translate(A.roots, shift), B.roots).bottleneck);
    }

    rec.decreasing = non_increasing(rec.values, 0);
    rec.tail_decreasing = non_increasing(rec.values, rec.values.size() / 2);
    rec.final_below_epsilon = !rec.values.empty() && rec.values.back() < epsilon;
    return rec;
}

}  // namespace rootshift
