#include "rootshift/sweep.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>

#include "rootshift/bounds.hpp"
#include "rootshift/families.hpp"
#include "rootshift/harness.hpp"
#include "rootshift/sampling.hpp"

namespace rootshift {

namespace {

constexpr std::array<Suite, 8> kAllSuites = {Suite::omegatau, Suite::tca, Suite::lmt, Suite::clmt,
                                             Suite::crs,      Suite::lfd, Suite::pub, Suite::convergence};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CheckRow row_from(std::string_view suite, const PerturbationReport& rep, const CheckRecord& c, std::uint64_t seed) {
    CheckRow r;
    r.suite = suite;
    r.check = c.name;
    r.seed = seed;
    r.degree = rep.poly.degree();
    r.tau = rep.tau;
    r.sep1 = rep.sep1;
    r.r_t = rep.r_t;
    r.d_f = rep.d_f;
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.hypothesis_met = c.hypothesis_met && rep.converged;
    r.holds = c.holds;
    if (!rep.converged) r.note = "uncertified roots";
    return r;
}

CheckRow failed_row(std::string_view suite, std::string_view check, std::uint64_t seed, const char* what) {
    CheckRow r;
    r.suite = suite;
    r.check = check;
    r.seed = seed;
    r.tau = r.sep1 = r.r_t = r.d_f = r.lhs = r.rhs = kNaN;
    r.note = what;
    return r;
}

// Pulls the named checks out of a full analysis.
std::vector<CheckRow> analysis_rows(std::string_view suite, std::initializer_list<const char*> names,
                                    const DiffOperator& T, const Poly& f, double kf, std::uint64_t seed) {
    const auto rep = analyze(T, f, kf);
    std::vector<CheckRow> rows;
    for (const char* name : names)
        if (const auto* c = rep.find_check(name)) rows.push_back(row_from(suite, rep, *c, seed));
    return rows;
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform_real(rng, std::log(lo), std::log(hi)));
}

Poly separated_poly(Rng& rng, int degree, double radius, double min_sep) {
    return from_roots(random_separated_points(rng, degree, radius, min_sep));
}

std::vector<CheckRow> omegatau_sample(std::uint64_t s) {
    Rng rng(s);
    const int degree = uniform_int(rng, 2, 8);
    const Poly f = separated_poly(rng, degree, 10.0, 0.05);
    return analysis_rows("omegatau", {"omegatau"}, DiffOperator::identity(degree), f, 0.0, s);
}

std::vector<CheckRow> tca_sample(std::uint64_t s) {
    Rng rng(s);
    const int n = uniform_int(rng, 2, 8);
    const DiffOperator T = random_admissible_operator(rng, n);
    const int degree = uniform_int(rng, 2, n);
    const Poly f = separated_poly(rng, degree, 10.0, 0.05);
    return analysis_rows("tca", {"tca"}, T, f, 0.0, s);
}

std::vector<CheckRow> no_first_order_sample(std::string_view suite, const char* check, std::uint64_t s) {
    Rng rng(s);
    const int n = uniform_int(rng, 2, 8);
    const DiffOperator T = random_no_first_order_operator(rng, n);
    const int degree = uniform_int(rng, 2, n);
    const double radius = log_uniform(rng, 1.0, 1000.0);
    const Poly f = separated_poly(rng, degree, radius, radius / (4.0 * degree));
    return analysis_rows(suite, {check}, T, f, 0.0, s);
}

std::vector<CheckRow> crs_sample(std::uint64_t s) {
    Rng rng(s);
    const int n = uniform_int(rng, 2, 8);
    const Complex alpha = uniform_in_disk(rng, 2.0);
    const DiffOperator T = DiffOperator::from_coefficients({1.0, alpha}, n);
    const double radius = log_uniform(rng, 1.0, 1000.0);
    const Poly f = separated_poly(rng, n, radius, radius / (2.0 * n));
    return analysis_rows("crs", {"crs", "takagi"}, T, f, 0.0, s);
}

std::vector<CheckRow> kf_sample(std::string_view suite, const char* check, std::uint64_t s) {
    Rng rng(s);
    const int n = uniform_int(rng, 2, 8);
    const DiffOperator T = random_no_first_order_operator(rng, n, 0.5);
    const double kf = estimate_kf(T, 32, s, Execution::serial);
    const int degree = uniform_int(rng, 2, n);
    const double radius = log_uniform(rng, 10.0, 1000.0);
    const Poly f = separated_poly(rng, degree, radius, radius / (2.0 * degree));
    return analysis_rows(suite, {check}, T, f, kf, s);
}

CheckRow trend_row(const TrendRecord& t, int degree, std::uint64_t s) {
    CheckRow r;
    r.suite = "convergence";
    r.check = t.name;
    r.seed = s;
    r.degree = degree;
    r.tau = r.sep1 = r.r_t = kNaN;
    r.d_f = t.final_value();
    r.lhs = t.final_value();
    r.rhs = t.epsilon;
    r.hypothesis_met = t.converged;
    r.holds = t.holds();
    if (!t.converged) r.note = "uncertified roots";
    return r;
}

std::vector<CheckRow> convergence_sample(std::uint64_t s) {
    Rng rng(s);
    const int n = uniform_int(rng, 3, 6);
    std::vector<Complex> lower(static_cast<std::size_t>(n) - 1);
    for (auto& c : lower) c = uniform_in_disk(rng, 2.0);
    const std::vector<double> a_grid{10.0, 30.0, 100.0, 300.0, 1000.0};

    std::vector<CheckRow> rows;
    rows.push_back(trend_row(check_translation_convergence(DiffOperator::identity(n), CoeffFamily{1.0, lower}, a_grid),
                             n, s));
    rows.push_back(trend_row(
        check_translation_convergence(DiffOperator::identity(n), TruncatedFamily{1.0, lower}, a_grid), n, s));

    std::vector<Complex> alphas(static_cast<std::size_t>(n) + 1);
    alphas[0] = 1.0;
    for (std::size_t k = 1; k < alphas.size(); ++k) alphas[k] = uniform_in_disk(rng, 1.0);
    const DiffOperator T(std::move(alphas), n);
    const RandomSimpleFamily fam{n, 10.0, 1.0, rng(), 1.0};
    rows.push_back(trend_row(check_translation_convergence(T, fam, {1.0, 10.0, 100.0, 1000.0, 10000.0}), n, s));
    return rows;
}

std::vector<CheckRow> quartic_counterexample_row() {
    const DiffOperator T = DiffOperator::from_coefficients({1.0, 0.0, 1.0}, 4);
    return analysis_rows("lmt", {"lmt"}, T, quartic_multi(1000.0), 0.0, 0);
}

std::vector<CheckRow> sample_rows(Suite suite, std::uint64_t s) {
    const auto name = suite_name(suite);
    try {
        switch (suite) {
            case Suite::omegatau: return omegatau_sample(s);
            case Suite::tca: return tca_sample(s);
            case Suite::lmt: return no_first_order_sample(name, "lmt", s);
            case Suite::clmt: return no_first_order_sample(name, "clmt", s);
            case Suite::crs: return crs_sample(s);
            case Suite::lfd: return kf_sample(name, "lfd", s);
            case Suite::pub: return kf_sample(name, "pub", s);
            case Suite::convergence: return convergence_sample(s);
            case Suite::all: break;
        }
    } catch (const std::exception& e) {
        return {failed_row(name, name, s, e.what())};
    }
    return {};
}

std::vector<CheckRow> run_single(Suite suite, std::uint64_t seed, int samples, Execution exec) {
    std::vector<std::vector<CheckRow>> per(static_cast<std::size_t>(std::max(samples, 0)));
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < samples; ++i)
            per[static_cast<std::size_t>(i)] = sample_rows(suite, seed + static_cast<std::uint64_t>(i));
    } else {
        for (int i = 0; i < samples; ++i)
            per[static_cast<std::size_t>(i)] = sample_rows(suite, seed + static_cast<std::uint64_t>(i));
    }
    std::vector<CheckRow> rows;
    for (auto& v : per)
        for (auto& r : v) rows.push_back(std::move(r));
    if (suite == Suite::lmt && samples > 0) {
        auto extra = quartic_counterexample_row();
        rows.insert(rows.end(), extra.begin(), extra.end());
    }
    return rows;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : kAllSuites)
        if (suite_name(s) == name) return s;
    if (name == "all") return Suite::all;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::omegatau: return "omegatau";
        case Suite::tca: return "tca";
        case Suite::lmt: return "lmt";
        case Suite::clmt: return "clmt";
        case Suite::crs: return "crs";
        case Suite::lfd: return "lfd";
        case Suite::pub: return "pub";
        case Suite::convergence: return "convergence";
        case Suite::all: return "all";
    }
    return "unknown";
}

std::vector<CheckRow> run_suite(Suite suite, std::uint64_t seed, int samples, Execution exec) {
    if (suite != Suite::all) return run_single(suite, seed, samples, exec);
    std::vector<CheckRow> rows;
    for (Suite s : kAllSuites) {
        auto part = run_single(s, seed, samples, exec);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

SweepSummary summarize(const std::vector<CheckRow>& rows) {
    SweepSummary s;
    s.rows = static_cast<int>(rows.size());
    for (const auto& r : rows) {
        if (!r.hypothesis_met)
            ++s.skipped;
        else if (r.holds)
            ++s.passed;
        else
            ++s.violations;
    }
    return s;
}

std::string rows_to_csv(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.suite << ',' << r.check << ',' << r.seed << ',' << r.degree << ',' << format_double(r.tau) << ','
            << format_double(r.sep1) << ',' << format_double(r.r_t) << ',' << format_double(r.d_f) << ','
            << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << (r.hypothesis_met ? "true" : "false")
            << ',' << (r.holds ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace rootshift
