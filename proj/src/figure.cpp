#include "rootshift/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rootshift/bounds.hpp"
#include "rootshift/families.hpp"
#include "rootshift/metrics.hpp"
#include "rootshift/rootfind.hpp"

namespace rootshift {

namespace {

constexpr int kDegree = 5;
constexpr double kCanvas = 600.0;
constexpr double kMargin = 20.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string px(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::vector<Complex> collapse(const RootMultiset& rs) {
    std::vector<Complex> out;
    for (const auto& e : rs.entries)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value + e.tail);
    return out;
}

std::size_t nearest_index(const std::vector<Complex>& pts, Complex target) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (std::abs(pts[i] - target) < std::abs(pts[best] - target)) best = i;
    return best;
}

}  // namespace

std::string role_name(PointRole role) {
    switch (role) {
        case PointRole::base_root: return "base-root";
        case PointRole::translated_root: return "translated-root";
        case PointRole::perturbed_root: return "perturbed-root";
    }
    return "unknown";
}

std::string style_name(DiskStyle style) {
    switch (style) {
        case DiskStyle::sharp_bound: return "paper-bound";
        case DiskStyle::takagi_bound: return "takagi-bound";
    }
    return "unknown";
}

FigureBuild make_figure(int which, double a) {
    if (which < 1 || which > 4) throw std::invalid_argument("figure: --which must be 1, 2, 3 or 4");
    if (!(a > 0.0)) throw std::invalid_argument("figure: a must be positive");

    const Complex alpha = 1.0;
    const DiffOperator T = DiffOperator::from_coefficients({1.0, alpha}, kDegree);
    const Poly f = psi(a, kDegree);
    const RootMultiset base = find_roots(f).roots;
    const RootMultiset moved = find_roots(apply_operator(T, f)).roots;
    const RootMultiset shifted = translate(base, -alpha);

    FigureBuild out;
    FigureSpec& spec = out.spec;
    spec.points.push_back({"roots of z^5 - a^5", PointRole::base_root, collapse(base)});
    spec.points.push_back({"{-1} + roots", PointRole::translated_root, collapse(shifted)});
    spec.points.push_back({"roots of (I + D)(z^5 - a^5)", PointRole::perturbed_root, collapse(moved)});

    if (which >= 3) {
        const double threshold = 2.0 * std::abs(alpha) * (kDegree - 1) + 1.0;
        if (a > threshold) {
            const TakagiRegion region = takagi_region(alpha, kDegree);
            DiskLayer takagi{"classical inclusion", DiskStyle::takagi_bound, {}, region.radius};
            for (const auto& z : spec.points[0].points) takagi.centers.push_back(z + region.shift);
            DiskLayer sharp{"gamma_alpha / tau inclusion", DiskStyle::sharp_bound, spec.points[1].points,
                            gamma_alpha(alpha, kDegree) / a};
            spec.disks.push_back(std::move(takagi));
            spec.disks.push_back(std::move(sharp));
        } else {
            out.warnings.push_back("a = " + num(a) + " does not exceed " + num(threshold) +
                                   "; inclusion disks omitted");
        }
    }

    if (which == 2 || which == 4) {
        const double angle = which == 2 ? 0.0 : 6.0 * std::numbers::pi / 5.0;
        const auto& crosses = spec.points[1].points;
        const std::size_t target = nearest_index(spec.points[0].points, std::polar(a, angle));
        const Matching m = frechet_distance(shifted, moved);
        // shifted and base share entry order, so expanded index == entry index for simple roots
        const auto paired = static_cast<std::size_t>(m.pairs[target].second);
        const Complex center = spec.points[2].points[paired];
        const double local = std::abs(center - crosses[target]);
        const double half = std::max(2.0 * local, 1e-9);
        spec.zoom_center = center;
        spec.viewport = Viewport{center.real() - half, center.real() + half, center.imag() - half, center.imag() + half};
    }
    return out;
}

Viewport resolve_viewport(const FigureSpec& spec) {
    if (spec.viewport) return *spec.viewport;
    constexpr double inf = std::numeric_limits<double>::infinity();
    Viewport v{inf, -inf, inf, -inf};
    auto include = [&](Complex z, double r) {
        v.x_min = std::min(v.x_min, z.real() - r);
        v.x_max = std::max(v.x_max, z.real() + r);
        v.y_min = std::min(v.y_min, z.imag() - r);
        v.y_max = std::max(v.y_max, z.imag() + r);
    };
    for (const auto& layer : spec.points)
        for (const auto& z : layer.points) include(z, 0.0);
    for (const auto& layer : spec.disks)
        for (const auto& z : layer.centers) include(z, layer.radius);
    if (v.x_min > v.x_max) return {-1.0, 1.0, -1.0, 1.0};
    const double pad = std::max(0.05 * std::max(v.x_max - v.x_min, v.y_max - v.y_min), 1e-9);
    return {v.x_min - pad, v.x_max + pad, v.y_min - pad, v.y_max + pad};
}

std::string render_svg(const FigureSpec& spec) {
    const Viewport v = resolve_viewport(spec);
    const double w = v.x_max - v.x_min;
    const double h = v.y_max - v.y_min;
    const double scale = (kCanvas - 2.0 * kMargin) / std::max(w, h);
    const double width = w * scale + 2.0 * kMargin;
    const double height = h * scale + 2.0 * kMargin;
    auto sx = [&](Complex z) { return kMargin + (z.real() - v.x_min) * scale; };
    auto sy = [&](Complex z) { return kMargin + (v.y_max - z.imag()) * scale; };
    auto data = [](const std::string& layer, Complex z) {
        return " data-layer=\"" + layer + "\" data-re=\"" + num(z.real()) + "\" data-im=\"" + num(z.imag()) + "\"";
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\"" << px(height)
        << "\" viewBox=\"0 0 " << px(width) << ' ' << px(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& layer : spec.disks) {
        const char* stroke = layer.style == DiskStyle::takagi_bound ? "#999999" : "#000000";
        for (const auto& c : layer.centers)
            out << "  <circle class=\"" << style_name(layer.style) << "\" cx=\"" << px(sx(c)) << "\" cy=\""
                << px(sy(c)) << "\" r=\"" << px(layer.radius * scale) << "\" fill=\"none\" stroke=\"" << stroke
                << "\" stroke-width=\"1\"" << data(layer.label, c) << " data-r=\"" << num(layer.radius) << "\"/>\n";
    }
    for (const auto& layer : spec.points) {
        for (const auto& z : layer.points) {
            const double x = sx(z), y = sy(z);
            switch (layer.role) {
                case PointRole::base_root:
                    out << "  <circle class=\"base-root\" cx=\"" << px(x) << "\" cy=\"" << px(y)
                        << "\" r=\"4\" fill=\"#b3b3b3\"" << data(layer.label, z) << "/>\n";
                    break;
                case PointRole::perturbed_root:
                    out << "  <circle class=\"perturbed-root\" cx=\"" << px(x) << "\" cy=\"" << px(y)
                        << "\" r=\"3\" fill=\"#000000\"" << data(layer.label, z) << "/>\n";
                    break;
                case PointRole::translated_root:
                    out << "  <path class=\"translated-root\" d=\"M " << px(x - 4) << ' ' << px(y - 4) << " L "
                        << px(x + 4) << ' ' << px(y + 4) << " M " << px(x - 4) << ' ' << px(y + 4) << " L "
                        << px(x + 4) << ' ' << px(y - 4) << "\" stroke=\"#000000\" stroke-width=\"1.2\""
                        << data(layer.label, z) << "/>\n";
                    break;
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_csv(const FigureSpec& spec) {
    std::ostringstream out;
    out << "layer,role,kind,re,im,radius\n";
    for (const auto& layer : spec.points)
        for (const auto& z : layer.points)
            out << '"' << layer.label << "\"," << role_name(layer.role) << ",point," << num(z.real()) << ','
                << num(z.imag()) << ",0\n";
    for (const auto& layer : spec.disks)
        for (const auto& c : layer.centers)
            out << '"' << layer.label << "\"," << style_name(layer.style) << ",disk," << num(c.real()) << ','
                << num(c.imag()) << ',' << num(layer.radius) << '\n';
    return out.str();
}

}  // namespace rootshift
