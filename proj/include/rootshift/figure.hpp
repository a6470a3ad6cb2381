#pragma once

// Layered scatter figures of root sets, written as SVG and as CSV.

#include <optional>
#include <string>
#include <vector>

#include "rootshift/poly.hpp"

namespace rootshift {

enum class PointRole { base_root, translated_root, perturbed_root };
enum class DiskStyle { sharp_bound, takagi_bound };

struct PointLayer {
    std::string label;
    PointRole role;
    std::vector<Complex> points;
};

/// Closed disks of a common radius around several centers.
struct DiskLayer {
    std::string label;
    DiskStyle style;
    std::vector<Complex> centers;
    double radius = 0.0;
};

struct Viewport {
    double x_min, x_max, y_min, y_max;
};

struct FigureSpec {
    std::vector<PointLayer> points;
    std::vector<DiskLayer> disks;
    std::optional<Viewport> viewport;  // nullopt = fit all geometry
    std::optional<Complex> zoom_center;
};

struct FigureBuild {
    FigureSpec spec;
    std::vector<std::string> warnings;
};

/// Figures for psi_{a,5} under T = I + D:
///   1  roots, translated roots {-1} + Z(psi), roots of T psi
///   2  as 1, zoomed on the root with argument 0
///   3  as 1 plus the classical and the sharper inclusion disks (needs a > 9)
///   4  as 3, zoomed on the root a e^{6 pi i / 5}
/// Throws std::invalid_argument for which outside 1..4 or a <= 0.
FigureBuild make_figure(int which, double a);

/// The explicit viewport, or the padded bounding box of all points and disks.
Viewport resolve_viewport(const FigureSpec& spec);

std::string role_name(PointRole role);
std::string style_name(DiskStyle style);

std::string render_svg(const FigureSpec& spec);

/// Columns: layer,role,kind,re,im,radius. One line per point and per disk.
std::string render_csv(const FigureSpec& spec);

}  // namespace rootshift
