#pragma once

#include <span>
#include <string>

namespace bvp3 {

/// Self-contained SVG 1.1 line plot of (t_i, u_i): a 640x400 viewBox with
/// axes, t ticks at 0, 0.25, ..., 1 and min/max labels on the value axis.
std::string render_solution_svg(std::span<const double> t, std::span<const double> u);

} // namespace bvp3
