#include "bvp3/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bvp3 {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

} // namespace

std::string render_solution_svg(std::span<const double> t, std::span<const double> u) {
    if (t.size() != u.size() || t.size() < 2) {
        throw std::invalid_argument("render_solution_svg: need matching arrays of length >= 2");
    }

    constexpr double w = 640.0, h = 400.0;
    constexpr double ml = 70.0, mr = 20.0, mt = 20.0, mb = 45.0; // margins
    const double px0 = ml, px1 = w - mr, py0 = h - mb, py1 = mt;

    double umin = *std::min_element(u.begin(), u.end());
    double umax = *std::max_element(u.begin(), u.end());
    if (umax - umin < 1e-12) { // flat curve: open up a visible band
        umin -= 0.5;
        umax += 0.5;
    }

    const auto sx = [&](double x) { return px0 + (px1 - px0) * x; };
    const auto sy = [&](double v) { return py0 + (py1 - py0) * (v - umin) / (umax - umin); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"0 0 640 400\" width=\"640\" height=\"400\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";

    // axes
    s += "<line x1=\"" + fmt("%.1f", px0) + "\" y1=\"" + fmt("%.1f", py0) + "\" x2=\"" +
         fmt("%.1f", px1) + "\" y2=\"" + fmt("%.1f", py0) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + fmt("%.1f", px0) + "\" y1=\"" + fmt("%.1f", py0) + "\" x2=\"" +
         fmt("%.1f", px0) + "\" y2=\"" + fmt("%.1f", py1) + "\" stroke=\"black\"/>\n";

    // t ticks at 0, 0.25, ..., 1
    for (int k = 0; k <= 4; ++k) {
        const double x = 0.25 * k;
        const double px = sx(x);
        s += "<line x1=\"" + fmt("%.1f", px) + "\" y1=\"" + fmt("%.1f", py0) + "\" x2=\"" +
             fmt("%.1f", px) + "\" y2=\"" + fmt("%.1f", py0 + 6.0) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt("%.1f", px) + "\" y=\"" + fmt("%.1f", py0 + 22.0) +
             "\" font-size=\"13\" text-anchor=\"middle\">" + fmt("%.2f", x) + "</text>\n";
    }

    // value-axis extremes
    s += "<text x=\"" + fmt("%.1f", px0 - 8.0) + "\" y=\"" + fmt("%.1f", sy(umin) + 4.0) +
         "\" font-size=\"13\" text-anchor=\"end\">" + fmt("%.4g", umin) + "</text>\n";
    s += "<text x=\"" + fmt("%.1f", px0 - 8.0) + "\" y=\"" + fmt("%.1f", sy(umax) + 4.0) +
         "\" font-size=\"13\" text-anchor=\"end\">" + fmt("%.4g", umax) + "</text>\n";

    s += "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += fmt("%.2f", sx(t[i])) + "," + fmt("%.2f", sy(u[i]));
    }
    s += "\"/>\n</svg>\n";
    return s;
}

} // namespace bvp3
