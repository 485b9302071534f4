#include "hqm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hqm::plot {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit_path(std::ostringstream& out, const std::vector<Complex>& pts,
               const char* stroke) {
    out << "<path fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.25%\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i == 0 ? "M" : "L") << num(pts[i].real()) << " " << num(pts[i].imag());
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_svg(const HarmonicMap& map, const PlotSpec& spec) {
    if (spec.grid.n_radii < 2 || spec.grid.n_rays < 2) {
        throw DomainError("render_svg: grid needs n_radii, n_rays >= 2");
    }
    if (!(spec.grid.r_max < 1.0) || !(spec.grid.r_max > 0.0)) {
        throw DomainError("render_svg: r_max must lie in (0, 1)");
    }

    std::vector<std::vector<Complex>> circles, rays;
    const int ns = spec.samples_per_curve;
    for (int i = 1; i <= spec.grid.n_radii; ++i) {
        const double r = spec.grid.r_max * i / spec.grid.n_radii;
        std::vector<Complex> pts;
        pts.reserve(ns + 1);
        for (int j = 0; j <= ns; ++j) {
            pts.push_back(map.eval(std::polar(r, 2.0 * std::numbers::pi * j / ns)));
        }
        circles.push_back(std::move(pts));
    }
    for (int i = 0; i < spec.grid.n_rays; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / spec.grid.n_rays;
        std::vector<Complex> pts;
        pts.reserve(ns + 1);
        for (int j = 0; j <= ns; ++j) {
            pts.push_back(map.eval(std::polar(spec.grid.r_max * j / ns, theta)));
        }
        rays.push_back(std::move(pts));
    }

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    const auto extend = [&](Complex p) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    };
    for (const auto& c : circles)
        for (Complex p : c) extend(p);
    for (const auto& o : spec.overlays) {
        if (!(o.radius > 0.0)) throw DomainError("render_svg: overlay radius must be > 0");
        extend(o.center + Complex(o.radius, o.radius));
        extend(o.center - Complex(o.radius, o.radius));
    }
    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= pad;
    ymin -= pad;
    xmax += pad;
    ymax += pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec.size << "\" height=\"" << spec.size << "\" viewBox=\"" << num(xmin) << " "
        << num(ymin) << " " << num(xmax - xmin) << " " << num(ymax - ymin) << "\">\n"
        << "<g transform=\"translate(0," << num(ymin + ymax) << ") scale(1,-1)\">\n";
    for (const auto& c : circles) emit_path(out, c, "#4060c0");
    for (const auto& r : rays) emit_path(out, r, "#4060c0");
    for (const auto& o : spec.overlays) {
        out << "<circle cx=\"" << num(o.center.real()) << "\" cy=\"" << num(o.center.imag())
            << "\" r=\"" << num(o.radius)
            << "\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"0.4%\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace hqm::plot
