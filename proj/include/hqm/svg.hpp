#pragma once

#include <string>
#include <vector>

#include "hqm/mappings.hpp"

namespace hqm::plot {

struct GridSpec {
    int n_radii = 8;
    int n_rays = 16;
    double r_max = 0.9;
};

struct Overlay {
    Complex center{};
    double radius = 0.0;
};

struct PlotSpec {
    GridSpec grid;
    std::vector<Overlay> overlays;
    int size = 640;             // pixel width/height of the emitted image
    int samples_per_curve = 512;
};

// Renders the image of the polar grid under `map` plus overlay circles as SVG 1.1:
// one <path> per grid curve, one <circle> per overlay, coordinates in image-plane
// units so overlay radii appear verbatim.  Output is deterministic.
std::string render_svg(const HarmonicMap& map, const PlotSpec& spec);

}  // namespace hqm::plot
