// Standalone ASCII and SVG renderings of a ratio trace.
#pragma once

#include "gdensity/density.hpp"

#include <string>

namespace gdensity {

/// Ratio against scale index k; the vertical axis spans [0, max(1, largest ratio)].
std::string ascii_plot(const RatioTrace& t, int width = 64, int height = 16);
std::string svg_plot(const RatioTrace& t, const std::string& title, int width = 640, int height = 360);

}  // namespace gdensity
