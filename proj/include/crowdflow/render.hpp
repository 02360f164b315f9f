#pragma once

#include <filesystem>
#include <vector>

#include "crowdflow/types.hpp"

namespace crowdflow {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Interleaved 8-bit RGB, row-major, top row first.
struct Image {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> rgb;  // 3 * width * height bytes

  Rgb at(std::uint32_t x, std::uint32_t y) const {
    std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
};

/// Luminance-monotone heat ramp black -> red -> yellow -> white over [0, 1]
/// (inputs clamped). v=0 maps to pure black, v=1 to pure white.
Rgb heat_color(double v);

/// Min-max normalizes the map for display and colorizes it with heat_color.
/// With an underlay (same dims required) each pixel is alpha-blended as
/// underlay * (1 - alpha*v) + color * alpha*v so the background shows through
/// where intensity is low.
Image render_heatmap(const DensityMap& map, const Image* underlay = nullptr,
                     double alpha = 0.6);

// Flow renders are assembled as a primitive list first so tests can check
// structure without pixel diffing.
struct ArrowGlyph {
  Point from, to;
};
struct RingGlyph {
  Point center;
  double radius;
};
struct FlowGlyphs {
  std::vector<ArrowGlyph> arrows;  // one per match, from t0 to tk
  std::vector<RingGlyph> start_rings;  // unmatched at t0
  std::vector<RingGlyph> end_rings;    // unmatched at tk
};

FlowGlyphs build_flow_glyphs(const FlowResult& result, double ring_radius = 6.0);

/// Rasterizes arrows (green) and rings (orange for unmatched-start, cyan for
/// unmatched-end) over the underlay, or over black when none is given.
Image render_flow(const FlowResult& result, FrameDims dims,
                  const Image* underlay = nullptr);

void write_png(const Image& image, const std::filesystem::path& path);
Image read_png(const std::filesystem::path& path);

}  // namespace crowdflow
