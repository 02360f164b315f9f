#include "crowdflow/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include "crowdflow/extraction.hpp"

namespace crowdflow {

Rgb heat_color(double v) {
  v = std::clamp(v, 0.0, 1.0);
  // Three linear segments: black->red, red->yellow, yellow->white.
  auto channel = [](double t) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
  };
  return {channel(v * 3.0), channel(v * 3.0 - 1.0), channel(v * 3.0 - 2.0)};
}

namespace {

void put_pixel(Image& img, std::int64_t x, std::int64_t y, Rgb c) {
  if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * img.width + x);
  img.rgb[i] = c.r;
  img.rgb[i + 1] = c.g;
  img.rgb[i + 2] = c.b;
}

void draw_line(Image& img, Point a, Point b, Rgb c) {
  const double steps = std::max(1.0, std::ceil(std::max(std::abs(b.x - a.x),
                                                        std::abs(b.y - a.y))));
  for (double s = 0; s <= steps; ++s) {
    const double t = s / steps;
    put_pixel(img, std::llround(a.x + t * (b.x - a.x)),
              std::llround(a.y + t * (b.y - a.y)), c);
  }
}

void draw_ring(Image& img, Point center, double radius, Rgb c) {
  const int segments = std::max(16, static_cast<int>(radius * 8));
  for (int s = 0; s < segments; ++s) {
    const double angle = 2.0 * M_PI * s / segments;
    put_pixel(img, std::llround(center.x + radius * std::cos(angle)),
              std::llround(center.y + radius * std::sin(angle)), c);
  }
}

void draw_arrow(Image& img, Point from, Point to, Rgb c) {
  draw_line(img, from, to, c);
  const double dx = to.x - from.x, dy = to.y - from.y;
  const double len = std::hypot(dx, dy);
  if (len < 1.0) {
    put_pixel(img, std::llround(to.x), std::llround(to.y), c);
    return;
  }
  // Two barbs 30 degrees off the shaft, 40% of its length, capped at 8 px.
  const double barb = std::min(8.0, 0.4 * len);
  const double theta = std::atan2(dy, dx);
  for (const double side : {+1.0, -1.0}) {
    const double phi = theta + side * (M_PI - M_PI / 6.0);
    draw_line(img, to, Point(to.x + barb * std::cos(phi), to.y + barb * std::sin(phi)), c);
  }
}

constexpr Rgb kArrowColor = {0, 255, 0};
constexpr Rgb kStartRingColor = {255, 140, 0};
constexpr Rgb kEndRingColor = {0, 200, 255};

}  // namespace

Image render_heatmap(const DensityMap& map, const Image* underlay, double alpha) {
  if (underlay && (underlay->width != map.dims.width || underlay->height != map.dims.height))
    throw std::invalid_argument("render_heatmap: underlay dims do not match map");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("render_heatmap: alpha must be in [0, 1]");

  const DensityMap norm = normalize_minmax(map);
  Image img{map.dims.width, map.dims.height,
            std::vector<std::uint8_t>(3ull * map.dims.width * map.dims.height)};
  for (std::uint32_t y = 0; y < img.height; ++y) {
    for (std::uint32_t x = 0; x < img.width; ++x) {
      const double v = norm.values(y, x);
      Rgb c = heat_color(v);
      if (underlay) {
        const Rgb u = underlay->at(x, y);
        const double a = alpha * v;
        c = {static_cast<std::uint8_t>(std::lround(u.r * (1 - a) + c.r * a)),
             static_cast<std::uint8_t>(std::lround(u.g * (1 - a) + c.g * a)),
             static_cast<std::uint8_t>(std::lround(u.b * (1 - a) + c.b * a))};
      }
      put_pixel(img, x, y, c);
    }
  }
  return img;
}

FlowGlyphs build_flow_glyphs(const FlowResult& result, double ring_radius) {
  FlowGlyphs glyphs;
  for (const FlowMatch& m : result.matches) glyphs.arrows.push_back({m.from, m.to});
  for (const Point& p : result.unmatched_start)
    glyphs.start_rings.push_back({p, ring_radius});
  for (const Point& p : result.unmatched_end) glyphs.end_rings.push_back({p, ring_radius});
  return glyphs;
}

Image render_flow(const FlowResult& result, FrameDims dims, const Image* underlay) {
  if (underlay && (underlay->width != dims.width || underlay->height != dims.height))
    throw std::invalid_argument("render_flow: underlay dims do not match frame");

  Image img{dims.width, dims.height,
            std::vector<std::uint8_t>(3ull * dims.width * dims.height)};
  if (underlay) img.rgb = underlay->rgb;

  const FlowGlyphs glyphs = build_flow_glyphs(result);
  for (const ArrowGlyph& a : glyphs.arrows) draw_arrow(img, a.from, a.to, kArrowColor);
  for (const RingGlyph& r : glyphs.start_rings)
    draw_ring(img, r.center, r.radius, kStartRingColor);
  for (const RingGlyph& r : glyphs.end_rings)
    draw_ring(img, r.center, r.radius, kEndRingColor);
  return img;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

void write_png(const Image& image, const std::filesystem::path& path) {
  if (image.rgb.size() != 3ull * image.width * image.height)
    throw std::invalid_argument("write_png: buffer size does not match dims");

  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) throw std::runtime_error(path.string() + ": cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("write_png: libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error(path.string() + ": PNG encode failed");
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::uint32_t y = 0; y < image.height; ++y)
    png_write_row(png, const_cast<png_bytep>(image.rgb.data() + 3ull * y * image.width));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image read_png(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) throw std::runtime_error(path.string() + ": cannot open");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("read_png: libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error(path.string() + ": PNG decode failed");
  }

  png_init_io(png, file.get());
  png_read_info(png, info);

  // Normalize any input layout to 8-bit RGB.
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  Image image{static_cast<std::uint32_t>(png_get_image_width(png, info)),
              static_cast<std::uint32_t>(png_get_image_height(png, info)),
              {}};
  image.rgb.resize(3ull * image.width * image.height);
  for (std::uint32_t y = 0; y < image.height; ++y)
    png_read_row(png, image.rgb.data() + 3ull * y * image.width, nullptr);
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

}  // namespace crowdflow
