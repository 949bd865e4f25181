#pragma once

// Space-time diagrams: row t is word w_t stretched over the full image
// width, time running downwards.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "subst/engine.hpp"

namespace subst {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

class Palette {
 public:
  explicit Palette(std::vector<Rgb> colors) : colors_(std::move(colors)) {}

  // 0 -> black, 1..p-1 -> evenly spaced fully saturated hues.
  static Palette standard(Radix p);
  // black, brown, red, green, orange, yellow, white; first p entries. p <= 7.
  static Palette paper_fig2(Radix p);
  // "default" or "paper-fig2".
  static Palette named(const std::string& name, Radix p);

  std::size_t size() const noexcept { return colors_.size(); }
  const Rgb& operator[](Symbol s) const { return colors_.at(s); }
  const std::vector<Rgb>& colors() const noexcept { return colors_; }

 private:
  std::vector<Rgb> colors_;
};

class RasterImage {
 public:
  RasterImage(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  Rgb at(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, Rgb c);
  const std::vector<std::uint8_t>& bytes() const noexcept { return pixels_; }
  std::uint8_t* row(std::size_t y) { return pixels_.data() + 3 * width_ * y; }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;  // row-major RGB
};

// First pixel column of cell j in a row of `cells` cells over `width` columns.
std::size_t cell_column(std::size_t j, std::size_t cells, std::size_t width);

// Rows are rasterized on up to `workers` threads; the result does not depend
// on the worker count.
RasterImage render_spacetime(const Trajectory& traj, const Palette& palette, std::size_t width,
                             std::size_t row_height, unsigned workers = 1);

void write_ppm(const RasterImage& img, std::ostream& out);
std::string ppm_bytes(const RasterImage& img);
RasterImage read_ppm(std::string_view bytes);

// One <rect> per cell. Coordinates are exact: the view box is as wide as the
// lcm of the word lengths, so cell j of a length-n row starts at j * lcm / n.
// When that lcm exceeds 2^53 the view box is 1 wide and x is printed with 17
// significant digits instead.
void write_svg(const Trajectory& traj, const Palette& palette, std::ostream& out);
std::string svg_text(const Trajectory& traj, const Palette& palette);

}  // namespace subst
