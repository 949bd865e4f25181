#include "subst/render.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace subst {

namespace {

constexpr std::uint64_t kExactSvgLimit = std::uint64_t{1} << 53;

std::string hex_color(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

void require_palette(const Palette& palette, Radix p) {
  if (palette.size() != p.value()) {
    throw std::invalid_argument("palette has " + std::to_string(palette.size()) +
                                " colors for an alphabet of " + std::to_string(p.value()));
  }
}

void paint_rows(const Trajectory& traj, const Palette& palette, RasterImage& img,
                std::size_t row_height, std::size_t first, std::size_t last) {
  const std::size_t width = img.width();
  for (std::size_t t = first; t < last; ++t) {
    const auto& symbols = traj.words[t].symbols();
    const std::size_t cells = symbols.size();
    std::uint8_t* px = img.row(t * row_height);
    for (std::size_t j = 0; j < cells; ++j) {
      const std::size_t c0 = cell_column(j, cells, width);
      const std::size_t c1 = cell_column(j + 1, cells, width);
      const Rgb c = palette[symbols[j]];
      for (std::size_t x = c0; x < c1; ++x) {
        px[3 * x] = c.r;
        px[3 * x + 1] = c.g;
        px[3 * x + 2] = c.b;
      }
    }
    for (std::size_t k = 1; k < row_height; ++k) {
      std::copy(px, px + 3 * width, img.row(t * row_height + k));
    }
  }
}

}  // namespace

Palette Palette::standard(Radix p) {
  std::vector<Rgb> colors{{0, 0, 0}};
  const std::uint64_t den = p.value() - 1;
  for (std::uint64_t k = 1; k < p.value(); ++k) {
    // Hue (k-1)/(p-1) of the circle, in sixths: sector plus remainder/den.
    const std::uint64_t num = 6 * (k - 1);
    const std::uint64_t sector = num / den;
    const auto rise = static_cast<std::uint8_t>((255 * (num % den) + den / 2) / den);
    const auto fall = static_cast<std::uint8_t>(255 - rise);
    switch (sector) {
      case 0: colors.push_back({255, rise, 0}); break;
      case 1: colors.push_back({fall, 255, 0}); break;
      case 2: colors.push_back({0, 255, rise}); break;
      case 3: colors.push_back({0, fall, 255}); break;
      case 4: colors.push_back({rise, 0, 255}); break;
      default: colors.push_back({255, 0, fall}); break;
    }
  }
  return Palette(std::move(colors));
}

Palette Palette::paper_fig2(Radix p) {
  static const std::vector<Rgb> kColors{
      {0, 0, 0},        // 0 black
      {139, 69, 19},    // 1 brown
      {220, 20, 20},    // 2 red
      {34, 139, 34},    // 3 green (placeholder: never reached from a 1 seed)
      {255, 140, 0},    // 4 orange
      {255, 215, 0},    // 5 yellow
      {255, 255, 255},  // 6 white
  };
  if (p.value() > kColors.size()) {
    throw std::invalid_argument("paper-fig2 palette covers at most 7 symbols");
  }
  return Palette({kColors.begin(), kColors.begin() + static_cast<std::ptrdiff_t>(p.value())});
}

Palette Palette::named(const std::string& name, Radix p) {
  if (name == "default") return standard(p);
  if (name == "paper-fig2") return paper_fig2(p);
  throw std::invalid_argument("unknown palette '" + name + "' (default, paper-fig2)");
}

RasterImage::RasterImage(std::size_t width, std::size_t height)
    : width_(width), height_(height), pixels_(3 * width * height, 0) {
  if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
}

Rgb RasterImage::at(std::size_t x, std::size_t y) const {
  const std::size_t i = 3 * (y * width_ + x);
  return {pixels_.at(i), pixels_.at(i + 1), pixels_.at(i + 2)};
}

void RasterImage::set(std::size_t x, std::size_t y, Rgb c) {
  const std::size_t i = 3 * (y * width_ + x);
  pixels_.at(i) = c.r;
  pixels_.at(i + 1) = c.g;
  pixels_.at(i + 2) = c.b;
}

std::size_t cell_column(std::size_t j, std::size_t cells, std::size_t width) {
  return static_cast<std::size_t>(static_cast<unsigned __int128>(j) * width / cells);
}

RasterImage render_spacetime(const Trajectory& traj, const Palette& palette, std::size_t width,
                             std::size_t row_height, unsigned workers) {
  if (traj.words.empty()) throw std::invalid_argument("cannot render an empty trajectory");
  if (row_height == 0) throw std::invalid_argument("row height must be >= 1");
  require_palette(palette, traj.rule.alphabet());
  const std::size_t rows = traj.words.size();
  RasterImage img(width, rows * row_height);

  const std::size_t threads = std::clamp<std::size_t>(workers, 1, rows);
  if (threads == 1) {
    paint_rows(traj, palette, img, row_height, 0, rows);
    return img;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (rows + threads - 1) / threads;
  for (std::size_t first = 0; first < rows; first += chunk) {
    const std::size_t last = std::min(rows, first + chunk);
    pool.emplace_back([&, first, last] { paint_rows(traj, palette, img, row_height, first, last); });
  }
  pool.clear();  // joins
  return img;
}

void write_ppm(const RasterImage& img, std::ostream& out) {
  out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.bytes().data()),
            static_cast<std::streamsize>(img.bytes().size()));
}

std::string ppm_bytes(const RasterImage& img) {
  std::ostringstream os(std::ios::binary);
  write_ppm(img, os);
  return os.str();
}

RasterImage read_ppm(std::string_view bytes) {
  std::size_t pos = 0;
  auto token = [&]() {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return std::string(bytes.substr(start, pos - start));
  };
  if (token() != "P6") throw std::invalid_argument("not a P6 image");
  const std::size_t w = std::stoul(token());
  const std::size_t h = std::stoul(token());
  if (token() != "255") throw std::invalid_argument("only maxval 255 is supported");
  ++pos;  // single whitespace before the raster
  if (bytes.size() - pos != 3 * w * h) throw std::invalid_argument("truncated PPM raster");
  RasterImage img(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    std::copy_n(bytes.data() + pos + 3 * w * y, 3 * w, reinterpret_cast<char*>(img.row(y)));
  }
  return img;
}

void write_svg(const Trajectory& traj, const Palette& palette, std::ostream& out) {
  if (traj.words.empty()) throw std::invalid_argument("cannot render an empty trajectory");
  require_palette(palette, traj.rule.alphabet());

  std::uint64_t span = 1;
  for (std::size_t len : traj.lengths) {
    const std::uint64_t g = std::gcd(span, static_cast<std::uint64_t>(len));
    const std::uint64_t step = len / g;
    if (span > kExactSvgLimit / step) {
      span = 0;
      break;
    }
    span *= step;
  }
  const bool exact = span != 0;
  const std::size_t rows = traj.words.size();

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\""
      << 20 * rows << "\" viewBox=\"0 0 " << (exact ? span : 1) << ' ' << rows
      << "\" preserveAspectRatio=\"none\" shape-rendering=\"crispEdges\">\n";
  char buf[64];
  for (std::size_t t = 0; t < rows; ++t) {
    const auto& symbols = traj.words[t].symbols();
    const std::size_t n = symbols.size();
    for (std::size_t j = 0; j < n; ++j) {
      out << "<rect x=\"";
      if (exact) {
        const std::uint64_t w = span / n;
        out << j * w << "\" y=\"" << t << "\" width=\"" << w;
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(j) / static_cast<double>(n));
        out << buf << "\" y=\"" << t << "\" width=\"";
        std::snprintf(buf, sizeof buf, "%.17g", 1.0 / static_cast<double>(n));
        out << buf;
      }
      out << "\" height=\"1\" fill=\"" << hex_color(palette[symbols[j]]) << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

std::string svg_text(const Trajectory& traj, const Palette& palette) {
  std::ostringstream os;
  write_svg(traj, palette, os);
  return os.str();
}

}  // namespace subst
