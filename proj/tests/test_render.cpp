#include <doctest.h>

#include <fstream>
#include <iterator>
#include <regex>

#include "subst/digest.hpp"
#include "subst/render.hpp"

using namespace subst;

namespace {

Trajectory from_one(const RuleTable& r, std::size_t steps) {
  return run(r, Word::parse(r.alphabet(), "1"), {steps, RunMode::Strings});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Frozen when the golden image was first generated.
constexpr const char* kCantorGoldenSha256 =
    "fd3ba72d78b1c25cb6c18eeb0e2f90204550d99970424dbbebc21265fa936a25";

}  // namespace

TEST_CASE("Cantor rows use the floor column partition") {
  const Trajectory t = from_one(rules::cantor(), 2);
  const Palette pal = Palette::standard(Radix(2));
  const RasterImage img = render_spacetime(t, pal, 27, 1);
  CHECK(img.width() == 27);
  CHECK(img.height() == 3);
  const std::string row2 = "101000101";
  for (std::size_t x = 0; x < 27; ++x) {
    const Symbol s = static_cast<Symbol>(row2[x / 3] - '0');
    CHECK(img.at(x, 2) == pal[s]);
  }
  for (std::size_t x = 0; x < 27; ++x) CHECK(img.at(x, 0) == pal[1]);
}

TEST_CASE("single symbol renders a solid row") {
  const Trajectory t = run(rules::fibonacci(), Word::parse(Radix(3), "2"), {0});
  const Palette pal = Palette::standard(Radix(3));
  const RasterImage img = render_spacetime(t, pal, 10, 4);
  CHECK(img.height() == 4);
  for (std::size_t y = 0; y < 4; ++y)
    for (std::size_t x = 0; x < 10; ++x) CHECK(img.at(x, y) == pal[2]);
}

TEST_CASE("column partition covers every pixel exactly once") {
  for (std::size_t width : {1ul, 7ul, 27ul, 100ul, 729ul}) {
    for (std::size_t cells : {1ul, 2ul, 3ul, 13ul, 27ul, 1000ul}) {
      std::vector<int> hits(width, 0);
      for (std::size_t j = 0; j < cells; ++j) {
        for (std::size_t x = cell_column(j, cells, width); x < cell_column(j + 1, cells, width); ++x) ++hits[x];
      }
      for (int h : hits) REQUIRE(h == 1);
    }
  }
}

TEST_CASE("doubling the width doubles boundaries when the length divides it") {
  for (std::size_t cells : {1ul, 3ul, 9ul, 27ul}) {
    for (std::size_t j = 0; j <= cells; ++j) {
      CHECK(cell_column(j, cells, 54) == 2 * cell_column(j, cells, 27));
    }
  }
}

TEST_CASE("palettes") {
  const Palette p = Palette::standard(Radix(7));
  CHECK(p.size() == 7);
  CHECK(p[0] == Rgb{0, 0, 0});
  CHECK(p[1] == Rgb{255, 0, 0});
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) CHECK_FALSE(p[static_cast<Symbol>(i)] == p[static_cast<Symbol>(j)]);
  CHECK(Palette::paper_fig2(Radix(7)).size() == 7);
  CHECK(Palette::named("paper-fig2", Radix(3)).size() == 3);
  CHECK_THROWS(Palette::paper_fig2(Radix(8)));
  CHECK_THROWS(Palette::named("sepia", Radix(2)));
}

TEST_CASE("render rejects bad inputs") {
  const Trajectory t = from_one(rules::cantor(), 1);
  CHECK_THROWS(render_spacetime(t, Palette({{0, 0, 0}}), 9, 1));
  CHECK_THROWS(render_spacetime(t, Palette::standard(Radix(2)), 9, 0));
  Trajectory empty{rules::cantor(), {}, {}, {}, 0, false};
  CHECK_THROWS(render_spacetime(empty, Palette::standard(Radix(2)), 9, 1));
}

TEST_CASE("PPM bytes") {
  const RasterImage black(1, 1);
  CHECK(ppm_bytes(black) == std::string("P6\n1 1\n255\n\0\0\0", 14));
  const RasterImage img = render_spacetime(from_one(rules::fibonacci(), 6), Palette::standard(Radix(3)), 50, 3);
  const RasterImage back = read_ppm(ppm_bytes(img));
  CHECK(back == img);
  CHECK_THROWS(read_ppm("P3\n1 1\n255\n"));
}

TEST_CASE("Cantor 4-step golden image") {
  const Trajectory t = from_one(rules::cantor(), 4);
  const Palette pal = Palette::standard(Radix(2));
  const std::string bytes = ppm_bytes(render_spacetime(t, pal, 81, 4, 1));
  CHECK(bytes.rfind("P6\n81 20\n255\n", 0) == 0);
  CHECK(bytes == read_file(SUBST_SOURCE_DIR "/tests/golden/cantor4.ppm"));
  CHECK(sha256_hex(bytes) == kCantorGoldenSha256);
  for (unsigned workers : {2u, 3u, 8u}) {
    CHECK(ppm_bytes(render_spacetime(t, pal, 81, 4, workers)) == bytes);
  }
}

TEST_CASE("7-symbol rule, five steps, paper-fig2 palette") {
  const RuleTable r = decode_wolfram({Natural("74330023345"), 3, Radix(7)});
  const Trajectory t = from_one(r, 5);
  const RasterImage img = render_spacetime(t, Palette::paper_fig2(Radix(7)), 243, 8, 4);
  CHECK(img.height() == 48);
  CHECK(img == render_spacetime(t, Palette::paper_fig2(Radix(7)), 243, 8, 1));
  CHECK(sha256_hex(ppm_bytes(img)) == "cf6d126afe89887563ca3bea5ab1a56df994ff2cc915c3a817900cabd29a2d13");
}

TEST_CASE("SVG uses exact rational x coordinates") {
  const std::string svg = svg_text(from_one(rules::cantor(), 1), Palette::standard(Radix(2)));
  CHECK(svg.find("viewBox=\"0 0 3 2\"") != std::string::npos);
  const std::regex rect(R"re(<rect x="(\d+)" y="1" width="1")re");
  std::vector<std::string> xs;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it) {
    xs.push_back((*it)[1]);
  }
  CHECK(xs == std::vector<std::string>{"0", "1", "2"});  // 0, 1/3, 2/3 of the width

  const std::string one = svg_text(run(rules::fibonacci(), Word::parse(Radix(3), "121"), {0}),
                                   Palette::standard(Radix(3)));
  std::size_t rects = 0;
  for (std::size_t pos = 0; (pos = one.find("<rect", pos)) != std::string::npos; ++pos) ++rects;
  CHECK(rects == 3);
  CHECK(one.find("y=\"1\"") == std::string::npos);

  CHECK_THROWS(svg_text(from_one(rules::cantor(), 1), Palette({{0, 0, 0}})));
}

TEST_CASE("SVG falls back to decimals when the lcm is too large") {
  const std::string svg = svg_text(from_one(rules::fibonacci(), 14), Palette::standard(Radix(3)));
  CHECK(svg.find("viewBox=\"0 0 1 15\"") != std::string::npos);
}

TEST_CASE("render is deterministic") {
  const Trajectory t = from_one(rules::fibonacci(), 9);
  const Palette pal = Palette::standard(Radix(3));
  CHECK(ppm_bytes(render_spacetime(t, pal, 200, 2, 1)) == ppm_bytes(render_spacetime(t, pal, 200, 2, 5)));
  CHECK(svg_text(t, pal) == svg_text(t, pal));
}
