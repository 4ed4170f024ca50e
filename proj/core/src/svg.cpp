#include "goodsemi/svg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "goodsemi/tracks.hpp"
#include "goodsemi/tropical.hpp"

namespace goodsemi {

namespace {

constexpr int kUnit = 10;
constexpr int kMargin = 20;
constexpr int kOverhang = 5;  // units drawn past c+e

struct Frame {
  std::int64_t b1, b2, height;
  std::int64_t px(std::int64_t x) const { return kMargin + kUnit * x; }
  std::int64_t py(std::int64_t y) const { return height - kMargin - kUnit * y; }
};

}  // namespace

void emit_svg(const GoodSemigroup& s, std::ostream& out) {
  const Frame f{s.c1() + s.e1(), s.c2() + s.e2(), 2 * kMargin + kUnit * (s.c2() + s.e2() + kOverhang)};
  const std::int64_t w1 = f.b1 + kOverhang, w2 = f.b2 + kOverhang;
  const std::int64_t width = 2 * kMargin + kUnit * w1;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << f.height
      << "\" viewBox=\"0 0 " << width << ' ' << f.height << "\">\n"
      << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#888\"/></pattern>\n"
      << "<marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
         "<path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g stroke=\"#ddd\" stroke-width=\"0.5\">\n";
  for (std::int64_t x = 0; x <= w1; ++x)
    out << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(x) << "\" y2=\"" << f.py(w2)
        << "\"/>\n";
  for (std::int64_t y = 0; y <= w2; ++y)
    out << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(y) << "\" x2=\"" << f.px(w1) << "\" y2=\"" << f.py(y)
        << "\"/>\n";
  out << "</g>\n";
  out << "<rect x=\"" << f.px(f.b1) << "\" y=\"" << f.py(w2) << "\" width=\"" << kUnit * kOverhang << "\" height=\""
      << kUnit * kOverhang << "\" fill=\"url(#hatch)\"/>\n";

  out << "<g stroke=\"black\" stroke-dasharray=\"2,2\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\">\n";
  for (std::int64_t x = 0; x < f.b1; ++x)
    if (s.column_ray(x))
      out << "<line x1=\"" << f.px(x) << "\" y1=\"" << f.py(f.b2) - 4 << "\" x2=\"" << f.px(x) << "\" y2=\""
          << f.py(w2) << "\"/>\n";
  for (std::int64_t y = 0; y < f.b2; ++y)
    if (s.row_ray(y))
      out << "<line x1=\"" << f.px(f.b1) + 4 << "\" y1=\"" << f.py(y) << "\" x2=\"" << f.px(w1) << "\" y2=\""
          << f.py(y) << "\"/>\n";
  out << "</g>\n";

  const IrreducibilityOracle oracle(s);
  const GeneratorSet ia = irreducible_absolutes(s);
  auto absolute = [&](std::int64_t x, std::int64_t y) {
    Point p{x, y};
    if (x == f.b1 && y < f.b2) p.x = kInf;
    if (y == f.b2 && x < f.b1) p.y = kInf;
    return std::binary_search(ia.begin(), ia.end(), p);
  };
  out << "<g fill=\"none\" stroke=\"black\">\n";
  for (std::int64_t x = 0; x <= f.b1; ++x)
    for (std::int64_t y = 0; y <= f.b2; ++y) {
      if (!s.contains(x, y)) continue;
      const auto cx = f.px(x), cy = f.py(y);
      if ((x || y) && !oracle.irreducible(x, y))
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2.5\"/>\n";
      else
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1.5\" fill=\"black\"/>\n";
      if (absolute(x, y))
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\"/><circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"6\"/>\n";
    }
  out << "</g>\n</svg>\n";
}

std::string to_svg(const GoodSemigroup& s) {
  std::ostringstream out;
  emit_svg(s, out);
  return out.str();
}

}  // namespace goodsemi
