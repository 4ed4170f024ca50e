#include "goodsemi/tropical.hpp"

#include <algorithm>

namespace goodsemi {

GeneratorSet make_generators(std::vector<Point> pts) {
  for (const auto& p : pts) {
    if (p.is_zero()) throw std::invalid_argument("generator (0,0) is not allowed");
    if (p.x.is_inf() && p.y.is_inf()) throw std::invalid_argument("generator (inf,inf) is not allowed");
    if (p.x < 0 || p.y < 0) throw std::invalid_argument("negative generator " + p.str());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

constexpr std::int64_t kInfRaw = ExtNat::kInfRaw;

std::int64_t add_raw(std::int64_t a, std::int64_t b) {
  if (a == kInfRaw || b == kInfRaw) return kInfRaw;
  if (a == ProductMonoid::kUnbounded || b == ProductMonoid::kUnbounded) return ProductMonoid::kUnbounded;
  return a + b;
}

}  // namespace

ProductMonoid::ProductMonoid(GeneratorSet gens, std::int64_t limit) : gens_(std::move(gens)), limit_(limit) {
  t1_ = build(1, limit_);
  t2_ = build(2, limit_);
}

ProductMonoid::Table ProductMonoid::build(int axis, std::int64_t limit) const {
  Table t;
  t.best.assign(static_cast<std::size_t>(limit + 1), kNone);
  t.from.assign(static_cast<std::size_t>(limit + 1), -1);
  std::int64_t zero_boost = kNone;  // best other coordinate a zero-axis generator can add
  for (const auto& g : gens_) {
    if (g[axis].is_inf() || g[axis] != 0) continue;
    zero_boost = std::max(zero_boost, g[3 - axis].is_inf() ? kInfRaw : kUnbounded);
  }
  for (std::int64_t v = 0; v <= limit; ++v) {
    auto& cur = t.best[static_cast<std::size_t>(v)];
    if (v == 0) cur = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const ExtNat u = gens_[i][axis];
      if (u.is_inf() || u == 0 || u.value() > v) continue;
      const std::int64_t prev = t.best[static_cast<std::size_t>(v - u.value())];
      if (prev == kNone) continue;
      const ExtNat o = gens_[i][3 - axis];
      const std::int64_t cand = add_raw(prev, o.is_inf() ? kInfRaw : o.value());
      if (cand > cur) {
        cur = cand;
        t.from[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
    if (cur != kNone && zero_boost != kNone) cur = std::max(cur, zero_boost);
  }
  return t;
}

void ProductMonoid::reserve(std::int64_t value) const {
  if (value <= limit_) return;
  limit_ = std::max(value, 2 * limit_);
  t1_ = build(1, limit_);
  t2_ = build(2, limit_);
}

std::int64_t ProductMonoid::best(int axis, std::int64_t value) const {
  if (value < 0) return kNone;
  reserve(value);
  return table(axis).best[static_cast<std::size_t>(value)];
}

bool ProductMonoid::slice(int axis, std::int64_t value, ExtNat min_other) const {
  const std::int64_t b = best(axis, value);
  if (b == kNone) return false;
  if (min_other.is_inf()) return b == kInfRaw;
  return b >= min_other.value();
}

std::optional<Point> ProductMonoid::slice_witness(int axis, std::int64_t value) const {
  const std::int64_t b = best(axis, value);
  if (b == kNone) return std::nullopt;
  const ExtNat other = b >= kUnbounded ? kInf : ExtNat(b);
  return axis == 1 ? Point{value, other} : Point{other, value};
}

std::vector<Point> ProductMonoid::decompose(int axis, std::int64_t value) const {
  std::vector<Point> out;
  if (best(axis, value) == kNone) return out;
  const Table& t = table(axis);
  std::int64_t v = value;
  while (v > 0) {
    const int i = t.from[static_cast<std::size_t>(v)];
    if (i < 0) break;
    out.push_back(gens_[static_cast<std::size_t>(i)]);
    v -= gens_[static_cast<std::size_t>(i)][axis].value();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> ProductMonoid::exact_line(int axis, std::int64_t value, std::int64_t max_other) const {
  const int other = 3 - axis;
  const auto width = static_cast<std::size_t>(max_other + 1);
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(value + 1), std::vector<char>(width, 0));
  reach[0][0] = 1;
  for (std::int64_t k = 0; k <= value; ++k) {
    auto& row = reach[static_cast<std::size_t>(k)];
    for (const auto& g : gens_) {
      if (!g.is_finite() || g[axis] != 0) continue;
      const std::int64_t step = g[other].value();
      for (std::int64_t o = 0; o + step <= max_other; ++o)
        if (row[static_cast<std::size_t>(o)]) row[static_cast<std::size_t>(o + step)] = 1;
    }
    for (const auto& g : gens_) {
      if (!g.is_finite() || g[axis] == 0) continue;
      const std::int64_t k2 = k + g[axis].value();
      if (k2 > value) continue;
      const std::int64_t step = g[other].value();
      auto& dst = reach[static_cast<std::size_t>(k2)];
      for (std::int64_t o = 0; o + step <= max_other; ++o)
        if (row[static_cast<std::size_t>(o)]) dst[static_cast<std::size_t>(o + step)] = 1;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t o = 0; o <= max_other; ++o)
    if (reach[static_cast<std::size_t>(value)][static_cast<std::size_t>(o)]) out.push_back(o);
  return out;
}

bool monoid_slice(const ProductMonoid& m, int axis, std::int64_t value, ExtNat min_other) {
  return m.slice(axis, value, min_other);
}

bool semiring_contains(const ProductMonoid& m, const Point& p) {
  if (p.x.is_inf() && p.y.is_inf()) {
    bool col = false, row = false;
    for (const auto& g : m.generators()) {
      col = col || g.y.is_inf();
      row = row || g.x.is_inf();
    }
    return col && row;
  }
  if (p.y.is_inf()) return m.best(1, p.x.value()) == kInfRaw;
  if (p.x.is_inf()) return m.best(2, p.y.value()) == kInfRaw;
  return m.slice(1, p.x.value(), p.y) && m.slice(2, p.y.value(), p.x);
}

bool semiring_contains(const GeneratorSet& eta, const Point& p) {
  std::int64_t lim = 0;
  if (p.x.is_finite()) lim = std::max(lim, p.x.value());
  if (p.y.is_finite()) lim = std::max(lim, p.y.value());
  return semiring_contains(ProductMonoid(eta, lim), p);
}

namespace {

bool column_has_nonzero(const GoodSemigroup& s, std::int64_t k) {
  for (std::int64_t y = 0; y <= s.c2(); ++y)
    if (s.contains(k, y) && !(k == 0 && y == 0)) return true;
  return false;
}

bool row_has_nonzero(const GoodSemigroup& s, std::int64_t k) {
  for (std::int64_t x = 0; x <= s.c1(); ++x)
    if (s.contains(x, k) && !(k == 0 && x == 0)) return true;
  return false;
}

}  // namespace

bool is_irreducible(const GoodSemigroup& s, const Point& a) {
  if (!s.contains(a)) throw std::invalid_argument(a.str() + " is not an element");
  if (a.is_zero()) throw std::invalid_argument("(0,0) is neither reducible nor irreducible");
  if (a.x.is_inf() && a.y.is_inf()) {
    for (std::int64_t x = 0; x <= s.c1(); ++x)
      if (s.column_ray(x)) return false;
    return true;
  }
  if (a.y.is_inf()) {
    const std::int64_t n = a.x.value();
    for (std::int64_t b = 0; b < n; ++b)
      if (s.column_ray(b) && column_has_nonzero(s, n - b)) return false;
    return true;
  }
  if (a.x.is_inf()) {
    const std::int64_t n = a.y.value();
    for (std::int64_t b = 0; b < n; ++b)
      if (s.row_ray(b) && row_has_nonzero(s, n - b)) return false;
    return true;
  }
  const std::int64_t x = a.x.value(), y = a.y.value();
  for (std::int64_t bx = 0; bx <= x; ++bx)
    for (std::int64_t by = 0; by <= y; ++by) {
      if ((bx == 0 && by == 0) || (bx == x && by == y)) continue;
      if (s.contains(bx, by) && s.contains(x - bx, y - by)) return false;
    }
  return true;
}

bool is_absolute(const GoodSemigroup& s, const Point& a) {
  if (!s.contains(a)) throw std::invalid_argument(a.str() + " is not an element");
  if (!a.is_finite()) return true;
  return delta(s, a, DeltaKind::both).empty();
}

GeneratorSet irreducible_absolutes(const GoodSemigroup& s) {
  GeneratorSet out;
  const std::int64_t b1 = s.c1() + s.e1(), b2 = s.c2() + s.e2();
  for (std::int64_t x = 0; x <= b1; ++x)
    for (std::int64_t y = 0; y <= b2; ++y) {
      if ((x == 0 && y == 0) || !s.contains(x, y)) continue;
      const Point p{x, y};
      if (is_absolute(s, p) && is_irreducible(s, p)) out.push_back(p);
    }
  for (std::int64_t x = 0; x <= b1; ++x) {
    const Point p{x, kInf};
    if (s.column_ray(x) && is_irreducible(s, p)) out.push_back(p);
  }
  for (std::int64_t y = 0; y <= b2; ++y) {
    const Point p{kInf, y};
    if (s.row_ray(y) && is_irreducible(s, p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GoodSemigroup reconstruct_from_ia(const GeneratorSet& ia_in) {
  const GeneratorSet ia = make_generators(ia_in);
  std::int64_t b1 = 1, b2 = 1;
  for (const auto& g : ia) {
    if (g.x.is_finite()) b1 += g.x.value();
    if (g.y.is_finite()) b2 += g.y.value();
  }
  const ProductMonoid m(ia, std::max(b1, b2) + 1);
  auto member = [&](std::int64_t x, std::int64_t y) { return semiring_contains(m, Point{x, y}); };
  GoodSemigroup s = from_membership(member, Point{b1, b2});
  const GeneratorSet got = irreducible_absolutes(s);
  if (got != ia) {
    ValidationReport rep;
    std::vector<Point> diff;
    std::set_symmetric_difference(got.begin(), got.end(), ia.begin(), ia.end(), std::back_inserter(diff));
    rep.add("irreducible-absolutes-mismatch", diff);
    throw InvalidSemigroup(rep);
  }
  return s;
}

GammaView gamma_view(const GoodSemigroup& s) {
  GammaView v{s, {}, {}, {}, {}, {}};
  v.small = s.small();
  for (std::int64_t a = s.c1() + 1; a <= s.c1() + s.e1(); ++a)
    if (s.column_ray(a)) v.beyond_rays.push_back({a, kInf});
  for (std::int64_t b = s.c2() + 1; b <= s.c2() + s.e2(); ++b)
    if (s.row_ray(b)) v.beyond_rays.push_back({kInf, b});
  const std::int64_t b1 = s.c1() + s.e1(), b2 = s.c2() + s.e2();
  for (std::int64_t x = 0; x <= b1; ++x)
    for (std::int64_t y = 0; y <= b2; ++y) {
      if ((x == 0 && y == 0) || !s.contains(x, y)) continue;
      const Point p{x, y};
      if (is_irreducible(s, p)) v.irreducibles.push_back(p);
      if (is_absolute(s, p)) v.absolutes.push_back(p);
    }
  v.ia = irreducible_absolutes(s);
  std::sort(v.beyond_rays.begin(), v.beyond_rays.end());
  return v;
}

}  // namespace goodsemi
