#include "goodsemi/apery.hpp"

#include <algorithm>
#include <stdexcept>

#include "goodsemi/minimality.hpp"

namespace goodsemi {

bool in_apery(const GoodSemigroup& s, std::int64_t x, std::int64_t y) {
  return s.contains(x, y) && !s.contains(x - s.e1(), y - s.e2());
}

bool in_apery_bar(const GoodSemigroup& s, std::int64_t x, std::int64_t y) {
  if (x == s.e1() && y == s.e2()) return true;
  if (x == 0 && y == 0) return false;
  return in_apery(s, x, y);
}

std::vector<Point> apery_set(const GoodSemigroup& s) {
  const std::int64_t b1 = s.c1() + s.e1(), b2 = s.c2() + s.e2();
  std::vector<Point> out;
  for (std::int64_t x = 0; x < b1; ++x)
    for (std::int64_t y = 0; y < b2; ++y)
      if (in_apery(s, x, y)) out.push_back({x, y});
  for (std::int64_t x = 0; x < b1; ++x)
    if (in_apery(s, x, b2)) out.push_back({x, kInf});
  for (std::int64_t y = 0; y < b2; ++y)
    if (in_apery(s, b1, y)) out.push_back({kInf, y});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool lt(ExtNat a, ExtNat b) { return a.is_inf() ? b.is_inf() : a < b; }

}  // namespace

bool apery_ll(const Point& a, const Point& b) { return lt(a.x, b.x) && lt(a.y, b.y); }

Point AperyLevels::compact(const Point& p) const {
  Point q = p;
  if (q.x >= box.x) q.x = kInf;
  if (q.y >= box.y) q.y = kInf;
  return q;
}

std::size_t AperyLevels::level_of(const Point& p) const {
  const Point q = compact(p);
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (std::binary_search(levels[i].begin(), levels[i].end(), q)) return i + 1;
  return 0;
}

AperyLevels apery_levels(const GoodSemigroup& s) {
  AperyLevels out;
  out.box = {s.c1() + s.e1(), s.c2() + s.e2()};
  out.apery = apery_set(s);
  std::vector<Point> rest = out.apery;
  std::vector<std::vector<Point>> peeled;
  while (!rest.empty()) {
    std::vector<Point> b;
    for (const auto& a : rest)
      if (std::none_of(rest.begin(), rest.end(), [&](const Point& q) { return q != a && apery_ll(a, q); })) b.push_back(a);
    std::vector<Point> d;
    for (const auto& a : b) {
      bool split = false;
      for (std::size_t i = 0; i < b.size() && !split; ++i)
        for (std::size_t j = i + 1; j < b.size() && !split; ++j)
          split = b[i] != a && b[j] != a && pmin(b[i], b[j]) == a;
      if (!split) d.push_back(a);
    }
    if (d.empty()) throw std::logic_error("Apery level peeling stalled");
    std::erase_if(rest, [&](const Point& p) { return std::binary_search(d.begin(), d.end(), p); });
    peeled.push_back(std::move(d));
  }
  out.levels.assign(peeled.rbegin(), peeled.rend());
  return out;
}

bool is_arf(const GoodSemigroup& s) {
  // coordinates at or above the conductor behave alike, so S ∩ [0,c] suffices
  const auto& pts = s.small();
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (!leq(a, b)) continue;
      for (const auto& g : pts) {
        if (!leq(a, g)) continue;
        if (!s.contains(b.x.value() + g.x.value() - a.x.value(), b.y.value() + g.y.value() - a.y.value())) return false;
      }
    }
  return true;
}

bool m_plus_m_equals_e_plus_m(const GoodSemigroup& s) {
  // Both sets contain every point >= c+e, and membership in a row (column) is
  // constant once the first (second) coordinate passes 2c+2.
  const std::int64_t b1 = std::max(2 * s.c1() + 2, s.c1() + s.e1()) + 1;
  const std::int64_t b2 = std::max(2 * s.c2() + 2, s.c2() + s.e2()) + 1;
  auto in_m = [&](std::int64_t x, std::int64_t y) { return !(x == 0 && y == 0) && s.contains(x, y); };
  for (std::int64_t x = 0; x <= b1; ++x)
    for (std::int64_t y = 0; y <= b2; ++y) {
      const bool em = in_m(x - s.e1(), y - s.e2());
      bool mm = false;
      for (std::int64_t mx = 0; mx <= x && !mm; ++mx)
        for (std::int64_t my = 0; my <= y && !mm; ++my) mm = in_m(mx, my) && in_m(x - mx, y - my);
      if (em != mm) return false;
    }
  return true;
}

ConjectureCheck conjecture_m_plus_m(const GoodSemigroup& s, std::uint64_t budget) {
  ConjectureCheck r{};
  r.holds_mm = m_plus_m_equals_e_plus_m(s);
  r.edim = edim(s, budget).edim;
  r.is_med = r.edim == static_cast<std::size_t>(s.e1() + s.e2());
  return r;
}

}  // namespace goodsemi
