#include "goodsemi/core_model.hpp"

#include <algorithm>
#include <sstream>

namespace goodsemi {

std::string ExtNat::str() const { return is_inf() ? "inf" : std::to_string(v_); }

std::string Point::str() const { return "(" + x.str() + "," + y.str() + ")"; }

std::string to_string(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += pts[i].str();
  }
  return out;
}

void ValidationReport::add(std::string axiom, std::vector<Point> witnesses) {
  ok = false;
  violations.push_back({std::move(axiom), std::move(witnesses)});
}

std::string ValidationReport::str() const {
  if (ok) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].axiom;
    if (!violations[i].witnesses.empty()) os << " at " << to_string(violations[i].witnesses);
  }
  return os.str();
}

InvalidSemigroup::InvalidSemigroup(ValidationReport report)
    : std::runtime_error("not a good semigroup: " + report.str()), report_(std::move(report)) {}

bool SetDescription::contains(const Point& p) const {
  if (!p.is_finite()) return false;
  for (const auto& t : column_tails)
    if (p.x == t.x && p.y >= t.y) return true;
  for (const auto& t : row_tails)
    if (p.y == t.y && p.x >= t.x) return true;
  return std::binary_search(points.begin(), points.end(), p);
}

void SetDescription::normalize() {
  auto merge = [](std::vector<Point>& tails, int axis) {
    std::sort(tails.begin(), tails.end(), [axis](const Point& a, const Point& b) {
      return std::pair(a[3 - axis], a[axis]) < std::pair(b[3 - axis], b[axis]);
    });
    std::vector<Point> out;
    for (const auto& t : tails)
      if (out.empty() || out.back()[3 - axis] != t[3 - axis]) out.push_back(t);
    tails = std::move(out);
  };
  merge(column_tails, 2);
  merge(row_tails, 1);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::erase_if(points, [&](const Point& p) {
    for (const auto& t : column_tails)
      if (p.x == t.x && p.y >= t.y) return true;
    for (const auto& t : row_tails)
      if (p.y == t.y && p.x >= t.x) return true;
    return false;
  });
}

namespace {

struct Grid {
  std::int64_t c1, c2;
  std::vector<std::uint8_t> cells;

  Grid(std::int64_t a, std::int64_t b)
      : c1(a), c2(b), cells(static_cast<std::size_t>((a + 1) * (b + 1)), 0) {}

  bool at(std::int64_t x, std::int64_t y) const {
    if (x < 0 || y < 0) return false;
    x = std::min(x, c1);
    y = std::min(y, c2);
    return cells[static_cast<std::size_t>(x * (c2 + 1) + y)] != 0;
  }
  void set(std::int64_t x, std::int64_t y) { cells[static_cast<std::size_t>(x * (c2 + 1) + y)] = 1; }
};

ValidationReport check(const std::vector<Point>& small, const Point& c, Grid* out) {
  ValidationReport rep;
  if (!c.is_finite() || c.x < 0 || c.y < 0) {
    rep.add("conductor-range", {c});
    return rep;
  }
  const std::int64_t c1 = c.x.value(), c2 = c.y.value();
  Grid g(c1, c2);
  for (const auto& p : small) {
    if (!p.is_finite() || p.x < 0 || p.y < 0 || !leq(p, c)) {
      rep.add("range", {p});
      continue;
    }
    g.set(p.x.value(), p.y.value());
  }
  if (!rep.ok) return rep;
  if (!g.at(0, 0)) rep.add("identity", {Point{0, 0}});
  if (!g.at(c1, c2)) rep.add("conductor-member", {c});

  std::vector<Point> pts;
  for (std::int64_t x = 0; x <= c1; ++x)
    for (std::int64_t y = 0; y <= c2; ++y)
      if (g.at(x, y)) pts.push_back({x, y});

  for (const auto& p : pts)
    if (!p.is_zero() && (p.x == 0 || p.y == 0)) {
      rep.add("locality", {p});
      break;
    }

  [&] {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Point m = pmin(pts[i], pts[j]);
        if (!g.at(m.x.value(), m.y.value())) {
          rep.add("G1", {pts[i], pts[j]});
          return;
        }
      }
  }();

  [&] {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j) {
        Point s = psum(pts[i], pts[j]);
        if (!g.at(s.x.value(), s.y.value())) {
          rep.add("sum", {pts[i], pts[j]});
          return;
        }
      }
  }();

  if (c1 > 0 && g.at(c1 - 1, c2)) rep.add("G2-minimal", {c, Point{c1 - 1, c2}});
  if (c2 > 0 && g.at(c1, c2 - 1)) rep.add("G2-minimal", {c, Point{c1, c2 - 1}});

  // G3 reduces to: below any element of a column that is not its top, the row
  // continues to the right (and symmetrically for rows).
  [&] {
    for (std::int64_t x = 0; x < c1; ++x) {
      // the tail above c2 counts as an element above (x,c2)
      std::int64_t above = g.at(x, c2) ? c2 + 1 : -1;
      for (std::int64_t y = c2; y >= 0; --y) {
        if (!g.at(x, y)) continue;
        if (above >= 0) {
          bool ok = false;
          for (std::int64_t x2 = x + 1; x2 <= c1 && !ok; ++x2) ok = g.at(x2, y);
          if (!ok) {
            rep.add("G3", {Point{x, y}, Point{x, above}});
            return;
          }
        }
        above = y;
      }
    }
    for (std::int64_t y = 0; y < c2; ++y) {
      std::int64_t right = g.at(c1, y) ? c1 + 1 : -1;
      for (std::int64_t x = c1; x >= 0; --x) {
        if (!g.at(x, y)) continue;
        if (right >= 0) {
          bool ok = false;
          for (std::int64_t y2 = y + 1; y2 <= c2 && !ok; ++y2) ok = g.at(x, y2);
          if (!ok) {
            rep.add("G3", {Point{x, y}, Point{right, y}});
            return;
          }
        }
        right = x;
      }
    }
  }();

  if (out) *out = std::move(g);
  return rep;
}

}  // namespace

ValidationReport validate(const std::vector<Point>& small, const Point& conductor) {
  return check(small, conductor, nullptr);
}

GoodSemigroup from_small(const std::vector<Point>& small, const Point& conductor) {
  Grid g(0, 0);
  ValidationReport rep = check(small, conductor, &g);
  if (!rep.ok) throw InvalidSemigroup(std::move(rep));
  GoodSemigroup s;
  s.c1_ = g.c1;
  s.c2_ = g.c2;
  s.grid_ = std::move(g.cells);
  for (std::int64_t x = 0; x <= s.c1_; ++x)
    for (std::int64_t y = 0; y <= s.c2_; ++y)
      if (s.contains(x, y)) s.small_.push_back({x, y});
  if (s.c1_ == 0 && s.c2_ == 0) {
    s.e_ = {1, 1};
  } else {
    ExtNat ex = kInf, ey = kInf;
    for (const auto& p : s.small_)
      if (!p.is_zero()) {
        ex = min(ex, p.x);
        ey = min(ey, p.y);
      }
    s.e_ = {ex, ey};
  }
  return s;
}

GoodSemigroup from_membership(const std::function<bool(std::int64_t, std::int64_t)>& member,
                              const Point& bound) {
  const std::int64_t b1 = bound.x.value(), b2 = bound.y.value();
  ValidationReport rep;
  if (!member(b1, b2)) {
    rep.add("G2-bound", {bound});
    throw InvalidSemigroup(rep);
  }
  std::int64_t d1 = b1, d2 = b2;
  while (d1 > 0 && member(d1 - 1, b2)) --d1;
  while (d2 > 0 && member(b1, d2 - 1)) --d2;
  for (std::int64_t x = d1; x <= b1; ++x)
    for (std::int64_t y = d2; y <= b2; ++y)
      if (!member(x, y)) {
        rep.add("G2", {Point{x, y}});
        throw InvalidSemigroup(rep);
      }
  std::vector<Point> small;
  for (std::int64_t x = 0; x <= d1; ++x)
    for (std::int64_t y = 0; y <= d2; ++y)
      if (member(x, y)) small.push_back({x, y});
  return from_small(small, {d1, d2});
}

bool GoodSemigroup::contains(const Point& p) const {
  if (p.x.is_inf() && p.y.is_inf()) return true;
  if (p.x.is_inf()) return row_ray(p.y.value());
  if (p.y.is_inf()) return column_ray(p.x.value());
  return contains(p.x.value(), p.y.value());
}

std::int64_t GoodSemigroup::column_tail_start(std::int64_t a) const {
  std::int64_t y = c2_;
  while (y > 0 && contains(a, y - 1)) --y;
  return y;
}

std::int64_t GoodSemigroup::row_tail_start(std::int64_t b) const {
  std::int64_t x = c1_;
  while (x > 0 && contains(x - 1, b)) --x;
  return x;
}

bool contains(const GoodSemigroup& s, const Point& p) { return s.contains(p); }

namespace {

void column_range(const GoodSemigroup& s, std::int64_t x, std::int64_t lo, ExtNat hi, SetDescription& d) {
  // y in [lo, hi) ∩ column x; hi infinite means the column to the top
  const std::int64_t limit = hi.is_inf() ? std::max(lo, s.c2()) : hi.value();
  for (std::int64_t y = lo; y < limit; ++y)
    if (s.contains(x, y)) d.points.push_back({x, y});
  if (hi.is_inf() && s.column_ray(x)) d.column_tails.push_back(Point{x, limit});
}

void row_range(const GoodSemigroup& s, std::int64_t y, std::int64_t lo, ExtNat hi, SetDescription& d) {
  const std::int64_t limit = hi.is_inf() ? std::max(lo, s.c1()) : hi.value();
  for (std::int64_t x = lo; x < limit; ++x)
    if (s.contains(x, y)) d.points.push_back({x, y});
  if (hi.is_inf() && s.row_ray(y)) d.row_tails.push_back(Point{limit, y});
}

}  // namespace

SetDescription delta(const GoodSemigroup& s, const Point& p, DeltaKind kind) {
  SetDescription d;
  if (p.x.is_inf() && p.y.is_inf()) return d;
  if (p.y.is_inf()) {
    if (kind == DeltaKind::below) column_range(s, p.x.value(), 0, kInf, d);
    return d;
  }
  if (p.x.is_inf()) {
    if (kind == DeltaKind::left) row_range(s, p.y.value(), 0, kInf, d);
    return d;
  }
  const std::int64_t x = p.x.value(), y = p.y.value();
  switch (kind) {
    case DeltaKind::up:
      column_range(s, x, y + 1, kInf, d);
      break;
    case DeltaKind::right:
      row_range(s, y, x + 1, kInf, d);
      break;
    case DeltaKind::both:
      column_range(s, x, y + 1, kInf, d);
      row_range(s, y, x + 1, kInf, d);
      break;
    case DeltaKind::below:
      column_range(s, x, 0, y, d);
      break;
    case DeltaKind::left:
      row_range(s, y, 0, x, d);
      break;
  }
  std::sort(d.points.begin(), d.points.end());
  return d;
}

std::optional<ExtNat> delta_max_below(const GoodSemigroup& s, const Point& p) {
  SetDescription d = delta(s, p, DeltaKind::below);
  if (!d.column_tails.empty()) return kInf;
  if (d.points.empty()) return std::nullopt;
  return d.points.back().y;
}

std::optional<ExtNat> delta_max_left(const GoodSemigroup& s, const Point& p) {
  SetDescription d = delta(s, p, DeltaKind::left);
  if (!d.row_tails.empty()) return kInf;
  if (d.points.empty()) return std::nullopt;
  ExtNat m = 0;
  for (const auto& q : d.points) m = max(m, q.x);
  return m;
}

}  // namespace goodsemi
