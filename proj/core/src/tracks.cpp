#include "goodsemi/tracks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace goodsemi {

IrreducibilityOracle::IrreducibilityOracle(const GoodSemigroup& s)
    : s_(s), w_(2 * s.c1() + 1), h_(2 * s.c2() + 1) {
  col_nonempty_.assign(static_cast<std::size_t>(s.c1() + 1), 0);
  row_nonempty_.assign(static_cast<std::size_t>(s.c2() + 1), 0);
  for (const auto& p : s.small())
    if (!p.is_zero()) {
      col_nonempty_[static_cast<std::size_t>(p.x.value())] = 1;
      row_nonempty_[static_cast<std::size_t>(p.y.value())] = 1;
    }
  memo_.assign(static_cast<std::size_t>(w_ * h_), -1);
}

bool IrreducibilityOracle::brute(std::int64_t x, std::int64_t y) const {
  for (std::int64_t bx = 0; bx <= x; ++bx)
    for (std::int64_t by = 0; by <= y; ++by) {
      if ((bx == 0 && by == 0) || (bx == x && by == y)) continue;
      if (s_.contains(bx, by) && s_.contains(x - bx, y - by)) return false;
    }
  return true;
}

bool IrreducibilityOracle::column_tail_irreducible(std::int64_t x) const {
  const auto nonempty = [&](std::int64_t k) { return col_nonempty_[static_cast<std::size_t>(std::min(k, s_.c1()))] != 0; };
  for (std::int64_t b = 0; b <= x; ++b)
    if (s_.column_ray(b) && nonempty(x - b)) return false;
  return true;
}

bool IrreducibilityOracle::row_tail_irreducible(std::int64_t y) const {
  const auto nonempty = [&](std::int64_t k) { return row_nonempty_[static_cast<std::size_t>(std::min(k, s_.c2()))] != 0; };
  for (std::int64_t b = 0; b <= y; ++b)
    if (s_.row_ray(b) && nonempty(y - b)) return false;
  return true;
}

bool IrreducibilityOracle::irreducible(std::int64_t x, std::int64_t y) const {
  if (y >= h_) return column_tail_irreducible(x);
  if (x >= w_) return row_tail_irreducible(y);
  auto& m = memo_[static_cast<std::size_t>(x * h_ + y)];
  if (m < 0) m = brute(x, y) ? 1 : 0;
  return m != 0;
}

bool IrreducibilityOracle::all_irreducible(const SetDescription& d) const {
  for (const auto& p : d.points)
    if (!irreducible(p.x.value(), p.y.value())) return false;
  for (const auto& t : d.column_tails) {
    const std::int64_t x = t.x.value();
    for (std::int64_t y = t.y.value(); y < h_; ++y)
      if (!irreducible(x, y)) return false;
    if (!column_tail_irreducible(x)) return false;
  }
  for (const auto& t : d.row_tails) {
    const std::int64_t y = t.y.value();
    for (std::int64_t x = t.x.value(); x < w_; ++x)
      if (!irreducible(x, y)) return false;
    if (!row_tail_irreducible(y)) return false;
  }
  return true;
}

namespace {

void append(SetDescription& into, const SetDescription& d) {
  into.points.insert(into.points.end(), d.points.begin(), d.points.end());
  into.column_tails.insert(into.column_tails.end(), d.column_tails.begin(), d.column_tails.end());
  into.row_tails.insert(into.row_tails.end(), d.row_tails.begin(), d.row_tails.end());
}

struct TrackContext {
  const GoodSemigroup& s;
  GeneratorSet ia;
  IrreducibilityOracle oracle;

  explicit TrackContext(const GoodSemigroup& sg) : s(sg), ia(irreducible_absolutes(sg)), oracle(sg) {}

  bool clean(const Point& p, DeltaKind kind) const { return oracle.all_irreducible(delta(s, p, kind)); }
  bool can_start(const Point& a) const { return clean(a, DeltaKind::left); }
  bool can_end(const Point& a) const { return clean(a, DeltaKind::below); }
  bool piece(const Point& a, const Point& b) const {
    if (comparable(a, b)) return false;
    return clean(pmin(a, b), DeltaKind::both);
  }

  Track build(const std::vector<Point>& spine) const {
    Track t;
    t.spine = spine;
    const Point& first = spine.front();
    const Point& last = spine.back();
    if (first.is_finite()) t.points.points.push_back(first);
    if (last.is_finite()) t.points.points.push_back(last);
    append(t.points, delta(s, first, DeltaKind::left));
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) append(t.points, delta(s, pmin(spine[i], spine[i + 1]), DeltaKind::both));
    append(t.points, delta(s, last, DeltaKind::below));
    t.points.normalize();
    for (const auto& a : ia) {
      const bool hit = a.is_finite() ? t.points.contains(a)
                       : a.y.is_inf()
                           ? std::any_of(t.points.column_tails.begin(), t.points.column_tails.end(),
                                         [&](const Point& c) { return c.x == a.x; })
                           : std::any_of(t.points.row_tails.begin(), t.points.row_tails.end(),
                                         [&](const Point& r) { return r.y == a.y; });
      if (hit || std::find(spine.begin(), spine.end(), a) != spine.end()) t.edge.push_back(a);
    }
    return t;
  }
};

void require_ia(const TrackContext& ctx, const Point& a) {
  if (!std::binary_search(ctx.ia.begin(), ctx.ia.end(), a))
    throw std::invalid_argument(a.str() + " is not an irreducible absolute element");
}

}  // namespace

bool is_piece_of_track(const GoodSemigroup& s, const Point& a, const Point& b) {
  const TrackContext ctx(s);
  require_ia(ctx, a);
  require_ia(ctx, b);
  return ctx.piece(a, b);
}

Track make_track(const GoodSemigroup& s, const std::vector<Point>& spine) {
  const TrackContext ctx(s);
  if (spine.empty()) throw std::invalid_argument("empty spine");
  for (const auto& a : spine) require_ia(ctx, a);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
    if (!(spine[i].x < spine[i + 1].x)) throw std::invalid_argument("spine first coordinates must increase");
    if (!ctx.piece(spine[i], spine[i + 1]))
      throw std::invalid_argument(spine[i].str() + " and " + spine[i + 1].str() + " are not joined by a piece of track");
  }
  if (!ctx.can_start(spine.front())) throw std::invalid_argument("row left of " + spine.front().str() + " has reducible elements");
  if (!ctx.can_end(spine.back())) throw std::invalid_argument("column below " + spine.back().str() + " has reducible elements");
  return ctx.build(spine);
}

std::vector<Track> enumerate_tracks(const GoodSemigroup& s) {
  const TrackContext ctx(s);
  const auto& v = ctx.ia;  // sorted by first coordinate, infinity last
  const std::size_t n = v.size();
  std::vector<char> start(n), end(n);
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    start[i] = ctx.can_start(v[i]);
    end[i] = ctx.can_end(v[i]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (v[i].x < v[j].x && ctx.piece(v[i], v[j])) next[i].push_back(j);
  }
  std::vector<Track> out;
  std::vector<Point> spine;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    spine.push_back(v[i]);
    if (end[i]) out.push_back(ctx.build(spine));
    for (std::size_t j : next[i]) self(self, j);
    spine.pop_back();
  };
  for (std::size_t i = 0; i < n; ++i)
    if (start[i]) dfs(dfs, i);
  std::sort(out.begin(), out.end(), [](const Track& a, const Track& b) { return a.spine < b.spine; });
  return out;
}

GoodSemigroup remove_track(const GoodSemigroup& s, const Track& t) {
  if (s.conductor().is_zero()) throw std::invalid_argument("track removal needs a local semigroup");
  const Point bound{s.c1() + s.e1() + 1, s.c2() + s.e2() + 1};
  auto member = [&](std::int64_t x, std::int64_t y) { return s.contains(x, y) && !t.points.contains({x, y}); };
  try {
    return from_membership(member, bound);
  } catch (const InvalidSemigroup& e) {
    throw std::logic_error(std::string("track removal produced an invalid semigroup: ") + e.what());
  }
}

std::vector<GeneratorSet> minimal_edges(std::vector<GeneratorSet> edges) {
  for (auto& e : edges) e = make_generators(e);
  std::sort(edges.begin(), edges.end(), [](const GeneratorSet& a, const GeneratorSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<GeneratorSet> out;
  for (const auto& e : edges) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const GeneratorSet& f) {
      return std::includes(e.begin(), e.end(), f.begin(), f.end());
    });
    if (!covered) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GeneratorSet> minimal_transversals(const std::vector<GeneratorSet>& edges_in) {
  const auto edges = minimal_edges(edges_in);
  std::set<GeneratorSet> found;
  if (std::any_of(edges.begin(), edges.end(), [](const GeneratorSet& e) { return e.empty(); })) return {};
  GeneratorSet h;
  auto hits = [](const GeneratorSet& e, const Point& p) { return std::binary_search(e.begin(), e.end(), p); };
  // every member of h must keep an edge it alone hits
  auto all_critical = [&] {
    for (const auto& u : h) {
      bool crit = false;
      for (const auto& e : edges) {
        if (!hits(e, u)) continue;
        bool alone = true;
        for (const auto& w : h)
          if (w != u && hits(e, w)) {
            alone = false;
            break;
          }
        if (alone) {
          crit = true;
          break;
        }
      }
      if (!crit) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    const GeneratorSet* open = nullptr;
    for (const auto& e : edges)
      if (std::none_of(e.begin(), e.end(), [&](const Point& p) { return std::find(h.begin(), h.end(), p) != h.end(); })) {
        open = &e;
        break;
      }
    if (!open) {
      GeneratorSet m = h;
      std::sort(m.begin(), m.end());
      found.insert(std::move(m));
      return;
    }
    for (const auto& v : *open) {
      h.push_back(v);
      if (all_critical()) self(self);
      h.pop_back();
    }
  };
  rec(rec);
  std::vector<GeneratorSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const GeneratorSet& a, const GeneratorSet& b) { return a.size() < b.size(); });
  return out;
}

HittingFamily hitting_family(const std::vector<Track>& tracks) {
  std::vector<GeneratorSet> edges;
  for (const auto& t : tracks) edges.push_back(t.edge);
  HittingFamily f;
  f.edges = minimal_edges(edges);
  f.transversals = minimal_transversals(f.edges);
  return f;
}

HittingFamily minimal_hitting_sets(const GoodSemigroup& s) { return hitting_family(enumerate_tracks(s)); }

std::size_t bedim(const GoodSemigroup& s) {
  const auto f = minimal_hitting_sets(s);
  return f.transversals.empty() ? 0 : f.transversals.front().size();
}

bool is_hitting_set(const std::vector<Track>& tracks, const GeneratorSet& m) {
  for (const auto& t : tracks) {
    const bool hit = std::any_of(m.begin(), m.end(), [&](const Point& p) {
      return std::binary_search(t.edge.begin(), t.edge.end(), p);
    });
    if (!hit) return false;
  }
  return true;
}

}  // namespace goodsemi
