#include "goodsemi/minimality.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "goodsemi/reducibility.hpp"
#include "goodsemi/tracks.hpp"

namespace goodsemi {

namespace {

constexpr std::uint64_t kDefaultBudget = 5'000'000;

std::int64_t numerical_conductor(const std::vector<std::int64_t>& gens) {
  const std::int64_t small = *std::min_element(gens.begin(), gens.end());
  std::vector<char> reach{1};
  std::int64_t run = 0;
  for (std::int64_t v = 1;; ++v) {
    char r = 0;
    for (std::int64_t g : gens)
      if (g <= v && reach[static_cast<std::size_t>(v - g)]) r = 1;
    reach.push_back(r);
    run = r ? run + 1 : 0;
    if (run == small) return v - small + 1;
  }
}

// least other coordinate over products whose coordinate `axis` equals v
std::vector<std::int64_t> min_other(const GeneratorSet& g, int axis, std::int64_t limit) {
  constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(static_cast<std::size_t>(limit + 1), none);
  best[0] = 0;
  for (std::int64_t v = 1; v <= limit; ++v)
    for (const auto& p : g) {
      const std::int64_t u = p[axis].value();
      if (u > v || best[static_cast<std::size_t>(v - u)] == none) continue;
      best[static_cast<std::size_t>(v)] =
          std::min(best[static_cast<std::size_t>(v)], best[static_cast<std::size_t>(v - u)] + p[3 - axis].value());
    }
  return best;
}

}  // namespace

std::uint64_t resolve_budget(std::uint64_t budget) {
  if (budget) return budget;
  if (const char* env = std::getenv("GOODSEMI_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

BoundCertificate conductor_bound(const GeneratorSet& eta) {
  GeneratorSet g;
  for (const auto& p : eta)
    if (p.is_finite()) g.push_back(p);
  g = make_generators(g);
  if (g.empty()) throw HypothesisError(1, "no finite generators");
  for (const auto& p : g)
    if (p.x == 0 || p.y == 0) throw std::invalid_argument("generator " + p.str() + " has a zero coordinate");
  std::vector<std::int64_t> xs, ys;
  for (const auto& p : g) {
    xs.push_back(p.x.value());
    ys.push_back(p.y.value());
  }
  const auto gcd_all = [](const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0}, [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
  };
  if (gcd_all(xs) != 1) throw HypothesisError(1, "first coordinates have gcd " + std::to_string(gcd_all(xs)));
  if (gcd_all(ys) != 1) throw HypothesisError(1, "second coordinates have gcd " + std::to_string(gcd_all(ys)));
  const auto l = std::find_if(g.begin(), g.end(), [](const Point& p) { return p.x != p.y; });
  if (l == g.end()) throw HypothesisError(2, "every generator has equal coordinates");
  const std::int64_t a1 = l->x.value(), a2 = l->y.value();
  const auto m = std::find_if(g.begin(), g.end(), [&](const Point& p) { return p.y.value() * a1 != a2 * p.x.value(); });
  if (m == g.end()) throw std::logic_error("all generators proportional despite gcd 1");
  const std::int64_t b1 = m->x.value(), b2 = m->y.value();

  BoundCertificate cert{};
  Point pa{a1 * b1, a2 * b1}, pb{a1 * b1, a1 * b2};
  if (pb.y < pa.y) std::swap(pa, pb);
  cert.alpha[0] = pa;
  cert.beta[0] = pb;
  pa = {a1 * b2, a2 * b2};
  pb = {b1 * a2, b2 * a2};
  if (pb.x < pa.x) std::swap(pa, pb);
  cert.alpha[1] = pa;
  cert.beta[1] = pb;

  for (int i = 0; i < 2; ++i) {
    const int axis = i + 1;
    const std::int64_t ci = numerical_conductor(axis == 1 ? xs : ys);
    const std::int64_t mi = cert.alpha[i][axis].value();
    const auto low = min_other(g, axis, ci + mi);
    std::int64_t lam = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t h = 0; h < mi; ++h) lam = std::min(lam, low[static_cast<std::size_t>(ci + h)]);
    cert.numerical_conductor[i] = ci;
    cert.lambda[i] = axis == 1 ? Point{ci, lam} : Point{lam, ci};
    const std::int64_t other = lam + cert.alpha[i][3 - axis].value();
    cert.sigma[i] = axis == 1 ? Point{ci + mi, other} : Point{other, ci + mi};
  }
  cert.bound = psum(cert.sigma[0], cert.sigma[1]);
  return cert;
}

Point between_box(const GoodSemigroup& s) { return {s.c1() + 2 * s.e1(), s.c2() + 2 * s.e2()}; }

namespace {

/**
 * Search over clamped grids [0,B]: cell (B1,y) stands for every (x,y) with
 * x >= B1, and likewise for the top row. Each cell is in, out or open.
 */
class GridSearch {
 public:
  enum : std::int8_t { kOpen = 0, kIn = 1, kOut = 2 };

  GridSearch(Point box, std::uint64_t budget)
      : b1_(box.x.value()), b2_(box.y.value()), h_(b2_ + 1), budget_(budget),
        st_(static_cast<std::size_t>((b1_ + 1) * h_), kOpen) {}

  std::int64_t b1() const { return b1_; }
  std::int64_t b2() const { return b2_; }
  int cell(std::int64_t x, std::int64_t y) const {
    return static_cast<int>(std::min(x, b1_) * h_ + std::min(y, b2_));
  }
  std::int8_t state(std::int64_t x, std::int64_t y) const { return st_[static_cast<std::size_t>(cell(x, y))]; }
  std::uint64_t nodes() const { return nodes_; }

  // initial constraints; false on conflict
  bool force(std::int64_t x, std::int64_t y, std::int8_t v) { return set(cell(x, y), v); }

  // strictness: at least one of these cells must end up out
  void require_some_out(std::vector<int> cells) { must_drop_ = std::move(cells); }
  // prune when the in cells cover one of these sets
  void avoid_supersets_of(const std::vector<std::vector<int>>* sets) { avoid_ = sets; }

  // Depth-first search; `leaf` receives each complete grid and returns false to stop.
  void run(const std::function<bool(const GridSearch&)>& leaf) {
    leaf_ = &leaf;
    stop_ = false;
    if (propagate()) dfs(0);
  }

  std::vector<int> in_cells() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < st_.size(); ++i)
      if (st_[i] == kIn) out.push_back(static_cast<int>(i));
    return out;
  }

  GoodSemigroup build() const {
    auto member = [&](std::int64_t x, std::int64_t y) { return state(x, y) == kIn; };
    return from_membership(member, {b1_, b2_});
  }

 private:
  std::int64_t x_of(int c) const { return c / h_; }
  std::int64_t y_of(int c) const { return c % h_; }

  bool set(int c, std::int8_t v) {
    auto& s = st_[static_cast<std::size_t>(c)];
    if (s == v) return true;
    if (s != kOpen) return false;
    s = v;
    trail_.push_back(c);
    if (v == kIn) ins_.push_back(c);
    queue_.push_back(v == kIn ? c : ~c);
    return true;
  }

  void undo(std::size_t trail_mark, std::size_t ins_mark) {
    while (trail_.size() > trail_mark) {
      st_[static_cast<std::size_t>(trail_.back())] = kOpen;
      trail_.pop_back();
    }
    ins_.resize(ins_mark);
    queue_.clear();
  }

  bool set_out(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
    for (std::int64_t x = x0; x <= x1; ++x)
      for (std::int64_t y = y0; y <= y1; ++y)
        if (!set(cell(x, y), kOut)) return false;
    return true;
  }

  // cells b with clamp(a + b) == o (coordinate-wise range), empty when lo > hi
  std::pair<std::int64_t, std::int64_t> sum_range(std::int64_t a, std::int64_t o, std::int64_t bound) const {
    if (o < bound) return {o - a, o - a};
    return {std::max<std::int64_t>(0, bound - a), bound};
  }
  // cells b with min(a, b) == o
  static std::pair<std::int64_t, std::int64_t> min_range(std::int64_t a, std::int64_t o, std::int64_t bound) {
    if (o < a) return {o, o};
    if (o == a) return {o, bound};
    return {1, 0};
  }

  // + and min closure in both directions: in cells force their sums and
  // mins in, and a cell whose sum or min with an in cell is out is out
  bool drain() {
    while (!queue_.empty()) {
      const int ev = queue_.back();
      queue_.pop_back();
      if (ev >= 0) {
        const std::int64_t ax = x_of(ev), ay = y_of(ev);
        for (std::size_t i = 0; i < ins_.size(); ++i) {
          const int b = ins_[i];
          const std::int64_t bx = x_of(b), by = y_of(b);
          if (!set(cell(ax + bx, ay + by), kIn)) return false;
          if (!set(cell(std::min(ax, bx), std::min(ay, by)), kIn)) return false;
        }
        for (int b = 0; b < static_cast<int>(st_.size()); ++b) {
          if (st_[static_cast<std::size_t>(b)] != kOpen) continue;
          const std::int64_t bx = x_of(b), by = y_of(b);
          if (st_[static_cast<std::size_t>(cell(ax + bx, ay + by))] == kOut ||
              st_[static_cast<std::size_t>(cell(std::min(ax, bx), std::min(ay, by)))] == kOut)
            if (!set(b, kOut)) return false;
        }
      } else {
        const int o = ~ev;
        const std::int64_t ox = x_of(o), oy = y_of(o);
        for (std::size_t i = 0; i < ins_.size(); ++i) {
          const int a = ins_[i];
          const std::int64_t ax = x_of(a), ay = y_of(a);
          if (ax <= ox && ay <= oy) {
            const auto [x0, x1] = sum_range(ax, ox, b1_);
            const auto [y0, y1] = sum_range(ay, oy, b2_);
            if (!set_out(x0, x1, y0, y1)) return false;
          }
          const auto [x0, x1] = min_range(ax, ox, b1_);
          const auto [y0, y1] = min_range(ay, oy, b2_);
          if (!set_out(x0, x1, y0, y1)) return false;
        }
      }
    }
    return true;
  }

  // G3 demands with unit propagation; returns false on conflict, sets `changed`
  bool completion(bool& changed) {
    changed = false;
    // columns: an in cell with an in cell above needs an in cell to its right
    std::vector<std::int64_t> row_max_in(static_cast<std::size_t>(b2_ + 1), -1);
    std::vector<std::int64_t> col_max_in(static_cast<std::size_t>(b1_ + 1), -1);
    for (std::int64_t x = 0; x <= b1_; ++x)
      for (std::int64_t y = 0; y <= b2_; ++y)
        if (state(x, y) == kIn) {
          row_max_in[static_cast<std::size_t>(y)] = x;
          col_max_in[static_cast<std::size_t>(x)] = y;
        }
    for (std::int64_t x = 0; x < b1_; ++x) {
      bool above = false;
      for (std::int64_t y = b2_; y >= 0; --y) {
        if (state(x, y) != kIn) continue;
        if (above && row_max_in[static_cast<std::size_t>(y)] <= x) {
          int open = -1, count = 0;
          for (std::int64_t x2 = x + 1; x2 <= b1_ && count < 2; ++x2)
            if (state(x2, y) == kOpen) {
              open = cell(x2, y);
              ++count;
            }
          if (count == 0) return false;
          if (count == 1) {
            if (!set(open, kIn)) return false;
            changed = true;
            return true;
          }
        }
        above = true;
      }
    }
    for (std::int64_t y = 0; y < b2_; ++y) {
      bool right = false;
      for (std::int64_t x = b1_; x >= 0; --x) {
        if (state(x, y) != kIn) continue;
        if (right && col_max_in[static_cast<std::size_t>(x)] <= y) {
          int open = -1, count = 0;
          for (std::int64_t y2 = y + 1; y2 <= b2_ && count < 2; ++y2)
            if (state(x, y2) == kOpen) {
              open = cell(x, y2);
              ++count;
            }
          if (count == 0) return false;
          if (count == 1) {
            if (!set(open, kIn)) return false;
            changed = true;
            return true;
          }
        }
        right = true;
      }
    }
    return true;
  }

  bool propagate() {
    for (;;) {
      if (!drain()) return false;
      bool changed = false;
      if (!completion(changed)) return false;
      if (!changed) break;
    }
    if (!must_drop_.empty() &&
        std::none_of(must_drop_.begin(), must_drop_.end(), [&](int c) { return st_[static_cast<std::size_t>(c)] != kIn; }))
      return false;
    if (avoid_)
      for (const auto& f : *avoid_)
        if (std::all_of(f.begin(), f.end(), [&](int c) { return st_[static_cast<std::size_t>(c)] == kIn; })) return false;
    return true;
  }

  void dfs(std::size_t from) {
    if (stop_) return;
    if (++nodes_ > budget_) throw BudgetExhausted(budget_);
    while (from < st_.size() && st_[from] != kOpen) ++from;
    if (from == st_.size()) {
      if (!(*leaf_)(*this)) stop_ = true;
      return;
    }
    for (std::int8_t v : {kOut, kIn}) {
      const std::size_t tm = trail_.size(), im = ins_.size();
      if (set(static_cast<int>(from), v) && propagate()) dfs(from + 1);
      undo(tm, im);
      if (stop_) return;
    }
  }

  std::int64_t b1_, b2_, h_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<std::int8_t> st_;
  std::vector<int> trail_, ins_, queue_;
  std::vector<int> must_drop_;
  const std::vector<std::vector<int>>* avoid_ = nullptr;
  const std::function<bool(const GridSearch&)>* leaf_ = nullptr;
  bool stop_ = false;
};

// locality, identity, the box corner and the closure of `lower`
bool seed(GridSearch& g, const GeneratorSet& lower) {
  const std::int64_t b1 = g.b1(), b2 = g.b2();
  if (!g.force(0, 0, GridSearch::kIn) || !g.force(b1, b2, GridSearch::kIn)) return false;
  for (std::int64_t x = 1; x <= b1; ++x)
    if (!g.force(x, 0, GridSearch::kOut)) return false;
  for (std::int64_t y = 1; y <= b2; ++y)
    if (!g.force(0, y, GridSearch::kOut)) return false;
  if (lower.empty()) return true;
  const ProductMonoid m(lower, std::max(b1, b2) + 1);
  for (std::int64_t x = 0; x <= b1; ++x)
    for (std::int64_t y = 0; y <= b2; ++y) {
      bool in;
      if (x < b1 && y < b2) in = semiring_contains(m, Point{x, y});
      else if (x == b1 && y == b2) in = true;
      else if (x == b1) in = m.best(2, y) >= b1;
      else in = m.best(1, x) >= b2;
      if (in && !g.force(x, y, GridSearch::kIn)) return false;
    }
  return true;
}

}  // namespace

std::uint64_t for_each_good_between(const GeneratorSet& lower_in, const GoodSemigroup& upper, const SearchOptions& opt,
                                    const std::function<bool(const GoodSemigroup&)>& visit) {
  const GeneratorSet lower = make_generators(lower_in);
  for (const auto& p : lower)
    if (!upper.contains(p)) throw std::invalid_argument(p.str() + " is not in the upper semigroup");
  const Point box = opt.box.value_or(between_box(upper));
  if (box.x < upper.c1() || box.y < upper.c2()) throw std::invalid_argument("box below the conductor of S");
  GridSearch g(box, resolve_budget(opt.budget));
  std::vector<int> drop;
  for (std::int64_t x = 0; x <= g.b1(); ++x)
    for (std::int64_t y = 0; y <= g.b2(); ++y) {
      if (!upper.contains(x, y)) {
        g.force(x, y, GridSearch::kOut);
      } else {
        drop.push_back(g.cell(x, y));
      }
    }
  if (!seed(g, lower)) return 0;
  g.require_some_out(std::move(drop));
  g.run([&](const GridSearch& grid) { return visit(grid.build()); });
  return g.nodes();
}

std::vector<GoodSemigroup> enumerate_good_between(const GeneratorSet& lower, const GoodSemigroup& upper,
                                                  const SearchOptions& opt, std::size_t max_results) {
  std::vector<GoodSemigroup> out;
  for_each_good_between(lower, upper, opt, [&](const GoodSemigroup& s) {
    out.push_back(s);
    return max_results == 0 || out.size() < max_results;
  });
  return out;
}

std::optional<GoodSemigroup> find_good_between(const GeneratorSet& lower, const GoodSemigroup& upper,
                                               const SearchOptions& opt) {
  auto v = enumerate_good_between(lower, upper, opt, 1);
  if (v.empty()) return std::nullopt;
  return v.front();
}

bool is_sor(const GoodSemigroup& s, const GeneratorSet& eta, const SearchOptions& opt) {
  return !find_good_between(eta, s, opt).has_value();
}

std::vector<GoodSemigroup> minimal_good_containing(const GeneratorSet& eta_in, const SearchOptions& opt) {
  const GeneratorSet eta = make_generators(eta_in);
  const Point box = opt.box ? *opt.box : conductor_bound(eta).bound;
  GridSearch g(box, resolve_budget(opt.budget));
  if (!seed(g, eta)) return {};
  std::vector<std::vector<int>> found;
  std::vector<GoodSemigroup> out;
  g.avoid_supersets_of(&found);
  g.run([&](const GridSearch& grid) {
    found.push_back(grid.in_cells());
    out.push_back(grid.build());
    return true;
  });
  std::vector<GoodSemigroup> minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < out.size() && !dominated; ++j)
      dominated = j != i && std::includes(found[i].begin(), found[i].end(), found[j].begin(), found[j].end());
    if (!dominated) minimal.push_back(out[i]);
  }
  return minimal;
}

std::vector<GoodSemigroup> enumerate_with_conductor(const Point& c, std::uint64_t budget) {
  std::vector<GoodSemigroup> out;
  if (c == Point{0, 0}) {
    out.push_back(from_small({{0, 0}}, {0, 0}));
    return out;
  }
  if (c.x == 0 || c.y == 0) return out;
  GridSearch g(c, resolve_budget(budget));
  if (!seed(g, {})) return out;
  if (!g.force(c.x.value() - 1, c.y.value(), GridSearch::kOut)) return out;
  if (!g.force(c.x.value(), c.y.value() - 1, GridSearch::kOut)) return out;
  g.run([&](const GridSearch& grid) {
    out.push_back(grid.build());
    return true;
  });
  return out;
}

EdimResult edim(const GoodSemigroup& s, std::uint64_t budget) {
  EdimResult r;
  const GeneratorSet ia = irreducible_absolutes(s);
  const auto mhs = minimal_hitting_sets(s).transversals;
  r.bedim = mhs.empty() ? 0 : mhs.front().size();
  SearchOptions opt;
  opt.budget = budget;
  for (std::size_t n = r.bedim; n <= ia.size(); ++n) {
    // prefer candidates whose largest elements (in rho order) are largest
    auto pool = candidate_pool(ia, mhs, n);
    std::stable_sort(pool.begin(), pool.end(), [](const GeneratorSet& a, const GeneratorSet& b) {
      return rho_order(a) > rho_order(b);
    });
    for (const auto& c : pool)
      if (satisfies_reducibility_condition(s, c)) {
        r.edim = n;
        r.witness = c;
        r.method = EdimResult::Method::reducibility;
        return r;
      }
    for (const auto& c : pool) {
      bool sor = true;
      r.nodes += for_each_good_between(c, s, opt, [&](const GoodSemigroup&) {
        sor = false;
        return false;
      });
      if (sor) {
        r.edim = n;
        r.witness = c;
        r.method = EdimResult::Method::exhaustive;
        return r;
      }
    }
  }
  throw std::logic_error("I_A(S) is not a system of representatives");
}

}  // namespace goodsemi
