#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "goodsemi/apery.hpp"
#include "goodsemi/minimality.hpp"

using namespace goodsemi;

namespace {

// S(a) - a closed under addition, checked on a box well past c + e
bool arf_brute(const GoodSemigroup& s) {
  const std::int64_t b1 = 2 * (s.c1() + s.e1()) + 2, b2 = 2 * (s.c2() + s.e2()) + 2;
  for (std::int64_t a1 = 0; a1 <= b1 / 2; ++a1)
    for (std::int64_t a2 = 0; a2 <= b2 / 2; ++a2) {
      if (!s.contains(a1, a2)) continue;
      std::vector<Point> up;
      for (std::int64_t x = a1; x <= b1; ++x)
        for (std::int64_t y = a2; y <= b2; ++y)
          if (s.contains(x, y)) up.push_back({x - a1, y - a2});
      for (const auto& p : up)
        for (const auto& q : up)
          if (!s.contains(p.x.value() + q.x.value() + a1, p.y.value() + q.y.value() + a2)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("apery set membership") {
  const auto s = load_ia("six_tracks.gen");
  const auto ap = apery_set(s);
  const std::set<Point> set(ap.begin(), ap.end());
  CHECK(set.count({0, 0}) == 1);
  CHECK(set.count(s.multiplicity()) == 0);
  CHECK(set.count({7, 13}) == 1);
  CHECK(in_apery(s, 7, 13));
  CHECK_FALSE(in_apery(s, 4, 3));
  CHECK(in_apery_bar(s, 4, 3));
  CHECK_FALSE(in_apery_bar(s, 0, 0));
  for (const auto& p : ap)
    if (p.is_finite()) CHECK((s.contains(p) && !s.contains(p.x.value() - 4, p.y.value() - 3)));
}

TEST_CASE("apery levels") {
  for (const char* name : {"six_tracks.gen", "sor_unreduced.gen", "two_msor_sizes.gen", "gap_bedim.gen",
                           "gap_big_bedim.gen", "curve_ia.gen"}) {
    const auto s = load_ia(name);
    const auto lv = apery_levels(s);
    CHECK_MESSAGE(lv.count() == static_cast<std::size_t>(s.e1() + s.e2()), name);
    CHECK(lv.levels[0] == std::vector<Point>{{0, 0}});
    std::set<Point> seen;
    for (const auto& level : lv.levels)
      for (const auto& p : level) CHECK(seen.insert(p).second);
    CHECK(seen == std::set<Point>(lv.apery.begin(), lv.apery.end()));
    for (const auto& a : lv.apery)
      for (const auto& b : lv.apery)
        if (apery_ll(a, b)) CHECK(lv.level_of(a) < lv.level_of(b));
  }
  CHECK(apery_levels(load_ia("six_tracks.gen")).count() == 7);
}

TEST_CASE("apery levels of the whole plane") {
  const auto s = from_small({{0, 0}}, {0, 0});
  const auto lv = apery_levels(s);
  CHECK(lv.count() == 2);
  CHECK(lv.levels[1] == std::vector<Point>{{0, kInf}, {kInf, 0}});
}

TEST_CASE("compactification") {
  const auto lv = apery_levels(load_ia("six_tracks.gen"));
  CHECK(lv.box == Point{25, 27});
  CHECK(lv.compact({14, 90}) == Point{14, kInf});
  CHECK(lv.compact({90, 3}) == Point{kInf, 3});
  CHECK(lv.level_of({14, 90}) == lv.level_of({14, kInf}));
  CHECK(apery_ll({3, kInf}, {5, kInf}));
  CHECK_FALSE(apery_ll({kInf, 3}, {5, 9}));
}

TEST_CASE("arf property") {
  CHECK(is_arf(from_small({{0, 0}}, {0, 0})));
  const auto diag = from_small({{0, 0}, {2, 2}, {3, 3}, {4, 4}}, {4, 4});
  CHECK(is_arf(diag) == arf_brute(diag));
  int arf = 0, other = 0;
  for (std::int64_t c1 = 1; c1 <= 4; ++c1)
    for (std::int64_t c2 = 1; c2 <= 4; ++c2)
      for (const auto& s : enumerate_with_conductor({c1, c2})) {
        const bool a = is_arf(s);
        CHECK(a == arf_brute(s));
        (a ? arf : other) += 1;
      }
  CHECK(arf > 0);
  CHECK(other > 0);
  for (const char* name : {"six_tracks.gen", "sor_unreduced.gen", "curve_ia.gen"})
    CHECK(is_arf(load_ia(name)) == arf_brute(load_ia(name)));
}

TEST_CASE("M + M against e + M") {
  const auto plane = from_small({{0, 0}}, {0, 0});
  const auto c = conjecture_m_plus_m(plane);
  CHECK(c.holds_mm == m_plus_m_equals_e_plus_m(plane));
  CHECK(c.edim == 2);
  CHECK(c.is_med);
  for (const char* name : {"six_tracks.gen", "two_msor_sizes.gen", "curve_ia.gen"}) {
    const auto s = load_ia(name);
    const auto r = conjecture_m_plus_m(s);
    if (r.holds_mm) CHECK(r.is_med);
    CHECK(r.is_med == (r.edim == static_cast<std::size_t>(s.e1() + s.e2())));
  }
}
