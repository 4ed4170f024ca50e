#pragma once

#include <vector>

#include "goodsemi/core_model.hpp"

namespace goodsemi {

/// Finite point of S with p - e outside S.
bool in_apery(const GoodSemigroup& s, std::int64_t x, std::int64_t y);
/// (Ap \ {0}) ∪ {e}
bool in_apery_bar(const GoodSemigroup& s, std::int64_t x, std::int64_t y);

/**
 * Apéry set of S with respect to e, made finite.
 *
 * Points with x < c1+e1 and y < c2+e2 are kept as they are. A column x whose
 * points above c2+e2 all lie in Ap is recorded once as (x,inf), and a row
 * likewise as (inf,y); these stand for the whole tail.
 */
std::vector<Point> apery_set(const GoodSemigroup& s);

struct AperyLevels {
  std::vector<Point> apery;
  std::vector<std::vector<Point>> levels;  // levels[0] = {(0,0)}
  Point box;                               // c + e

  std::size_t count() const { return levels.size(); }
  // p with coordinates at or beyond the box mapped to its tail symbol
  Point compact(const Point& p) const;
  // 1-based level of compact(p), 0 when it is not in the set
  std::size_t level_of(const Point& p) const;
};

/// ≪ on the compactified set: an infinite coordinate is below another infinite one.
bool apery_ll(const Point& a, const Point& b);

AperyLevels apery_levels(const GoodSemigroup& s);

/// S(a) = {b in S : b >= a} is closed under addition for every a in S.
bool is_arf(const GoodSemigroup& s);

struct ConjectureCheck {
  bool holds_mm;  // M+M = e+M
  bool is_med;    // edim = e1+e2
  std::size_t edim;
};

/// Compares M+M with e+M and edim with e1+e2. `budget` is passed to edim.
ConjectureCheck conjecture_m_plus_m(const GoodSemigroup& s, std::uint64_t budget = 0);
bool m_plus_m_equals_e_plus_m(const GoodSemigroup& s);

}  // namespace goodsemi
