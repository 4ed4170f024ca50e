#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goodsemi {

/// A value in N extended by the symbol infinity.
class ExtNat {
 public:
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();

  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat inf() { return ExtNat(kInfRaw); }

  constexpr bool is_inf() const { return v_ == kInfRaw; }
  constexpr bool is_finite() const { return v_ != kInfRaw; }
  constexpr std::int64_t value() const { return v_; }

  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return ExtNat(a.v_ + b.v_);
  }

  std::string str() const;

 private:
  std::int64_t v_ = 0;
};

constexpr ExtNat kInf = ExtNat::inf();

inline constexpr ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
inline constexpr ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

/// Element of the extended plane. Default ordering is lexicographic, infinity last.
struct Point {
  ExtNat x;
  ExtNat y;

  constexpr Point() = default;
  constexpr Point(ExtNat x_, ExtNat y_) : x(x_), y(y_) {}

  constexpr bool is_finite() const { return x.is_finite() && y.is_finite(); }
  constexpr bool is_zero() const { return x == 0 && y == 0; }
  constexpr ExtNat operator[](int axis) const { return axis == 1 ? x : y; }

  friend constexpr auto operator<=>(const Point&, const Point&) = default;

  std::string str() const;
};

// componentwise order
inline constexpr bool leq(const Point& a, const Point& b) { return a.x <= b.x && a.y <= b.y; }
inline constexpr bool comparable(const Point& a, const Point& b) { return leq(a, b) || leq(b, a); }
// strict in both coordinates
inline constexpr bool ll(const Point& a, const Point& b) { return a.x < b.x && a.y < b.y; }
inline constexpr bool leqleq(const Point& a, const Point& b) { return a == b || ll(a, b); }

inline constexpr Point pmin(const Point& a, const Point& b) { return {min(a.x, b.x), min(a.y, b.y)}; }
inline constexpr Point psum(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

std::string to_string(const std::vector<Point>& pts);

struct Violation {
  std::string axiom;
  std::vector<Point> witnesses;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<Point> witnesses);
  std::string str() const;
};

class InvalidSemigroup : public std::runtime_error {
 public:
  explicit InvalidSemigroup(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Finite view of a possibly infinite subset of N^2.
/// A column tail (x,y0) stands for every (x,y) with y >= y0; row tails likewise.
struct SetDescription {
  std::vector<Point> points;
  std::vector<Point> column_tails;
  std::vector<Point> row_tails;

  bool empty() const { return points.empty() && column_tails.empty() && row_tails.empty(); }
  bool contains(const Point& p) const;
  // sorts and merges overlapping tails, dropping points they cover
  void normalize();
};

enum class DeltaKind {
  up,     // same first coordinate, larger second
  right,  // same second coordinate, larger first
  both,   // union of up and right
  below,  // same first coordinate, smaller second
  left,   // same second coordinate, smaller first
};

/**
 * A good subsemigroup of N^2, stored by its small elements S ∩ [0,c].
 * Membership of any finite point follows by clamping at the conductor.
 */
class GoodSemigroup {
 public:
  std::int64_t c1() const { return c1_; }
  std::int64_t c2() const { return c2_; }
  Point conductor() const { return {c1_, c2_}; }
  Point multiplicity() const { return e_; }
  std::int64_t e1() const { return e_.x.value(); }
  std::int64_t e2() const { return e_.y.value(); }

  const std::vector<Point>& small() const { return small_; }

  bool contains(std::int64_t x, std::int64_t y) const {
    if (x < 0 || y < 0) return false;
    if (x > c1_) x = c1_;
    if (y > c2_) y = c2_;
    return grid_[static_cast<std::size_t>(x * (c2_ + 1) + y)] != 0;
  }
  bool contains(const Point& p) const;

  bool column_ray(std::int64_t a) const { return contains(a, c2_); }
  bool row_ray(std::int64_t b) const { return contains(c1_, b); }
  // least y0 with (a,y) in S for all y >= y0; requires column_ray(a)
  std::int64_t column_tail_start(std::int64_t a) const;
  std::int64_t row_tail_start(std::int64_t b) const;

  friend bool operator==(const GoodSemigroup& a, const GoodSemigroup& b) {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.grid_ == b.grid_;
  }

 private:
  friend GoodSemigroup from_small(const std::vector<Point>&, const Point&);

  std::int64_t c1_ = 0;
  std::int64_t c2_ = 0;
  Point e_;
  std::vector<std::uint8_t> grid_;
  std::vector<Point> small_;
};

ValidationReport validate(const std::vector<Point>& small, const Point& conductor);

/// Throws InvalidSemigroup when an axiom fails.
GoodSemigroup from_small(const std::vector<Point>& small, const Point& conductor);

/// Builds a semigroup from a membership predicate that is constant beyond `bound`
/// along each axis. The conductor is searched inside [0, bound].
GoodSemigroup from_membership(const std::function<bool(std::int64_t, std::int64_t)>& member,
                              const Point& bound);

bool contains(const GoodSemigroup& s, const Point& p);
SetDescription delta(const GoodSemigroup& s, const Point& p, DeltaKind kind);

// Max second coordinate of the below set (resp. first coordinate of the left set).
// Infinite when the set contains a tail.
std::optional<ExtNat> delta_max_below(const GoodSemigroup& s, const Point& p);
std::optional<ExtNat> delta_max_left(const GoodSemigroup& s, const Point& p);

inline Point multiplicity(const GoodSemigroup& s) { return s.multiplicity(); }
inline Point conductor(const GoodSemigroup& s) { return s.conductor(); }

}  // namespace goodsemi
