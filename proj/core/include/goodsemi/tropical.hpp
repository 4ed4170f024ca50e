#pragma once

#include <optional>
#include <vector>

#include "goodsemi/core_model.hpp"

namespace goodsemi {

/// Finite subset of the extended plane, sorted and duplicate free.
using GeneratorSet = std::vector<Point>;

/// Sorts, removes duplicates and rejects (0,0) and (inf,inf).
GeneratorSet make_generators(std::vector<Point> pts);

inline Point oplus(const Point& a, const Point& b) { return pmin(a, b); }
inline Point odot(const Point& a, const Point& b) { return psum(a, b); }

/**
 * The monoid of all sums of generators.
 *
 * For each axis and each value v the table stores the largest other coordinate
 * over all products whose coordinate on that axis equals v. Products whose
 * other coordinate can grow without bound (generators with a zero coordinate)
 * are recorded as unbounded, which is below infinity.
 */
class ProductMonoid {
 public:
  static constexpr std::int64_t kNone = -1;
  static constexpr std::int64_t kUnbounded = ExtNat::kInfRaw - 1;

  explicit ProductMonoid(GeneratorSet gens, std::int64_t limit = 64);

  const GeneratorSet& generators() const { return gens_; }
  std::int64_t limit() const { return limit_; }

  // raw table entry: kNone, a finite value, kUnbounded or ExtNat::kInfRaw
  std::int64_t best(int axis, std::int64_t value) const;

  /// Is there a product with coordinate `axis` equal to `value` and the other >= min_other.
  bool slice(int axis, std::int64_t value, ExtNat min_other) const;

  /// The product realizing best(axis, value), if any.
  std::optional<Point> slice_witness(int axis, std::int64_t value) const;

  /// Generators (with repetition) summing to slice_witness(axis, value).
  std::vector<Point> decompose(int axis, std::int64_t value) const;

  /// Other-coordinate values v <= max_other for which an exact product with
  /// coordinate `axis` equal to `value` exists. Only finite generators take part.
  std::vector<std::int64_t> exact_line(int axis, std::int64_t value, std::int64_t max_other) const;

 private:
  struct Table {
    std::vector<std::int64_t> best;
    std::vector<int> from;  // generator index used last, -1 for the empty product
  };
  Table build(int axis, std::int64_t limit) const;
  // grows both tables to cover `value`; not safe for concurrent use
  void reserve(std::int64_t value) const;
  const Table& table(int axis) const { return axis == 1 ? t1_ : t2_; }

  GeneratorSet gens_;
  mutable std::int64_t limit_;
  mutable Table t1_, t2_;
};

bool monoid_slice(const ProductMonoid& m, int axis, std::int64_t value, ExtNat min_other);

bool semiring_contains(const ProductMonoid& m, const Point& p);
bool semiring_contains(const GeneratorSet& eta, const Point& p);

bool is_irreducible(const GoodSemigroup& s, const Point& a);
bool is_absolute(const GoodSemigroup& s, const Point& a);

/// Irreducible absolute elements, sorted.
GeneratorSet irreducible_absolutes(const GoodSemigroup& s);

/// The semigroup generated by `ia` as a semiring. Throws when the closure is not
/// good or when its irreducible absolutes differ from `ia`.
GoodSemigroup reconstruct_from_ia(const GeneratorSet& ia);

/// Derived element sets of the semiring attached to S, restricted to the box [0, c+e].
struct GammaView {
  GoodSemigroup base;
  std::vector<Point> small;
  std::vector<Point> beyond_rays;
  std::vector<Point> irreducibles;
  std::vector<Point> absolutes;
  GeneratorSet ia;
};

GammaView gamma_view(const GoodSemigroup& s);

}  // namespace goodsemi
