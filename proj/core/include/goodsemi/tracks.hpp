#pragma once

#include <vector>

#include "goodsemi/core_model.hpp"
#include "goodsemi/tropical.hpp"

namespace goodsemi {

/**
 * Irreducibility of arbitrary finite points of S, memoized.
 *
 * Above 2*c2 the answer along a column no longer depends on the second
 * coordinate: (x,y) splits iff x = b + b' with (b,inf) in the semiring and
 * column b' nonempty. Rows likewise.
 */
class IrreducibilityOracle {
 public:
  explicit IrreducibilityOracle(const GoodSemigroup& s);

  const GoodSemigroup& semigroup() const { return s_; }
  // p must be a finite nonzero element of S
  bool irreducible(std::int64_t x, std::int64_t y) const;
  // every (x,y) with y >= 2*c2 in a ray column
  bool column_tail_irreducible(std::int64_t x) const;
  bool row_tail_irreducible(std::int64_t y) const;

  /// True iff every point of d is irreducible.
  bool all_irreducible(const SetDescription& d) const;

 private:
  bool brute(std::int64_t x, std::int64_t y) const;

  const GoodSemigroup& s_;
  std::vector<char> col_nonempty_, row_nonempty_;
  std::int64_t w_, h_;
  mutable std::vector<signed char> memo_;  // -1 unknown
};

struct Track {
  std::vector<Point> spine;  // increasing first coordinate, infinity last
  SetDescription points;
  GeneratorSet edge;  // elements of I_A(S) removed with the track
};

bool is_piece_of_track(const GoodSemigroup& s, const Point& a, const Point& b);

/// All tracks of S, ordered lexicographically by spine.
std::vector<Track> enumerate_tracks(const GoodSemigroup& s);

/// The track through `spine`; throws std::invalid_argument if it is not one.
Track make_track(const GoodSemigroup& s, const std::vector<Point>& spine);

/// S minus the points of t. The conductor is recomputed. N^2 is rejected, being
/// the one good semigroup that is not local.
GoodSemigroup remove_track(const GoodSemigroup& s, const Track& t);

struct HittingFamily {
  std::vector<GeneratorSet> edges;         // inclusion-minimal, sorted
  std::vector<GeneratorSet> transversals;  // minimal hitting sets, by size then lexicographic
};

/// Inclusion-minimal members of a family of sets.
std::vector<GeneratorSet> minimal_edges(std::vector<GeneratorSet> edges);

/// All minimal transversals of a hypergraph.
std::vector<GeneratorSet> minimal_transversals(const std::vector<GeneratorSet>& edges);

HittingFamily minimal_hitting_sets(const GoodSemigroup& s);
HittingFamily hitting_family(const std::vector<Track>& tracks);

std::size_t bedim(const GoodSemigroup& s);

bool is_hitting_set(const std::vector<Track>& tracks, const GeneratorSet& m);

}  // namespace goodsemi
