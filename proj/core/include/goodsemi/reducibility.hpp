#pragma once

#include <optional>
#include <vector>

#include "goodsemi/core_model.hpp"
#include "goodsemi/tropical.hpp"

namespace goodsemi {

/// Largest second coordinate of the closure points strictly below `a` in its
/// column (side 1), or largest first coordinate strictly left of `a` in its
/// row (side 2). Infinite when the semiring contains the whole ray.
std::optional<ExtNat> delta_eta(const ProductMonoid& m, const Point& a, int side);
std::optional<ExtNat> delta_eta(const GeneratorSet& eta, const Point& a, int side);

struct ReductionCertificate {
  enum class Reason { none, in_eta, in_closure, column, row };

  Point target;
  bool reducible = false;
  Reason reason = Reason::none;
  std::optional<ExtNat> delta_below, delta_left;  // from the closure
  // range checked by the successful condition (or the last one tried)
  int side = 0;
  std::vector<std::int64_t> range;
  std::vector<Point> witnesses;  // closure point per range value
  std::optional<std::int64_t> failed_at;

  std::string str() const;
};

ReductionCertificate reduction_certificate(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a);
ReductionCertificate reduction_certificate(const GoodSemigroup& s, const GeneratorSet& eta, const ProductMonoid& m,
                                           const Point& a);
bool is_reducible_by(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a);

struct ReductionTrace {
  std::vector<GeneratorSet> chain;  // chain.front() = eta, chain.back() = red(eta)
  std::vector<std::vector<ReductionCertificate>> rounds;  // elements added at each step

  const GeneratorSet& result() const { return chain.back(); }
};

ReductionTrace red_closure(const GoodSemigroup& s, const GeneratorSet& eta);
bool satisfies_reducibility_condition(const GoodSemigroup& s, const GeneratorSet& eta);

struct BedimResult {
  std::size_t value = 0;
  GeneratorSet witness;
};

/// Least size of a subset of I_A(S) whose reducibility closure is I_A(S).
BedimResult big_bedim(const GoodSemigroup& s);

/// Size-n subsets of I_A(S) containing a minimal hitting set, lexicographic.
std::vector<GeneratorSet> candidate_pool(const GeneratorSet& ia, const std::vector<GeneratorSet>& mhs, std::size_t n);

struct RhoCertificate {
  bool reducible = false;
  std::optional<Point> product;  // the product (b1, a2) with b1 < a1
  std::vector<std::int64_t> range;
  std::vector<Point> witnesses;
};

RhoCertificate rho_certificate(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a);
bool is_rho_reducible(const GoodSemigroup& s, const GeneratorSet& eta, const Point& a);

/// Decreasing first coordinate, infinity first; ties by decreasing second.
std::vector<Point> rho_order(GeneratorSet v);

GeneratorSet rho_sor(const GoodSemigroup& s);

/// Elements of I_A(S) whose left row set lies in (Ap \ {0}) ∪ {e}.
GeneratorSet eta_s(const GoodSemigroup& s);

}  // namespace goodsemi
