#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "goodsemi/core_model.hpp"
#include "goodsemi/tropical.hpp"

namespace goodsemi {

class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(int which, const std::string& msg) : std::invalid_argument(msg), which_(which) {}
  int which() const { return which_; }  // 1: gcd condition, 2: distinct coordinates

 private:
  int which_;
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes)
      : std::runtime_error("search budget of " + std::to_string(nodes) + " nodes exhausted"), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Node budget: 0 selects the default, which GOODSEMI_BUDGET overrides.
std::uint64_t resolve_budget(std::uint64_t budget);

/// Bound on the conductor of every good semigroup containing eta.
struct BoundCertificate {
  std::int64_t numerical_conductor[2];  // of the numerical semigroups of each coordinate
  Point alpha[2], beta[2];              // products agreeing on axis i, separated on the other
  Point lambda[2];                      // min of the products with coordinate i in [c_i, c_i + m_i)
  Point sigma[2];
  Point bound;                          // sigma[0] + sigma[1]
};

/// Rays are ignored. Throws HypothesisError when the finite part fails the hypotheses.
BoundCertificate conductor_bound(const GeneratorSet& eta);

struct SearchOptions {
  std::uint64_t budget = 0;
  std::optional<Point> box;  // default depends on the search
};

/// Box used for searches below S: c + 2e.
Point between_box(const GoodSemigroup& s);

/**
 * Calls `visit` on every good semigroup S' with <<lower>> ⊆ S' ⊊ upper whose
 * conductor lies in the box. Stops early when `visit` returns false.
 * Returns the number of nodes explored.
 */
std::uint64_t for_each_good_between(const GeneratorSet& lower, const GoodSemigroup& upper, const SearchOptions& opt,
                                    const std::function<bool(const GoodSemigroup&)>& visit);

std::vector<GoodSemigroup> enumerate_good_between(const GeneratorSet& lower, const GoodSemigroup& upper,
                                                  const SearchOptions& opt = {}, std::size_t max_results = 0);

std::optional<GoodSemigroup> find_good_between(const GeneratorSet& lower, const GoodSemigroup& upper,
                                               const SearchOptions& opt = {});

/// Inclusion-minimal good semigroups containing eta with conductor at most the box
/// (conductor_bound(eta) unless given).
std::vector<GoodSemigroup> minimal_good_containing(const GeneratorSet& eta, const SearchOptions& opt = {});

/// No good S' with eta ⊆ S' ⊊ S (conductor inside between_box(S)).
bool is_sor(const GoodSemigroup& s, const GeneratorSet& eta, const SearchOptions& opt = {});

struct EdimResult {
  enum class Method { reducibility, exhaustive };

  std::size_t edim = 0;
  GeneratorSet witness;
  Method method = Method::reducibility;
  std::size_t bedim = 0;
  std::uint64_t nodes = 0;  // between-search nodes spent

  static const char* method_name(Method m) {
    return m == Method::reducibility ? "reducibility-certified" : "exhaustive-between-search";
  }
};

EdimResult edim(const GoodSemigroup& s, std::uint64_t budget = 0);

/// Every good semigroup with conductor exactly `c` (small elements only).
std::vector<GoodSemigroup> enumerate_with_conductor(const Point& c, std::uint64_t budget = 0);

}  // namespace goodsemi
