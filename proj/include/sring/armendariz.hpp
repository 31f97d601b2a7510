#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sring/ideal.hpp"
#include "sring/polynomial.hpp"
#include "sring/ring.hpp"

namespace sring {

enum class SearchMode { Exhaustive, Sampled };

std::string_view to_string(SearchMode mode);

struct ArmendarizConfig {
  std::size_t degree = 2;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 42;
  /// Sampled: number of zero-product pairs drawn. Exhaustive: the largest
  /// admissible |R|^(2D+2); beyond it the search refuses with BudgetExhausted.
  std::uint64_t budget = 100000;
  /// Sampled only: coefficients are drawn from here half of the time, and the
  /// lowest nonzero coefficient of f always is (at most 256 of them are used).
  /// Empty means the zero divisors of R.
  std::vector<Elem> coefficient_pool;
};

struct ZeroProductStats {
  std::uint64_t pairs = 0;
  /// Pairs with f != 0 and g != 0.
  std::uint64_t nontrivial = 0;
};

using ZeroProductVisitor = std::function<void(const Polynomial& f, const Polynomial& g)>;

/**
 * Streams pairs (f, g) with deg <= D and fg = 0 in R[X] (f on the left).
 *
 * Exhaustive mode visits every such pair, grouped by f in index order; g is
 * solved degree by degree through the fibers of x -> a_p x, where a_p is the
 * lowest nonzero coefficient of f. Sampled mode draws f from the seed and
 * solves for g by a randomized depth-first search, falling back to g = 0.
 * Both streams are a deterministic function of (R, config).
 */
ZeroProductStats zero_product_poly_pairs(const FiniteRing& ring, const ArmendarizConfig& config,
                                         const ZeroProductVisitor& visit);

struct ZeroProductPair {
  Polynomial f;
  Polynomial g;
};

/// fg = 0 but s * a_i * b_j != 0 for every witness s.
struct ArmendarizViolation {
  ZeroProductPair pair;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct ArmendarizVerdict {
  std::size_t degree = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  /// 0 is a witness: every product is killed and nothing is searched.
  bool degenerate = false;
  std::uint64_t pairs_examined = 0;
  std::uint64_t nontrivial_pairs = 0;

  /// Per-pair reading: every examined pair has its own s.
  bool per_pair_holds = true;
  /// Least witness of each pair, tallied.
  std::map<Elem, std::uint64_t> per_pair_witness_counts;
  std::optional<ZeroProductPair> per_pair_failure;
  std::optional<ArmendarizViolation> violation;

  /// Uniform reading: one s for all examined pairs.
  bool uniform_holds = true;
  std::optional<Elem> uniform_witness;
  /// First pair, in stream order, after which no single s remains.
  std::optional<ZeroProductPair> uniform_breaking_pair;
};

/**
 * Bounded-degree Armendariz check: for each zero-product pair, which
 * witnesses s kill every s * a_i * b_j. Witnesses need not form a
 * multiplicative set (the constant-diagonal set of E(R) does not). Verdicts
 * hold only for the examined pairs and degree bound.
 */
ArmendarizVerdict is_u_s_armendariz_up_to(const FiniteRing& ring, std::span<const Elem> witnesses,
                                          const ArmendarizConfig& config);
ArmendarizVerdict is_u_s_armendariz_up_to(const FiniteRing& ring, const MultiplicativeSet& s,
                                          const ArmendarizConfig& config);

/// Constant matrices (s, s, s, s) of E(R), one per s, in the order given.
std::vector<Elem> constant_quadruples(const FiniteRing& e_ring, const FiniteRing& base,
                                      std::span<const Elem> base_elements);

/// Quadruples with entries in Z(R) ∪ {0}; at most `limit`, in index order.
std::vector<Elem> triangular_zero_divisor_pool(const FiniteRing& e_ring, const FiniteRing& base,
                                               std::size_t limit = 4096);

/// { (s, m) | s ∈ S, m ∈ R } inside R(+)R.
std::vector<Elem> s_idealization_set(const FiniteRing& idealization, const FiniteRing& base,
                                     const MultiplicativeSet& s);

}  // namespace sring
