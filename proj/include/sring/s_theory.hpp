#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "sring/ideal.hpp"
#include "sring/polynomial.hpp"
#include "sring/ring.hpp"

namespace sring {

/// Result of the S-reduced test. Witnesses pair every nilpotent a with the
/// least-index s ∈ S satisfying sa = 0.
struct SReducedCertificate {
  bool verdict = false;
  bool degenerate = false;
  std::vector<std::pair<Elem, Elem>> witnesses;
  /// Least-index s killing every nilpotent at once (u-S-reduced reading).
  std::optional<Elem> uniform_witness;
  std::optional<Elem> failing_element;
};

SReducedCertificate is_s_reduced(const FiniteRing& ring, const MultiplicativeSet& s);

/// Least-index s ∈ S with sN(R) = 0.
std::optional<Elem> is_u_s_reduced(const FiniteRing& ring, const MultiplicativeSet& s);

/// Least-index s ∈ S such that ab = 0 implies sa = 0 or sb = 0 for every pair.
/// The same s must serve all pairs.
std::optional<Elem> is_s_integral_domain(const FiniteRing& ring, const MultiplicativeSet& s);

/// Least-index s with sa = 0.
std::optional<Elem> is_s_zero_element(const FiniteRing& ring, const MultiplicativeSet& s, Elem a);

struct SZeroIdealVerdict {
  bool verdict = false;
  std::vector<std::pair<Elem, Elem>> witnesses;  // member -> s
  std::optional<Elem> failing_element;
};

SZeroIdealVerdict is_s_zero_ideal(const FiniteRing& ring, const MultiplicativeSet& s,
                                  const Ideal& ideal);

/// T = { r | sr = 0 for some s ∈ S }.
Ideal s_torsion(const FiniteRing& ring, const MultiplicativeSet& s);

struct LocalizationResult {
  /// 0 ∈ S: the localization is the zero ring and `ring` is empty.
  bool degenerate = false;
  std::optional<FiniteRing> ring;
  std::vector<Elem> canonical_map;
  Ideal torsion;
};

/**
 * S^{-1}R for finite R, realized as R/T with T the S-torsion ideal: on R/T
 * multiplication by any s is injective, hence bijective. The result is
 * checked before returning: the map is a homomorphism, its kernel is T and
 * every s maps to a unit. A failed check throws std::logic_error.
 */
LocalizationResult localize(const FiniteRing& ring, const MultiplicativeSet& s);

struct SPureVerdict {
  bool verdict = false;
  std::vector<std::tuple<Elem, Elem, Elem>> witnesses;  // (a, b, s) with sa = ab
  std::optional<Elem> failing_element;
};

SPureVerdict is_s_pure(const FiniteRing& ring, const MultiplicativeSet& s, const Ideal& ideal);

struct SPFVerdict {
  bool verdict = false;
  /// First a (by index) whose annihilator is not S-pure, and the failing member.
  std::optional<Elem> failing_annihilator_of;
  std::optional<Elem> failing_member;
};

SPFVerdict is_s_pf(const FiniteRing& ring, const MultiplicativeSet& s);

struct HopfianEntry {
  Elem element = 0;
  /// Least n with ann(a^n) = ann(a^(n+1)); the chain is constant from there.
  std::uint32_t stabilization = 1;
  /// Least k (then least-index s) with s*ann(a^n) ⊆ ann(a^k) for all n >= k.
  std::uint32_t k = 1;
  Elem s = 0;
  /// Least-index s with s*ann(a^(n+1)) ⊆ ann(a^n) for all n >= 1, if any.
  std::optional<Elem> shift_witness;
};

/// One entry per ring element, in index order.
std::vector<HopfianEntry> s_strongly_hopfian_profile(const FiniteRing& ring,
                                                     const MultiplicativeSet& s);

/// s * ann(a^(n+1)) ⊆ ann(a^n) for every n >= 1, checked by direct containment.
bool check_shift_witness(const FiniteRing& ring, Elem a, Elem s);

struct PolynomialTransfer {
  std::size_t degree = 0;
  bool ring_s_reduced = false;
  /// Every polynomial of degree <= `degree` with nilpotent coefficients is
  /// killed by a single s ∈ S.
  bool polynomial_ring_s_reduced = false;
  std::uint64_t polynomials_examined = 0;
  std::optional<Polynomial> failing_polynomial;
};

/**
 * Compares R with R[X] restricted to degree <= max_degree. A polynomial over
 * a commutative ring is nilpotent exactly when all its coefficients are, so
 * the nilpotent polynomials are enumerated as coefficient tuples. The degree
 * is lowered until |N(R)|^(degree+1) fits in budget.
 */
PolynomialTransfer polynomial_transfer(const FiniteRing& ring, const MultiplicativeSet& s,
                                       std::size_t max_degree = 2,
                                       std::uint64_t budget = 100000);

}  // namespace sring
