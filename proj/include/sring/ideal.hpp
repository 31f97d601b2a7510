#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sring/element_set.hpp"
#include "sring/ring.hpp"

namespace sring {

/// An ideal of a commutative FiniteRing: membership bitset plus a generating set.
class Ideal {
 public:
  Ideal(const FiniteRing& ring, ElementSet members, std::vector<Elem> generators)
      : members_(std::move(members)), generators_(std::move(generators)), ring_id_(ring.id()) {}

  /// Wraps a member set already known to be an ideal; generators are chosen
  /// greedily in increasing index order.
  static Ideal from_members(const FiniteRing& ring, ElementSet members);

  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::uintptr_t ring_id() const { return ring_id_; }

  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return members_.contains(e); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == members_.universe(); }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_id_ == b.ring_id_ && a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    return a.members_ <=> b.members_;
  }

 private:
  ElementSet members_;
  std::vector<Elem> generators_;
  std::uintptr_t ring_id_ = 0;
};

/// Multiplicatively closed subset containing 1.
class MultiplicativeSet {
 public:
  MultiplicativeSet(const FiniteRing& ring, ElementSet members, std::vector<Elem> generators);

  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  /// Members in increasing index order.
  const std::vector<Elem>& elements() const { return elements_; }
  std::uintptr_t ring_id() const { return ring_id_; }

  bool contains(Elem e) const { return members_.contains(e); }
  std::size_t size() const { return elements_.size(); }
  /// 0 belongs to the set; every S-predicate trivializes.
  bool degenerate() const { return members_.contains(0); }

 private:
  ElementSet members_;
  std::vector<Elem> generators_;
  std::vector<Elem> elements_;
  std::uintptr_t ring_id_ = 0;
};

// ---------------------------------------------------------------------------
// Ideal construction and arithmetic

Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

/// Closed under addition and negation, contains 0, absorbs multiplication.
bool is_ideal(const FiniteRing& ring, const ElementSet& candidate);

Ideal ideal_sum(const FiniteRing& ring, const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const FiniteRing& ring, const Ideal& a, const Ideal& b);
Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b);

/**
 * Every ideal exactly once, ordered by (size, member list). Built as the
 * closure of the principal ideals under pairwise sums. Throws
 * SringError(CapExceeded) when more than ideal_cap ideals appear.
 */
std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, std::size_t ideal_cap = 4096);

/// (I : J) = { r | rJ ⊆ I }.
Ideal colon(const FiniteRing& ring, const Ideal& i, const Ideal& j);
/// (I : x) = { r | rx ∈ I }.
Ideal colon_elem(const FiniteRing& ring, const Ideal& i, Elem x);
Ideal annihilator(const FiniteRing& ring, Elem x);

bool is_prime_ideal(const FiniteRing& ring, const Ideal& i);
bool is_maximal_ideal(const FiniteRing& ring, const Ideal& i);

// ---------------------------------------------------------------------------
// Multiplicative sets

/// Smallest multiplicatively closed set containing gens and 1. Throws
/// SringError(ZeroInClosure) if 0 enters and allow_zero is false.
MultiplicativeSet mult_closure(const FiniteRing& ring, std::span<const Elem> gens,
                               bool allow_zero = false);

/// Image of S under a quotient map; may contain 0.
MultiplicativeSet image_of(const MultiplicativeSet& s, const QuotientResult& quotient);

// ---------------------------------------------------------------------------
// S-radicals

struct RadicalWitness {
  Elem s = 0;
  std::uint32_t n = 0;
};

struct SRadical {
  Ideal radical;
  /// Indexed by element: least n, then least-index s, with s*a^n in I.
  std::vector<std::optional<RadicalWitness>> witnesses;
  /// The input ideal equals its S-radical.
  bool input_is_s_radical = false;
};

/// { a | s*a^n ∈ I for some s ∈ S, n >= 1 }.
SRadical s_radical(const FiniteRing& ring, const MultiplicativeSet& s, const Ideal& i);
/// Nil_S(R): the S-radical of the zero ideal.
SRadical s_nilradical(const FiniteRing& ring, const MultiplicativeSet& s);

// ---------------------------------------------------------------------------
// S-primes

struct SPrimeWitness {
  Ideal ideal;
  /// Least s with: ab ∈ P implies sa ∈ P or sb ∈ P.
  Elem s;
  /// Least s' with (P : s') prime; may differ from s.
  Elem colon_s;
  Ideal colon_prime;
};

/// Least-index s ∈ S satisfying the S-prime condition directly, if P ∩ S = ∅.
std::optional<Elem> s_prime_definitional(const FiniteRing& ring, const MultiplicativeSet& s,
                                         const Ideal& p);
/// Least-index s ∈ S with (P : s) prime, if P ∩ S = ∅.
std::optional<Elem> s_prime_colon(const FiniteRing& ring, const MultiplicativeSet& s,
                                  const Ideal& p);
/// s ∈ S with (P : s) prime and (P : s') ⊆ (P : s) for every s' ∈ S.
std::optional<Elem> dominant_colon_witness(const FiniteRing& ring, const MultiplicativeSet& s,
                                           const Ideal& p);

/// Both criteria are evaluated; a disagreement throws std::logic_error.
std::optional<SPrimeWitness> is_s_prime(const FiniteRing& ring, const MultiplicativeSet& s,
                                        const Ideal& p);

/// All S-primes in ideal order. The per-ideal test fans out over workers.
std::vector<SPrimeWitness> s_spectrum(const FiniteRing& ring, const MultiplicativeSet& s);
std::vector<SPrimeWitness> s_spectrum(const FiniteRing& ring, const MultiplicativeSet& s,
                                      const std::vector<Ideal>& ideals);

/// P is kept iff every S-prime Q ⊆ P has some s with sP ⊆ Q.
std::vector<Ideal> s_minimal_s_primes(const FiniteRing& ring, const MultiplicativeSet& s,
                                      const std::vector<SPrimeWitness>& spectrum);
std::vector<Ideal> s_minimal_s_primes(const FiniteRing& ring, const MultiplicativeSet& s);

/// Intersection of the S-prime spectrum; SringError(EmptySpectrum) if empty.
Ideal spectrum_intersection(const FiniteRing& ring, const std::vector<SPrimeWitness>& spectrum);
Ideal spectrum_intersection(const FiniteRing& ring, const MultiplicativeSet& s);

}  // namespace sring
