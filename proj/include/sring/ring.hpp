#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sring/element_set.hpp"
#include "sring/errors.hpp"

namespace sring {

/**
 * Element literal as it appears in ring-definition files: an integer for
 * Z/nZ, otherwise a nested list mirroring the ring construction.
 */
class Literal {
 public:
  Literal() = default;
  Literal(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static Literal list(std::vector<Literal> items);

  bool is_integer() const { return is_integer_; }
  std::int64_t integer() const { return value_; }
  const std::vector<Literal>& items() const { return items_; }

  std::string to_string() const;

  friend bool operator==(const Literal& a, const Literal& b) = default;

 private:
  bool is_integer_ = true;
  std::int64_t value_ = 0;
  std::vector<Literal> items_;
};

/// M = direct sum of cyclic modules R/J_k, each J_k given by generators.
struct ModuleSpec {
  std::vector<std::vector<Literal>> cyclic;

  friend bool operator==(const ModuleSpec& a, const ModuleSpec& b) = default;
};

/// Construction tree for a finite ring.
struct RingExpression {
  enum class Kind { ZMod, Product, Quotient, Idealization, TriangularE };

  Kind kind = Kind::ZMod;
  std::uint64_t modulus = 0;               // ZMod
  std::vector<RingExpression> operands;    // Product factors, otherwise the single base
  std::vector<Literal> ideal;              // Quotient generators
  ModuleSpec module;                       // Idealization

  static RingExpression zmod(std::uint64_t n);
  static RingExpression product(std::vector<RingExpression> factors);
  static RingExpression quotient(RingExpression base, std::vector<Literal> generators);
  static RingExpression idealization(RingExpression base, ModuleSpec module);
  /// R(+)R, i.e. idealization by the single cyclic component R/(0).
  static RingExpression self_idealization(RingExpression base);
  static RingExpression triangular_e(RingExpression base);

  const RingExpression& base() const { return operands.front(); }

  /// Short human-readable name, e.g. "Z24", "Z2xZ2", "Z24/(3)", "E(Z12)".
  std::string describe() const;

  friend bool operator==(const RingExpression& a, const RingExpression& b) = default;
};

struct RingOptions {
  std::size_t size_cap = 4096;
};

namespace detail {

class RingNode {
 public:
  virtual ~RingNode() = default;
  virtual std::size_t size() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem one() const = 0;
  virtual bool commutative() const { return true; }
  virtual Literal decode(Elem a) const = 0;
  virtual Elem encode(const Literal& lit) const = 0;
};

struct RingImpl;

}  // namespace detail

/**
 * Immutable finite ring with elements encoded as indices 0..size-1.
 *
 * Zero is always index 0. Rings up to 256 elements carry full operation
 * tables; larger ones compute through their construction. Copies share the
 * underlying structure and are safe to use from several threads.
 */
class FiniteRing {
 public:
  std::size_t size() const { return size_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    return add_table_ != nullptr ? add_table_[a * size_ + b] : node_->add(a, b);
  }
  Elem mul(Elem a, Elem b) const {
    return mul_table_ != nullptr ? mul_table_[a * size_ + b] : node_->mul(a, b);
  }
  Elem neg(Elem a) const { return neg_table_ != nullptr ? neg_table_[a] : node_->neg(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t n) const;

  bool is_commutative() const { return node_->commutative(); }

  const RingExpression& expression() const;
  std::string describe() const { return expression().describe(); }

  Literal decode(Elem a) const { return node_->decode(a); }
  /// Throws SringError(MalformedLiteral) when the literal does not match the construction.
  Elem encode(const Literal& lit) const { return node_->encode(lit); }

  /// Identity shared by all copies of this ring; ideals and sets record it.
  std::uintptr_t id() const { return reinterpret_cast<std::uintptr_t>(impl_.get()); }

  ElementSet empty_set() const { return ElementSet(size_); }
  ElementSet all_elements() const { return ElementSet::full(size_); }

 private:
  friend FiniteRing make_ring(std::shared_ptr<detail::RingNode>, RingExpression);

  std::shared_ptr<const detail::RingImpl> impl_;
  const detail::RingNode* node_ = nullptr;
  const std::uint16_t* add_table_ = nullptr;
  const std::uint16_t* mul_table_ = nullptr;
  const std::uint16_t* neg_table_ = nullptr;
  std::size_t size_ = 0;
  Elem one_ = 0;
};

/// Realizes a construction tree. Throws SringError on invalid moduli,
/// malformed generators or when any intermediate ring exceeds the size cap.
FiniteRing build_ring(const RingExpression& expr, const RingOptions& options = {});

struct QuotientResult {
  FiniteRing ring;
  std::vector<Elem> projection;  // base element -> coset index
};

/// R/I for an ideal I of a commutative ring. Cosets are indexed in order of
/// their least representative.
QuotientResult quotient_ring(const FiniteRing& base, const ElementSet& ideal);

/// Direct product; the first factor is the most significant digit.
FiniteRing product_ring(const std::vector<FiniteRing>& factors);

/// Digits of a product-ring element, one index per factor.
std::vector<Elem> product_digits(std::span<const std::size_t> factor_sizes, Elem e);
Elem product_index(std::span<const std::size_t> factor_sizes, std::span<const Elem> digits);

/// Smallest subset containing gens, closed under addition and absorbing
/// multiplication: the additive closure of {r*g}.
ElementSet generate_ideal_set(const FiniteRing& ring, std::span<const Elem> gens);
/// Replaces `ideal` (already an ideal) by ideal + (g).
void extend_ideal_set(const FiniteRing& ring, ElementSet& ideal, Elem g);

/// Entry n for each nilpotent element: the least n >= 1 with a^n = 0.
std::vector<std::optional<std::uint32_t>> nilpotent_profile(const FiniteRing& ring);
ElementSet nilpotent_set(const FiniteRing& ring);

/// Nonzero a with ab = 0 for some nonzero b (zero itself is excluded).
ElementSet zero_divisor_set(const FiniteRing& ring);
ElementSet unit_set(const FiniteRing& ring);
bool is_field(const FiniteRing& ring);
bool is_reduced(const FiniteRing& ring);

struct AxiomReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::string failure;  // first failing law with its elements
};

/// Ring axioms over all element triples up to exhaustive_limit elements,
/// seeded sampling above. Commutativity of multiplication is only required
/// when the ring reports itself commutative.
AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t seed = 42,
                              std::size_t exhaustive_limit = 256,
                              std::uint64_t samples = 100000);

/// Module axioms for the diagonal action of base on the realized module.
bool check_module_axioms(const FiniteRing& base, const ModuleSpec& module,
                         const RingOptions& options = {});

}  // namespace sring
