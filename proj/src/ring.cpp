#include "sring/ring.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <utility>

namespace sring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::SizeCap: return "size-cap-exceeded";
    case ErrorKind::MalformedLiteral: return "malformed-literal";
    case ErrorKind::MalformedExpression: return "malformed-expression";
    case ErrorKind::ZeroInClosure: return "zero-in-closure";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::EmptySpectrum: return "empty-spectrum";
    case ErrorKind::DegreeOverflow: return "degree-overflow";
    case ErrorKind::BudgetExhausted: return "budget-exhausted";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::NonCommutative: return "non-commutative";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Usage: return "usage-error";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Literal / RingExpression

Literal Literal::list(std::vector<Literal> items) {
  Literal lit;
  lit.is_integer_ = false;
  lit.items_ = std::move(items);
  return lit;
}

std::string Literal::to_string() const {
  if (is_integer_) return std::to_string(value_);
  std::string out = "[";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i != 0) out += ",";
    out += items_[i].to_string();
  }
  return out + "]";
}

RingExpression RingExpression::zmod(std::uint64_t n) {
  RingExpression e;
  e.kind = Kind::ZMod;
  e.modulus = n;
  return e;
}

RingExpression RingExpression::product(std::vector<RingExpression> factors) {
  RingExpression e;
  e.kind = Kind::Product;
  e.operands = std::move(factors);
  return e;
}

RingExpression RingExpression::quotient(RingExpression base, std::vector<Literal> generators) {
  RingExpression e;
  e.kind = Kind::Quotient;
  e.operands.push_back(std::move(base));
  e.ideal = std::move(generators);
  return e;
}

RingExpression RingExpression::idealization(RingExpression base, ModuleSpec module) {
  RingExpression e;
  e.kind = Kind::Idealization;
  e.operands.push_back(std::move(base));
  e.module = std::move(module);
  return e;
}

RingExpression RingExpression::self_idealization(RingExpression base) {
  return idealization(std::move(base), ModuleSpec{{{}}});
}

RingExpression RingExpression::triangular_e(RingExpression base) {
  RingExpression e;
  e.kind = Kind::TriangularE;
  e.operands.push_back(std::move(base));
  return e;
}

namespace {

bool is_atomic(const RingExpression& e) {
  return e.kind == RingExpression::Kind::ZMod || e.kind == RingExpression::Kind::TriangularE;
}

std::string wrapped(const RingExpression& e) {
  return is_atomic(e) ? e.describe() : "(" + e.describe() + ")";
}

std::string generator_list(const std::vector<Literal>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i != 0) out += ",";
    out += gens[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string RingExpression::describe() const {
  switch (kind) {
    case Kind::ZMod:
      return "Z" + std::to_string(modulus);
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i != 0) out += "x";
        out += wrapped(operands[i]);
      }
      return out;
    }
    case Kind::Quotient:
      return wrapped(base()) + "/" + generator_list(ideal);
    case Kind::Idealization: {
      std::string out = wrapped(base()) + "(+)";
      if (module.cyclic.size() == 1 && module.cyclic.front().empty()) return out + wrapped(base());
      out += "[";
      for (std::size_t k = 0; k < module.cyclic.size(); ++k) {
        if (k != 0) out += ",";
        out += wrapped(base()) + "/" + generator_list(module.cyclic[k]);
      }
      return out + "]";
    }
    case Kind::TriangularE:
      return "E(" + base().describe() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ring nodes

namespace detail {

struct RingImpl {
  std::shared_ptr<RingNode> node;
  RingExpression expression;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
};

}  // namespace detail

namespace {

constexpr std::size_t kTableLimit = 256;

class ZModNode final : public detail::RingNode {
 public:
  explicit ZModNode(std::uint64_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Elem add(Elem a, Elem b) const override {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= n_ ? s - n_ : s);
  }
  Elem mul(Elem a, Elem b) const override {
    return static_cast<Elem>((std::uint64_t{a} * b) % n_);
  }
  Elem neg(Elem a) const override { return a == 0 ? 0 : static_cast<Elem>(n_ - a); }
  Elem one() const override { return 1; }
  Literal decode(Elem a) const override { return Literal(static_cast<std::int64_t>(a)); }
  Elem encode(const Literal& lit) const override {
    if (!lit.is_integer())
      throw SringError(ErrorKind::MalformedLiteral,
                       "expected an integer literal for Z" + std::to_string(n_) + ", got " +
                           lit.to_string());
    const auto n = static_cast<std::int64_t>(n_);
    return static_cast<Elem>(((lit.integer() % n) + n) % n);
  }

 private:
  std::uint64_t n_;
};

class ProductNode final : public detail::RingNode {
 public:
  explicit ProductNode(std::vector<FiniteRing> factors) : factors_(std::move(factors)) {
    size_ = 1;
    for (const auto& f : factors_) {
      sizes_.push_back(f.size());
      size_ *= f.size();
    }
    std::vector<Elem> ones;
    for (const auto& f : factors_) ones.push_back(f.one());
    one_ = product_index(sizes_, ones);
  }
  std::size_t size() const override { return size_; }
  Elem add(Elem a, Elem b) const override {
    return combine(a, b, [](const FiniteRing& r, Elem x, Elem y) { return r.add(x, y); });
  }
  Elem mul(Elem a, Elem b) const override {
    return combine(a, b, [](const FiniteRing& r, Elem x, Elem y) { return r.mul(x, y); });
  }
  Elem neg(Elem a) const override {
    return combine(a, a, [](const FiniteRing& r, Elem x, Elem) { return r.neg(x); });
  }
  Elem one() const override { return one_; }
  Literal decode(Elem a) const override {
    const auto digits = product_digits(sizes_, a);
    std::vector<Literal> items;
    for (std::size_t i = 0; i < factors_.size(); ++i) items.push_back(factors_[i].decode(digits[i]));
    return Literal::list(std::move(items));
  }
  Elem encode(const Literal& lit) const override {
    if (lit.is_integer() || lit.items().size() != factors_.size())
      throw SringError(ErrorKind::MalformedLiteral,
                       "expected a " + std::to_string(factors_.size()) +
                           "-component list for a product ring, got " + lit.to_string());
    std::vector<Elem> digits;
    for (std::size_t i = 0; i < factors_.size(); ++i) digits.push_back(factors_[i].encode(lit.items()[i]));
    return product_index(sizes_, digits);
  }

 private:
  template <class Op>
  Elem combine(Elem a, Elem b, Op op) const {
    Elem result = 0;
    std::size_t stride = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const std::size_t n = sizes_[i];
      const auto da = static_cast<Elem>((a / stride) % n);
      const auto db = static_cast<Elem>((b / stride) % n);
      result += static_cast<Elem>(op(factors_[i], da, db) * stride);
      stride *= n;
    }
    return result;
  }

  std::vector<FiniteRing> factors_;
  std::vector<std::size_t> sizes_;
  std::size_t size_ = 1;
  Elem one_ = 0;
};

class QuotientNode final : public detail::RingNode {
 public:
  QuotientNode(FiniteRing base, const ElementSet& ideal) : base_(std::move(base)) {
    constexpr Elem kUnset = ~Elem{0};
    coset_of_.assign(base_.size(), kUnset);
    const auto members = ideal.members();
    for (Elem x = 0; x < base_.size(); ++x) {
      if (coset_of_[x] != kUnset) continue;
      const auto q = static_cast<Elem>(rep_.size());
      rep_.push_back(x);
      for (Elem i : members) coset_of_[base_.add(x, i)] = q;
    }
  }
  std::size_t size() const override { return rep_.size(); }
  Elem add(Elem a, Elem b) const override { return coset_of_[base_.add(rep_[a], rep_[b])]; }
  Elem mul(Elem a, Elem b) const override { return coset_of_[base_.mul(rep_[a], rep_[b])]; }
  Elem neg(Elem a) const override { return coset_of_[base_.neg(rep_[a])]; }
  Elem one() const override { return coset_of_[base_.one()]; }
  Literal decode(Elem a) const override { return base_.decode(rep_[a]); }
  Elem encode(const Literal& lit) const override { return coset_of_[base_.encode(lit)]; }

  const std::vector<Elem>& projection() const { return coset_of_; }

 private:
  FiniteRing base_;
  std::vector<Elem> coset_of_;
  std::vector<Elem> rep_;
};

// (r, m_1, ..., m_k) with m_k in R/J_k; index = r * |M| + mixed-radix(m).
class IdealizationNode final : public detail::RingNode {
 public:
  IdealizationNode(FiniteRing base, std::vector<QuotientResult> components)
      : base_(std::move(base)), components_(std::move(components)) {
    module_size_ = 1;
    for (const auto& c : components_) {
      sizes_.push_back(c.ring.size());
      module_size_ *= c.ring.size();
    }
  }
  std::size_t size() const override { return base_.size() * module_size_; }
  Elem add(Elem a, Elem b) const override {
    const Elem r = base_.add(a / module_size_, b / module_size_);
    Elem m = 0;
    std::size_t stride = 1;
    for (std::size_t k = components_.size(); k-- > 0;) {
      const auto& q = components_[k].ring;
      const auto ma = static_cast<Elem>((a % module_size_ / stride) % sizes_[k]);
      const auto mb = static_cast<Elem>((b % module_size_ / stride) % sizes_[k]);
      m += static_cast<Elem>(q.add(ma, mb) * stride);
      stride *= sizes_[k];
    }
    return static_cast<Elem>(r * module_size_ + m);
  }
  Elem mul(Elem a, Elem b) const override {
    const Elem ra = a / static_cast<Elem>(module_size_);
    const Elem rb = b / static_cast<Elem>(module_size_);
    const Elem r = base_.mul(ra, rb);
    Elem m = 0;
    std::size_t stride = 1;
    for (std::size_t k = components_.size(); k-- > 0;) {
      const auto& q = components_[k].ring;
      const auto& proj = components_[k].projection;
      const auto ma = static_cast<Elem>((a % module_size_ / stride) % sizes_[k]);
      const auto mb = static_cast<Elem>((b % module_size_ / stride) % sizes_[k]);
      const Elem term = q.add(q.mul(proj[ra], mb), q.mul(proj[rb], ma));
      m += static_cast<Elem>(term * stride);
      stride *= sizes_[k];
    }
    return static_cast<Elem>(r * module_size_ + m);
  }
  Elem neg(Elem a) const override {
    const Elem r = base_.neg(a / static_cast<Elem>(module_size_));
    Elem m = 0;
    std::size_t stride = 1;
    for (std::size_t k = components_.size(); k-- > 0;) {
      const auto ma = static_cast<Elem>((a % module_size_ / stride) % sizes_[k]);
      m += static_cast<Elem>(components_[k].ring.neg(ma) * stride);
      stride *= sizes_[k];
    }
    return static_cast<Elem>(r * module_size_ + m);
  }
  Elem one() const override { return static_cast<Elem>(base_.one() * module_size_); }
  Literal decode(Elem a) const override {
    std::vector<Literal> module_parts;
    const auto digits = product_digits(sizes_, static_cast<Elem>(a % module_size_));
    for (std::size_t k = 0; k < components_.size(); ++k)
      module_parts.push_back(components_[k].ring.decode(digits[k]));
    return Literal::list({base_.decode(static_cast<Elem>(a / module_size_)),
                          Literal::list(std::move(module_parts))});
  }
  Elem encode(const Literal& lit) const override {
    if (lit.is_integer() || lit.items().size() != 2 || lit.items()[1].is_integer() ||
        lit.items()[1].items().size() != components_.size())
      throw SringError(ErrorKind::MalformedLiteral,
                       "expected [r, [m_1..m_" + std::to_string(components_.size()) +
                           "]] for an idealization, got " + lit.to_string());
    const Elem r = base_.encode(lit.items()[0]);
    std::vector<Elem> digits;
    for (std::size_t k = 0; k < components_.size(); ++k)
      digits.push_back(components_[k].ring.encode(lit.items()[1].items()[k]));
    return static_cast<Elem>(r * module_size_ + product_index(sizes_, digits));
  }

 private:
  FiniteRing base_;
  std::vector<QuotientResult> components_;
  std::vector<std::size_t> sizes_;
  std::size_t module_size_ = 1;
};

// Upper-triangular 3x3 matrices with constant diagonal, stored as (a, b, c, d):
//   [a b c]
//   [0 a d]
//   [0 0 a]
class TriangularENode final : public detail::RingNode {
 public:
  explicit TriangularENode(FiniteRing base) : base_(std::move(base)), n_(base_.size()) {}
  std::size_t size() const override { return n_ * n_ * n_ * n_; }
  bool commutative() const override { return false; }

  Elem add(Elem x, Elem y) const override {
    const auto a = split(x), b = split(y);
    return join({base_.add(a[0], b[0]), base_.add(a[1], b[1]), base_.add(a[2], b[2]),
                 base_.add(a[3], b[3])});
  }
  Elem mul(Elem x, Elem y) const override {
    const auto p = split(x), q = split(y);
    const auto& r = base_;
    // (a1 a2, a1 b2 + b1 a2, a1 c2 + b1 d2 + c1 a2, a1 d2 + d1 a2)
    return join({r.mul(p[0], q[0]),
                 r.add(r.mul(p[0], q[1]), r.mul(p[1], q[0])),
                 r.add(r.add(r.mul(p[0], q[2]), r.mul(p[1], q[3])), r.mul(p[2], q[0])),
                 r.add(r.mul(p[0], q[3]), r.mul(p[3], q[0]))});
  }
  Elem neg(Elem x) const override {
    const auto a = split(x);
    return join({base_.neg(a[0]), base_.neg(a[1]), base_.neg(a[2]), base_.neg(a[3])});
  }
  Elem one() const override { return join({base_.one(), 0, 0, 0}); }
  Literal decode(Elem x) const override {
    const auto a = split(x);
    return Literal::list({base_.decode(a[0]), base_.decode(a[1]), base_.decode(a[2]),
                          base_.decode(a[3])});
  }
  Elem encode(const Literal& lit) const override {
    if (lit.is_integer() || lit.items().size() != 4)
      throw SringError(ErrorKind::MalformedLiteral,
                       "expected [a,b,c,d] for a triangular matrix, got " + lit.to_string());
    return join({base_.encode(lit.items()[0]), base_.encode(lit.items()[1]),
                 base_.encode(lit.items()[2]), base_.encode(lit.items()[3])});
  }

 private:
  std::array<Elem, 4> split(Elem x) const {
    const auto n = static_cast<Elem>(n_);
    return {x / (n * n * n), (x / (n * n)) % n, (x / n) % n, x % n};
  }
  Elem join(std::array<Elem, 4> a) const {
    const auto n = static_cast<Elem>(n_);
    return ((a[0] * n + a[1]) * n + a[2]) * n + a[3];
  }

  FiniteRing base_;
  std::size_t n_;
};

void require_cap(std::uint64_t size, const RingOptions& options, const std::string& what) {
  if (size > options.size_cap)
    throw SringError(ErrorKind::SizeCap, what + " has " + std::to_string(size) +
                                             " elements, above the cap of " +
                                             std::to_string(options.size_cap));
}

void require_commutative(const FiniteRing& ring, const std::string& what) {
  if (!ring.is_commutative())
    throw SringError(ErrorKind::NonCommutative,
                     what + " requires a commutative base, got " + ring.describe());
}

std::vector<Elem> encode_all(const FiniteRing& ring, const std::vector<Literal>& lits) {
  std::vector<Elem> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(ring.encode(l));
  return out;
}

}  // namespace

FiniteRing make_ring(std::shared_ptr<detail::RingNode> node, RingExpression expr) {
  auto impl = std::make_shared<detail::RingImpl>();
  impl->node = std::move(node);
  impl->expression = std::move(expr);
  const detail::RingNode& n = *impl->node;
  const std::size_t size = n.size();
  if (size <= kTableLimit) {
    impl->add.resize(size * size);
    impl->mul.resize(size * size);
    impl->neg.resize(size);
    for (Elem a = 0; a < size; ++a) {
      impl->neg[a] = static_cast<std::uint16_t>(n.neg(a));
      for (Elem b = 0; b < size; ++b) {
        impl->add[a * size + b] = static_cast<std::uint16_t>(n.add(a, b));
        impl->mul[a * size + b] = static_cast<std::uint16_t>(n.mul(a, b));
      }
    }
  }
  FiniteRing ring;
  ring.node_ = impl->node.get();
  ring.size_ = size;
  ring.one_ = n.one();
  if (!impl->add.empty()) {
    ring.add_table_ = impl->add.data();
    ring.mul_table_ = impl->mul.data();
    ring.neg_table_ = impl->neg.data();
  }
  ring.impl_ = std::move(impl);
  if (ring.one_ == ring.zero())
    throw SringError(ErrorKind::MalformedExpression,
                     "construction " + ring.describe() + " collapses to the zero ring");
  return ring;
}

const RingExpression& FiniteRing::expression() const { return impl_->expression; }

Elem FiniteRing::pow(Elem a, std::uint64_t n) const {
  Elem result = one_;
  Elem base = a;
  while (n > 0) {
    if ((n & 1U) != 0) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

std::vector<Elem> product_digits(std::span<const std::size_t> factor_sizes, Elem e) {
  std::vector<Elem> digits(factor_sizes.size());
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(e % factor_sizes[i]);
    e = static_cast<Elem>(e / factor_sizes[i]);
  }
  return digits;
}

Elem product_index(std::span<const std::size_t> factor_sizes, std::span<const Elem> digits) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) index = index * factor_sizes[i] + digits[i];
  return static_cast<Elem>(index);
}

void extend_ideal_set(const FiniteRing& ring, ElementSet& ideal, Elem g) {
  if (ideal.contains(g)) return;
  ElementSet products = ring.empty_set();
  for (Elem r = 0; r < ring.size(); ++r) products.insert(ring.mul(r, g));
  // Additive closure: H + <y> is the union of H + k*y until k*y lands in H.
  products.for_each([&](Elem y) {
    if (ideal.contains(y)) return;
    const ElementSet before = ideal;
    const auto old_members = before.members();
    for (Elem multiple = y; !before.contains(multiple); multiple = ring.add(multiple, y))
      for (Elem h : old_members) ideal.insert(ring.add(h, multiple));
  });
}

ElementSet generate_ideal_set(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet closure = ring.empty_set();
  closure.insert(ring.zero());
  for (Elem g : gens) extend_ideal_set(ring, closure, g);
  return closure;
}

QuotientResult quotient_ring(const FiniteRing& base, const ElementSet& ideal) {
  require_commutative(base, "quotient");
  auto node = std::make_shared<QuotientNode>(base, ideal);
  // Generator literals for provenance: a greedy basis of the ideal.
  std::vector<Literal> gens;
  std::vector<Elem> basis;
  ElementSet spanned = base.empty_set();
  spanned.insert(base.zero());
  ideal.for_each([&](Elem x) {
    if (spanned.contains(x)) return;
    basis.push_back(x);
    extend_ideal_set(base, spanned, x);
    gens.push_back(base.decode(x));
  });
  auto projection = node->projection();
  return {make_ring(std::move(node), RingExpression::quotient(base.expression(), std::move(gens))),
          std::move(projection)};
}

FiniteRing product_ring(const std::vector<FiniteRing>& factors) {
  if (factors.empty())
    throw SringError(ErrorKind::MalformedExpression, "product needs at least one factor");
  std::vector<RingExpression> exprs;
  for (const auto& f : factors) exprs.push_back(f.expression());
  return make_ring(std::make_shared<ProductNode>(factors), RingExpression::product(std::move(exprs)));
}

FiniteRing build_ring(const RingExpression& expr, const RingOptions& options) {
  using Kind = RingExpression::Kind;
  switch (expr.kind) {
    case Kind::ZMod: {
      if (expr.modulus < 2)
        throw SringError(ErrorKind::InvalidModulus,
                         "Z/nZ requires n >= 2, got " + std::to_string(expr.modulus));
      require_cap(expr.modulus, options, expr.describe());
      return make_ring(std::make_shared<ZModNode>(expr.modulus), expr);
    }
    case Kind::Product: {
      if (expr.operands.empty())
        throw SringError(ErrorKind::MalformedExpression, "product needs at least one factor");
      std::vector<FiniteRing> factors;
      std::uint64_t size = 1;
      for (const auto& op : expr.operands) {
        factors.push_back(build_ring(op, options));
        size *= factors.back().size();
        require_cap(size, options, expr.describe());
      }
      return make_ring(std::make_shared<ProductNode>(std::move(factors)), expr);
    }
    case Kind::Quotient: {
      if (expr.operands.size() != 1)
        throw SringError(ErrorKind::MalformedExpression, "quotient needs exactly one base");
      const FiniteRing base = build_ring(expr.base(), options);
      require_commutative(base, "quotient");
      const auto gens = encode_all(base, expr.ideal);
      const ElementSet ideal = generate_ideal_set(base, gens);
      return make_ring(std::make_shared<QuotientNode>(base, ideal), expr);
    }
    case Kind::Idealization: {
      if (expr.operands.size() != 1 || expr.module.cyclic.empty())
        throw SringError(ErrorKind::MalformedExpression,
                         "idealization needs one base and at least one cyclic component");
      const FiniteRing base = build_ring(expr.base(), options);
      require_commutative(base, "idealization");
      std::vector<QuotientResult> components;
      std::uint64_t size = base.size();
      for (const auto& j : expr.module.cyclic) {
        const auto gens = encode_all(base, j);
        auto q = std::make_shared<QuotientNode>(base, generate_ideal_set(base, gens));
        size *= q->size();
        require_cap(size, options, expr.describe());
        if (q->size() == 1)
          throw SringError(ErrorKind::MalformedExpression,
                           "cyclic component R/J with J = R is the zero module");
        auto projection = q->projection();
        components.push_back(
            {make_ring(std::move(q), RingExpression::quotient(base.expression(), j)),
             std::move(projection)});
      }
      return make_ring(std::make_shared<IdealizationNode>(base, std::move(components)), expr);
    }
    case Kind::TriangularE: {
      if (expr.operands.size() != 1)
        throw SringError(ErrorKind::MalformedExpression, "E(R) needs exactly one base");
      const FiniteRing base = build_ring(expr.base(), options);
      require_commutative(base, "E(R)");
      const std::uint64_t n = base.size();
      require_cap(n * n * n * n, options, expr.describe());
      return make_ring(std::make_shared<TriangularENode>(base), expr);
    }
  }
  throw SringError(ErrorKind::MalformedExpression, "unknown ring construction");
}

// ---------------------------------------------------------------------------
// Element classification

std::vector<std::optional<std::uint32_t>> nilpotent_profile(const FiniteRing& ring) {
  std::vector<std::optional<std::uint32_t>> profile(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) {
    Elem power = a;
    // Powers of a cycle within |R| steps, so a non-nilpotent never hits 0 here.
    for (std::uint32_t n = 1; n <= ring.size(); ++n) {
      if (power == ring.zero()) {
        profile[a] = n;
        break;
      }
      power = ring.mul(power, a);
    }
  }
  return profile;
}

ElementSet nilpotent_set(const FiniteRing& ring) {
  ElementSet out = ring.empty_set();
  const auto profile = nilpotent_profile(ring);
  for (Elem a = 0; a < ring.size(); ++a)
    if (profile[a]) out.insert(a);
  return out;
}

ElementSet zero_divisor_set(const FiniteRing& ring) {
  ElementSet out = ring.empty_set();
  for (Elem a = 1; a < ring.size(); ++a)
    for (Elem b = 1; b < ring.size(); ++b)
      if (ring.mul(a, b) == ring.zero()) {
        out.insert(a);
        break;
      }
  return out;
}

ElementSet unit_set(const FiniteRing& ring) {
  ElementSet out = ring.empty_set();
  for (Elem a = 0; a < ring.size(); ++a)
    for (Elem b = 0; b < ring.size(); ++b)
      if (ring.mul(a, b) == ring.one()) {
        out.insert(a);
        break;
      }
  return out;
}

bool is_field(const FiniteRing& ring) {
  return ring.is_commutative() && unit_set(ring).size() == ring.size() - 1;
}

bool is_reduced(const FiniteRing& ring) { return nilpotent_set(ring).size() == 1; }

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

struct LawChecker {
  const FiniteRing& r;
  bool commutative;

  // Returns the name of the first failing law, or nullptr.
  const char* operator()(Elem a, Elem b, Elem c) const {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity";
    if (r.add(a, b) != r.add(b, a)) return "additive commutativity";
    if (r.add(a, r.zero()) != a) return "additive identity";
    if (r.add(a, r.neg(a)) != r.zero()) return "additive inverse";
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity";
    if (commutative && r.mul(a, b) != r.mul(b, a)) return "multiplicative commutativity";
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return "multiplicative identity";
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
    return nullptr;
  }
};

std::string describe_failure(const FiniteRing& r, const char* law, Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << law << " fails at (" << r.decode(a).to_string() << ", " << r.decode(b).to_string() << ", "
     << r.decode(c).to_string() << ")";
  return os.str();
}

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t seed,
                              std::size_t exhaustive_limit, std::uint64_t samples) {
  AxiomReport report;
  if (ring.zero() == ring.one()) {
    report.ok = false;
    report.failure = "zero equals one";
    return report;
  }
  const LawChecker check{ring, ring.is_commutative()};
  const auto n = static_cast<Elem>(ring.size());
  if (ring.size() <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          ++report.triples_checked;
          if (const char* law = check(a, b, c)) {
            report.ok = false;
            report.failure = describe_failure(ring, law, a, b, c);
            return report;
          }
        }
    return report;
  }
  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto a = static_cast<Elem>(rng() % n);
    const auto b = static_cast<Elem>(rng() % n);
    const auto c = static_cast<Elem>(rng() % n);
    ++report.triples_checked;
    if (const char* law = check(a, b, c)) {
      report.ok = false;
      report.failure = describe_failure(ring, law, a, b, c);
      return report;
    }
  }
  return report;
}

bool check_module_axioms(const FiniteRing& base, const ModuleSpec& module,
                         const RingOptions& options) {
  constexpr std::uint64_t kExhaustiveLimit = 20'000'000;
  std::mt19937_64 rng(0x5eed);
  for (const auto& j : module.cyclic) {
    const auto gens = encode_all(base, j);
    const auto q = quotient_ring(base, generate_ideal_set(base, gens));
    require_cap(q.ring.size(), options, "module component");
    const auto act = [&](Elem r, Elem m) { return q.ring.mul(q.projection[r], m); };
    const auto law = [&](Elem r, Elem s, Elem m, Elem p) {
      const auto& M = q.ring;
      return act(r, M.add(m, p)) == M.add(act(r, m), act(r, p)) &&
             act(base.add(r, s), m) == M.add(act(r, m), act(s, m)) &&
             act(base.mul(r, s), m) == act(r, act(s, m)) && act(base.one(), m) == m;
    };
    const std::uint64_t nr = base.size();
    const std::uint64_t nm = q.ring.size();
    if (nr * nr * nm * nm <= kExhaustiveLimit) {
      for (Elem r = 0; r < nr; ++r)
        for (Elem s = 0; s < nr; ++s)
          for (Elem m = 0; m < nm; ++m)
            for (Elem p = 0; p < nm; ++p)
              if (!law(r, s, m, p)) return false;
    } else {
      for (int t = 0; t < 100000; ++t)
        if (!law(static_cast<Elem>(rng() % nr), static_cast<Elem>(rng() % nr),
                 static_cast<Elem>(rng() % nm), static_cast<Elem>(rng() % nm)))
          return false;
    }
  }
  return true;
}

}  // namespace sring
