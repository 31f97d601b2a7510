#include "doctest.h"
#include "oracles.hpp"

#include <numeric>

#include "sring/polynomial.hpp"
#include "sring/ring.hpp"

using namespace sring;
using E = RingExpression;

namespace {

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const SringError& e) {
    return e.kind();
  }
  FAIL("no SringError thrown");
  return ErrorKind::Usage;
}

Literal lst(std::vector<Literal> items) { return Literal::list(std::move(items)); }

}  // namespace

TEST_CASE("Z/n operations agree with integer arithmetic") {
  for (std::uint64_t n : {2u, 7u, 12u, 24u, 97u, 300u}) {
    const FiniteRing r = build_ring(E::zmod(n));
    REQUIRE(r.size() == n);
    CHECK(r.one() == 1);
    for (Elem a = 0; a < n; a += (n > 50 ? 7 : 1))
      for (Elem b = 0; b < n; b += (n > 50 ? 5 : 1)) {
        CHECK(r.add(a, b) == (a + b) % n);
        CHECK(r.mul(a, b) == std::uint64_t{a} * b % n);
      }
  }
}

TEST_CASE("literals reduce modulo n and round-trip") {
  const FiniteRing r = build_ring(E::zmod(24));
  CHECK(r.encode(26) == 2);
  CHECK(r.encode(-1) == 23);
  for (Elem a = 0; a < 24; ++a) CHECK(r.encode(r.decode(a)) == a);
  CHECK(error_kind([&] { r.encode(lst({1, 2})); }) == ErrorKind::MalformedLiteral);
}

TEST_CASE("invalid modulus and size cap") {
  CHECK(error_kind([] { build_ring(E::zmod(1)); }) == ErrorKind::InvalidModulus);
  CHECK(error_kind([] { build_ring(E::zmod(5000)); }) == ErrorKind::SizeCap);
  CHECK(error_kind([] { build_ring(E::zmod(30), RingOptions{16}); }) == ErrorKind::SizeCap);
  CHECK(build_ring(E::zmod(5000), RingOptions{5000}).size() == 5000);
}

TEST_CASE("product ring: first factor is the most significant digit") {
  const FiniteRing r = build_ring(E::product({E::zmod(3), E::zmod(4)}));
  REQUIRE(r.size() == 12);
  const Elem x = r.encode(lst({2, 1}));
  CHECK(x == 2 * 4 + 1);
  CHECK(r.decode(x) == lst({2, 1}));
  const Elem y = r.encode(lst({2, 3}));
  CHECK(r.decode(r.mul(x, y)) == lst({1, 3}));
  CHECK(r.decode(r.add(x, y)) == lst({1, 0}));
  CHECK(r.one() == r.encode(lst({1, 1})));
}

TEST_CASE("quotient Z24/(12) behaves like Z12") {
  const FiniteRing q = build_ring(E::quotient(E::zmod(24), {12}));
  REQUIRE(q.size() == 12);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) {
      CHECK(q.add(a, b) == (a + b) % 12);
      CHECK(q.mul(a, b) == a * b % 12);
    }
  // Cosets are indexed by least representative.
  CHECK(q.encode(13) == 1);
  const FiniteRing whole = build_ring(E::zmod(6));
  const QuotientResult qr = quotient_ring(whole, generate_ideal_set(whole, std::vector<Elem>{}));
  CHECK(qr.ring.size() == 6);
}

TEST_CASE("idealization multiplies as a square-zero extension") {
  // Z6 (+) Z6/(2): module Z2.
  const FiniteRing r = build_ring(E::idealization(E::zmod(6), ModuleSpec{{{2}}}));
  REQUIRE(r.size() == 12);
  for (std::int64_t r1 = 0; r1 < 6; ++r1)
    for (std::int64_t m1 = 0; m1 < 2; ++m1)
      for (std::int64_t r2 = 0; r2 < 6; ++r2)
        for (std::int64_t m2 = 0; m2 < 2; ++m2) {
          const Elem a = r.encode(lst({r1, lst({m1})}));
          const Elem b = r.encode(lst({r2, lst({m2})}));
          const Literal want = lst({r1 * r2 % 6, lst({(r1 * m2 + r2 * m1) % 2})});
          CHECK(r.decode(r.mul(a, b)) == want);
        }
  const FiniteRing rr = build_ring(E::self_idealization(E::zmod(4)));
  CHECK(rr.size() == 16);
  const Elem eps = rr.encode(lst({0, lst({1})}));
  CHECK(rr.mul(eps, eps) == rr.zero());
}

TEST_CASE("triangular quadruple ring E(R)") {
  const FiniteRing e = build_ring(E::triangular_e(E::zmod(2)));
  REQUIRE(e.size() == 16);
  CHECK_FALSE(e.is_commutative());
  const auto axioms = check_ring_axioms(e);
  CHECK(axioms.ok);
  CHECK(axioms.exhaustive);
  bool found_noncommuting = false;
  for (Elem a = 0; a < e.size(); ++a)
    for (Elem b = 0; b < e.size(); ++b) found_noncommuting |= e.mul(a, b) != e.mul(b, a);
  CHECK(found_noncommuting);
  // Index ((a*n + b)*n + c)*n + d.
  CHECK(e.encode(lst({1, 0, 1, 1})) == 8 + 2 + 1);
}

TEST_CASE("ring axioms hold for every construction") {
  const std::vector<E> exprs = {
      E::zmod(12),
      E::product({E::zmod(2), E::zmod(3), E::zmod(4)}),
      E::quotient(E::product({E::zmod(4), E::zmod(6)}), {lst({2, 3})}),
      E::idealization(E::zmod(4), ModuleSpec{{{0}, {2}}}),
      E::triangular_e(E::zmod(3)),
  };
  for (const auto& x : exprs) {
    const FiniteRing r = build_ring(x);
    INFO(r.describe());
    CHECK(check_ring_axioms(r).ok);
  }
  CHECK(check_module_axioms(build_ring(E::zmod(6)), ModuleSpec{{{2}, {3}}}));
}

TEST_CASE("nilpotents, units and zero divisors against oracles") {
  for (std::uint32_t n = 2; n <= 72; ++n) {
    const FiniteRing r = build_ring(E::zmod(n));
    INFO("n = " << n);
    const auto nil = nilpotent_set(r).members();
    CHECK(oracle::Set(nil.begin(), nil.end()) == oracle::zn_nilpotents(n));
    const auto units = unit_set(r).members();
    CHECK(oracle::Set(units.begin(), units.end()) == oracle::zn_units(n));
    // Finite rings: every nonzero element is a unit or a zero divisor, never both.
    ElementSet covered = unit_set(r) | zero_divisor_set(r);
    covered.insert(0);
    CHECK(covered == r.all_elements());
    CHECK_FALSE(unit_set(r).intersects(zero_divisor_set(r)));
    CHECK(is_reduced(r) == (oracle::zn_nilpotents(n).size() == 1));
  }
  const FiniteRing r = build_ring(E::idealization(E::zmod(6), ModuleSpec{{{0}}}));
  const auto zd = zero_divisor_set(r).members();
  CHECK(oracle::Set(zd.begin(), zd.end()) == oracle::zero_divisors(r));
}

TEST_CASE("Z24 nilpotent set") {
  const FiniteRing r = build_ring(E::zmod(24));
  CHECK(nilpotent_set(r).members() == std::vector<Elem>{0, 6, 12, 18});
  const auto profile = nilpotent_profile(r);
  CHECK(profile[6] == 3u);
  CHECK(profile[12] == 2u);
  CHECK_FALSE(profile[5].has_value());
}

TEST_CASE("generated ideals match the fixpoint oracle") {
  const std::vector<E> exprs = {E::zmod(36), E::product({E::zmod(4), E::zmod(6)}),
                                E::self_idealization(E::zmod(4))};
  for (const auto& x : exprs) {
    const FiniteRing r = build_ring(x);
    for (Elem g = 0; g < r.size(); g += 3)
      for (Elem h = 0; h < r.size(); h += 5) {
        const std::vector<Elem> gens{g, h};
        const auto got = generate_ideal_set(r, gens).members();
        CHECK(oracle::Set(got.begin(), got.end()) == oracle::ideal_generated(r, gens));
      }
  }
}

TEST_CASE("polynomial product is the coefficient convolution") {
  const FiniteRing r = build_ring(E::zmod(12));
  const Polynomial f({2, 3, 4});
  const Polynomial g({6, 0, 1});
  const Polynomial p = poly_multiply(r, f, g, 2);
  const auto want = oracle::convolve(r, f.coeffs, g.coeffs);
  CHECK(p == Polynomial(want));
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(error_kind([&] { poly_multiply(r, f, g, 1); }) == ErrorKind::DegreeOverflow);
}
