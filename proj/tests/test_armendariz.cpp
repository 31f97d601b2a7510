#include "doctest.h"
#include "oracles.hpp"

#include <cstdlib>

#include "sring/armendariz.hpp"

using namespace sring;
using E = RingExpression;

namespace {

ArmendarizConfig exhaustive(std::size_t degree, std::uint64_t budget = 3000000) {
  ArmendarizConfig c;
  c.degree = degree;
  c.mode = SearchMode::Exhaustive;
  c.budget = budget;
  return c;
}

ArmendarizConfig sampled(std::size_t degree, std::uint64_t budget, std::uint64_t seed = 42) {
  ArmendarizConfig c;
  c.degree = degree;
  c.mode = SearchMode::Sampled;
  c.budget = budget;
  c.seed = seed;
  return c;
}

Literal lst(std::vector<Literal> items) { return Literal::list(std::move(items)); }

// Z2[x,y]/(x^2, y^2) realized as A(+)A with A = Z2(+)Z2.
FiniteRing dual_square() {
  return build_ring(E::self_idealization(E::self_idealization(E::zmod(2))));
}

class ThreadsEnv {
 public:
  explicit ThreadsEnv(const char* value) { setenv("SRING_THREADS", value, 1); }
  ~ThreadsEnv() { unsetenv("SRING_THREADS"); }
};

}  // namespace

TEST_CASE("exhaustive pair counts and witnesses match brute force") {
  struct Case {
    E expr;
    std::size_t degree;
  };
  const std::vector<Case> cases = {
      {E::zmod(4), 1},  {E::zmod(6), 1},  {E::zmod(8), 1},
      {E::zmod(12), 1}, {E::zmod(4), 2},  {E::self_idealization(E::zmod(2)), 1},
      {E::product({E::zmod(2), E::zmod(4)}), 1},
      {E::triangular_e(E::zmod(2)), 1},
  };
  for (const auto& c : cases) {
    const FiniteRing r = build_ring(c.expr);
    INFO(r.describe() << " D=" << c.degree);
    std::vector<Elem> w;
    for (Elem x = 1; x < r.size(); ++x) w.push_back(x);
    const auto v = is_u_s_armendariz_up_to(r, w, exhaustive(c.degree));
    const auto o = oracle::armendariz_brute(r, c.degree, w);
    CHECK(v.pairs_examined == o.pairs);
    CHECK(v.nontrivial_pairs == o.nontrivial);
    CHECK(v.uniform_witness == o.uniform);
    CHECK(v.uniform_holds == o.uniform.has_value());
  }
}

TEST_CASE("Z12 with S = {1, 4} at degree 2") {
  const FiniteRing r = build_ring(E::zmod(12));
  const MultiplicativeSet s = mult_closure(r, std::vector<Elem>{4});
  const auto v = is_u_s_armendariz_up_to(r, s, exhaustive(2, 2985984));
  // Frozen from the brute-force oracle (all 12^6 coefficient pairs).
  CHECK(v.pairs_examined == 9328);
  CHECK(v.nontrivial_pairs == 5873);
  CHECK(v.uniform_holds);
  CHECK(v.per_pair_holds);
  CHECK(v.uniform_witness == Elem{1});
  CHECK(v.degree == 2);
  CHECK(v.mode == SearchMode::Exhaustive);
  const auto o = oracle::armendariz_brute(r, 2, s.elements());
  CHECK(o.pairs == 9328);
  CHECK(o.nontrivial == 5873);
}

TEST_CASE("non-Armendariz ring: (x + yt)^2 = 0 with xy != 0") {
  const FiniteRing r = dual_square();
  REQUIRE(r.size() == 16);
  const Elem x = r.encode(lst({lst({0, lst({1})}), lst({lst({0, lst({0})})})}));
  const Elem y = r.encode(lst({lst({0, lst({0})}), lst({lst({1, lst({0})})})}));
  REQUIRE(r.mul(x, y) != r.zero());

  const std::vector<Elem> one{r.one()};
  const auto v = is_u_s_armendariz_up_to(r, one, exhaustive(1));
  CHECK_FALSE(v.uniform_holds);
  CHECK_FALSE(v.per_pair_holds);
  REQUIRE(v.violation.has_value());
  CHECK(v.violation->pair.f == Polynomial({x, y}));
  CHECK(v.violation->pair.g == Polynomial({x, y}));
  CHECK(v.violation->i == 0);
  CHECK(v.violation->j == 1);
  // Re-check the reported pair by convolution.
  const auto prod = oracle::convolve(r, v.violation->pair.f.coeffs, v.violation->pair.g.coeffs);
  for (Elem c : prod) CHECK(c == r.zero());
  CHECK_FALSE(oracle::armendariz_brute(r, 1, one).uniform.has_value());

  // The socle element xy kills every coefficient product.
  std::vector<Elem> all;
  for (Elem e = 1; e < r.size(); ++e) all.push_back(e);
  const auto w = is_u_s_armendariz_up_to(r, all, exhaustive(1));
  CHECK(w.uniform_holds);
  CHECK(w.uniform_witness == r.mul(x, y));
}

TEST_CASE("per-pair and uniform readings can differ") {
  // Witnesses {x, y} in Z2[x,y]/(x^2,y^2): each pair may be killed by one of
  // them while no single one kills every pair.
  const FiniteRing r = dual_square();
  const Elem x = r.encode(lst({lst({0, lst({1})}), lst({lst({0, lst({0})})})}));
  const Elem y = r.encode(lst({lst({0, lst({0})}), lst({lst({1, lst({0})})})}));
  std::vector<Elem> w{std::min(x, y), std::max(x, y)};
  const auto v = is_u_s_armendariz_up_to(r, w, exhaustive(1));
  const auto o = oracle::armendariz_brute(r, 1, w);
  CHECK(v.uniform_holds == o.uniform.has_value());
  if (!v.uniform_holds) CHECK(v.uniform_breaking_pair.has_value());
  std::uint64_t tallied = 0;
  for (const auto& [s, n] : v.per_pair_witness_counts) tallied += n;
  if (v.per_pair_holds) CHECK(tallied == v.pairs_examined);
}

TEST_CASE("every streamed pair multiplies to zero") {
  const FiniteRing e = build_ring(E::triangular_e(E::zmod(4)));
  const FiniteRing base = build_ring(E::zmod(4));
  ArmendarizConfig c = sampled(1, 2000);
  c.coefficient_pool = triangular_zero_divisor_pool(e, base);
  std::uint64_t visited = 0;
  const auto stats = zero_product_poly_pairs(e, c, [&](const Polynomial& f, const Polynomial& g) {
    ++visited;
    if (f.is_zero() || g.is_zero()) return;
    for (Elem x : oracle::convolve(e, f.coeffs, g.coeffs)) CHECK(x == e.zero());
  });
  CHECK(visited == stats.pairs);
  CHECK(stats.pairs == 2000);
  CHECK(stats.nontrivial > 0);
}

TEST_CASE("results do not depend on the worker count") {
  const FiniteRing e = build_ring(E::triangular_e(E::zmod(6)));
  const FiniteRing base = build_ring(E::zmod(6));
  const auto w = constant_quadruples(e, base, std::vector<Elem>{1, 2, 4});
  ArmendarizConfig c = sampled(1, 20000);
  c.coefficient_pool = triangular_zero_divisor_pool(e, base);
  const FiniteRing z12 = build_ring(E::zmod(12));
  const std::vector<Elem> zw{1, 4};

  std::vector<ArmendarizVerdict> runs;
  std::vector<ArmendarizVerdict> exhaustive_runs;
  for (const char* threads : {"1", "3", "8"}) {
    ThreadsEnv env(threads);
    runs.push_back(is_u_s_armendariz_up_to(e, w, c));
    exhaustive_runs.push_back(is_u_s_armendariz_up_to(z12, zw, exhaustive(2)));
  }
  for (const auto& v : runs) {
    CHECK(v.pairs_examined == runs[0].pairs_examined);
    CHECK(v.nontrivial_pairs == runs[0].nontrivial_pairs);
    CHECK(v.uniform_witness == runs[0].uniform_witness);
    CHECK(v.per_pair_witness_counts == runs[0].per_pair_witness_counts);
  }
  for (const auto& v : exhaustive_runs) {
    CHECK(v.pairs_examined == exhaustive_runs[0].pairs_examined);
    CHECK(v.per_pair_witness_counts == exhaustive_runs[0].per_pair_witness_counts);
  }
}

TEST_CASE("sampled stream is a function of the seed") {
  const FiniteRing r = build_ring(E::zmod(36));
  const std::vector<Elem> w{1};
  const auto a = is_u_s_armendariz_up_to(r, w, sampled(1, 5000, 7));
  const auto b = is_u_s_armendariz_up_to(r, w, sampled(1, 5000, 7));
  CHECK(a.pairs_examined == b.pairs_examined);
  CHECK(a.nontrivial_pairs == b.nontrivial_pairs);
  CHECK(a.seed == 7);
  CHECK(a.mode == SearchMode::Sampled);
  // Z/n is Armendariz.
  CHECK(a.uniform_holds);
}

TEST_CASE("E(Z12) with constant-diagonal witnesses generated by 4") {
  const FiniteRing base = build_ring(E::zmod(12));
  const FiniteRing e = build_ring(E::triangular_e(E::zmod(12)), RingOptions{20736});
  REQUIRE(e.size() == 20736);
  CHECK_FALSE(e.is_commutative());
  const MultiplicativeSet s = mult_closure(base, std::vector<Elem>{4});
  const auto w = constant_quadruples(e, base, s.elements());
  CHECK(w.size() == 2);
  CHECK(e.decode(w[1]) == lst({4, 4, 4, 4}));
  ArmendarizConfig c = sampled(1, 100000);
  c.coefficient_pool = triangular_zero_divisor_pool(e, base);
  const auto v = is_u_s_armendariz_up_to(e, w, c);
  CHECK(v.pairs_examined == 100000);
  CHECK(v.uniform_holds);
  CHECK_FALSE(v.violation.has_value());
  CHECK(v.uniform_witness == e.encode(lst({4, 4, 4, 4})));
}

TEST_CASE("budget and degenerate witnesses") {
  const FiniteRing r = build_ring(E::zmod(24));
  try {
    is_u_s_armendariz_up_to(r, std::vector<Elem>{1}, exhaustive(1, 100000));
    FAIL("expected BudgetExhausted");
  } catch (const SringError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExhausted);
  }
  const auto v = is_u_s_armendariz_up_to(r, std::vector<Elem>{0, 1}, exhaustive(1, 1000000));
  CHECK(v.degenerate);
  CHECK(v.uniform_holds);
  CHECK(v.pairs_examined == 0);
}
