#pragma once

// Brute-force re-implementations used as test oracles. Nothing here calls the
// library's ideal, closure or S-theory code: Z/n oracles use plain integer
// arithmetic, generic oracles use only FiniteRing::add/mul and definitions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sring/ring.hpp"

namespace oracle {

using sring::Elem;
using sring::FiniteRing;
using Set = std::set<std::uint32_t>;

// ---------------------------------------------------------------------------
// Z/n with integers

inline std::uint64_t pow_mod(std::uint64_t a, unsigned k, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  for (unsigned i = 0; i < k; ++i) r = r * a % n;
  return r;
}

inline Set zn_nilpotents(std::uint32_t n) {
  Set out;
  for (std::uint32_t a = 0; a < n; ++a)
    if (pow_mod(a, 64, n) == 0) out.insert(a);
  return out;
}

inline Set zn_units(std::uint32_t n) {
  Set out;
  for (std::uint32_t a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1) out.insert(a);
  return out;
}

/// Powers and products of the generators, together with 1.
inline Set zn_closure(std::uint32_t n, const std::vector<std::uint32_t>& gens) {
  Set s{1 % n};
  bool grew = true;
  while (grew) {
    grew = false;
    const Set snapshot = s;
    for (auto a : snapshot)
      for (auto g : gens) grew |= s.insert(static_cast<std::uint32_t>(std::uint64_t{a} * g % n)).second;
  }
  return s;
}

/// Ideals of Z/n are (d) for divisors d of n.
inline std::vector<Set> zn_ideals(std::uint32_t n) {
  std::vector<Set> out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Set i;
    for (std::uint32_t x = 0; x < n; x += d) i.insert(x);
    out.push_back(i);
  }
  return out;
}

/// Least s (by value) with s*a = 0 for every nilpotent a, if any.
inline std::optional<std::uint32_t> zn_uniform_s_reduced(std::uint32_t n, const Set& s) {
  const Set nil = zn_nilpotents(n);
  for (auto t : s) {
    bool kills = true;
    for (auto a : nil) kills = kills && std::uint64_t{t} * a % n == 0;
    if (kills) return t;
  }
  return std::nullopt;
}

inline bool zn_s_reduced(std::uint32_t n, const Set& s) {
  for (auto a : zn_nilpotents(n)) {
    bool killed = false;
    for (auto t : s) killed = killed || std::uint64_t{t} * a % n == 0;
    if (!killed) return false;
  }
  return true;
}

/// Definitional S-prime test: P ∩ S = ∅ and one s with ab ∈ P ⇒ sa ∈ P or sb ∈ P.
inline std::optional<std::uint32_t> zn_s_prime(std::uint32_t n, const Set& p, const Set& s) {
  if (p.size() == n) return std::nullopt;
  for (auto t : s)
    if (p.count(t)) return std::nullopt;
  for (auto t : s) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a)
      for (std::uint32_t b = 0; b < n && ok; ++b)
        if (p.count(static_cast<std::uint32_t>(std::uint64_t{a} * b % n)))
          ok = p.count(static_cast<std::uint32_t>(std::uint64_t{t} * a % n)) ||
               p.count(static_cast<std::uint32_t>(std::uint64_t{t} * b % n));
    if (ok) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generic, using only the operation tables

inline Set all(const FiniteRing& r) {
  Set out;
  for (Elem x = 0; x < r.size(); ++x) out.insert(x);
  return out;
}

inline Elem power(const FiniteRing& r, Elem a, unsigned k) {
  Elem p = r.one();
  for (unsigned i = 0; i < k; ++i) p = r.mul(p, a);
  return p;
}

inline Set nilpotents(const FiniteRing& r) {
  Set out;
  for (Elem a = 0; a < r.size(); ++a)
    for (unsigned k = 1; k <= r.size(); ++k)
      if (power(r, a, k) == r.zero()) {
        out.insert(a);
        break;
      }
  return out;
}

/// Nonzero zero divisors.
inline Set zero_divisors(const FiniteRing& r) {
  Set out;
  for (Elem a = 1; a < r.size(); ++a)
    for (Elem b = 1; b < r.size(); ++b)
      if (r.mul(a, b) == 0 || r.mul(b, a) == 0) {
        out.insert(a);
        break;
      }
  return out;
}

/// Fixpoint closure under addition and multiplication by ring elements.
inline Set ideal_generated(const FiniteRing& r, const std::vector<Elem>& gens) {
  Set i{r.zero()};
  for (Elem g : gens) i.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    const Set snapshot = i;
    for (Elem a : snapshot) {
      for (Elem b : snapshot) grew |= i.insert(r.add(a, b)).second;
      for (Elem x = 0; x < r.size(); ++x) grew |= i.insert(r.mul(x, a)).second;
    }
  }
  return i;
}

inline bool is_ideal(const FiniteRing& r, const Set& i) {
  if (!i.count(r.zero())) return false;
  for (Elem a : i) {
    for (Elem b : i)
      if (!i.count(r.add(a, b))) return false;
    for (Elem x = 0; x < r.size(); ++x)
      if (!i.count(r.mul(x, a))) return false;
  }
  return true;
}

/// All ideals by closing every subset reachable from principal ideals.
inline std::set<Set> all_ideals(const FiniteRing& r) {
  std::set<Set> out;
  std::vector<Set> frontier;
  for (Elem g = 0; g < r.size(); ++g) {
    Set p = ideal_generated(r, {g});
    if (out.insert(p).second) frontier.push_back(p);
  }
  while (!frontier.empty()) {
    const Set i = frontier.back();
    frontier.pop_back();
    for (Elem g = 0; g < r.size(); ++g) {
      if (i.count(g)) continue;
      std::vector<Elem> gens(i.begin(), i.end());
      gens.push_back(g);
      Set j = ideal_generated(r, gens);
      if (out.insert(j).second) frontier.push_back(j);
    }
  }
  return out;
}

inline bool is_prime(const FiniteRing& r, const Set& p) {
  if (p.size() == r.size()) return false;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (p.count(r.mul(a, b)) && !p.count(a) && !p.count(b)) return false;
  return true;
}

inline Set annihilator(const FiniteRing& r, Elem a) {
  Set out;
  for (Elem x = 0; x < r.size(); ++x)
    if (r.mul(x, a) == r.zero()) out.insert(x);
  return out;
}

/// Elements killed by some member of s.
inline Set s_torsion(const FiniteRing& r, const std::vector<Elem>& s) {
  Set out;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem t : s)
      if (r.mul(t, a) == r.zero()) {
        out.insert(a);
        break;
      }
  return out;
}

/// t * ann(a^(n+1)) ⊆ ann(a^n) for n = 1..|R|.
inline bool shift_contains(const FiniteRing& r, Elem a, Elem t) {
  for (unsigned n = 1; n <= r.size(); ++n) {
    const Set big = annihilator(r, power(r, a, n + 1));
    const Set small = annihilator(r, power(r, a, n));
    for (Elem x : big)
      if (!small.count(r.mul(t, x))) return false;
  }
  return true;
}

/// Coefficient convolution, f's coefficients on the left.
inline std::vector<Elem> convolve(const FiniteRing& r, const std::vector<Elem>& f,
                                  const std::vector<Elem>& g) {
  std::vector<Elem> out(f.size() + g.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
  return out;
}

struct ArmendarizCount {
  std::uint64_t pairs = 0;        // (f, g) with fg = 0, including zero polynomials
  std::uint64_t nontrivial = 0;   // both nonzero
  std::optional<Elem> uniform;    // least listed witness killing every a_i b_j
};

/// Every pair of coefficient vectors of length degree+1.
inline ArmendarizCount armendariz_brute(const FiniteRing& r, std::size_t degree,
                                        const std::vector<Elem>& witnesses) {
  const std::size_t len = degree + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= r.size();
  const auto vec = [&](std::uint64_t code) {
    std::vector<Elem> v(len);
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = static_cast<Elem>(code % r.size());
      code /= r.size();
    }
    return v;
  };
  ArmendarizCount out;
  std::vector<bool> alive(witnesses.size(), true);
  for (std::uint64_t fc = 0; fc < total; ++fc) {
    const auto f = vec(fc);
    for (std::uint64_t gc = 0; gc < total; ++gc) {
      const auto g = vec(gc);
      const auto p = convolve(r, f, g);
      if (!std::all_of(p.begin(), p.end(), [](Elem e) { return e == 0; })) continue;
      ++out.pairs;
      if (fc != 0 && gc != 0) ++out.nontrivial;
      for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (!alive[w]) continue;
        for (Elem a : f)
          for (Elem b : g)
            if (r.mul(witnesses[w], r.mul(a, b)) != 0) alive[w] = false;
      }
    }
  }
  for (std::size_t w = 0; w < witnesses.size(); ++w)
    if (alive[w]) {
      out.uniform = witnesses[w];
      break;
    }
  return out;
}

}  // namespace oracle
