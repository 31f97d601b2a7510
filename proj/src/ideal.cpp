#include "sring/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sring/parallel.hpp"

namespace sring {

namespace {

void require_same_ring(const FiniteRing& ring, std::uintptr_t id, const char* what) {
  if (ring.id() != id)
    throw SringError(ErrorKind::RingMismatch, std::string(what) + " belongs to a different ring");
}

void require_commutative(const FiniteRing& ring) {
  if (!ring.is_commutative())
    throw SringError(ErrorKind::NonCommutative,
                     "ideal computations need a commutative ring, got " + ring.describe());
}

}  // namespace

Ideal Ideal::from_members(const FiniteRing& ring, ElementSet members) {
  std::vector<Elem> gens;
  ElementSet spanned = ring.empty_set();
  spanned.insert(ring.zero());
  members.for_each([&](Elem x) {
    if (spanned.contains(x)) return;
    gens.push_back(x);
    extend_ideal_set(ring, spanned, x);
  });
  return Ideal(ring, std::move(members), std::move(gens));
}

MultiplicativeSet::MultiplicativeSet(const FiniteRing& ring, ElementSet members,
                                     std::vector<Elem> generators)
    : members_(std::move(members)),
      generators_(std::move(generators)),
      elements_(members_.members()),
      ring_id_(ring.id()) {}

Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens) {
  std::vector<Elem> g(gens.begin(), gens.end());
  std::erase(g, ring.zero());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  ElementSet members = generate_ideal_set(ring, g);
  return Ideal(ring, std::move(members), std::move(g));
}

Ideal zero_ideal(const FiniteRing& ring) { return ideal_generated(ring, {}); }

Ideal unit_ideal(const FiniteRing& ring) {
  const Elem one = ring.one();
  return ideal_generated(ring, std::span<const Elem>(&one, 1));
}

bool is_ideal(const FiniteRing& ring, const ElementSet& candidate) {
  if (!candidate.contains(ring.zero())) return false;
  const auto members = candidate.members();
  for (Elem a : members) {
    if (!candidate.contains(ring.neg(a))) return false;
    for (Elem b : members)
      if (!candidate.contains(ring.add(a, b))) return false;
    for (Elem r = 0; r < ring.size(); ++r)
      if (!candidate.contains(ring.mul(r, a)) || !candidate.contains(ring.mul(a, r))) return false;
  }
  return true;
}

Ideal ideal_sum(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  require_same_ring(ring, a.ring_id(), "left ideal");
  require_same_ring(ring, b.ring_id(), "right ideal");
  ElementSet sum = ring.empty_set();
  const auto bm = b.members().members();
  a.members().for_each([&](Elem x) {
    for (Elem y : bm) sum.insert(ring.add(x, y));
  });
  std::vector<Elem> gens = a.generators();
  for (Elem g : b.generators())
    if (!a.contains(g)) gens.push_back(g);
  return Ideal(ring, std::move(sum), std::move(gens));
}

Ideal ideal_intersection(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  require_same_ring(ring, a.ring_id(), "left ideal");
  require_same_ring(ring, b.ring_id(), "right ideal");
  return Ideal::from_members(ring, a.members() & b.members());
}

Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  require_same_ring(ring, a.ring_id(), "left ideal");
  require_same_ring(ring, b.ring_id(), "right ideal");
  std::vector<Elem> products;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) products.push_back(ring.mul(x, y));
  return ideal_generated(ring, products);
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, std::size_t ideal_cap) {
  require_commutative(ring);
  std::vector<Ideal> principal;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < ring.size(); ++x) {
    Ideal p = ideal_generated(ring, std::span<const Elem>(&x, 1));
    if (seen.insert(p.members()).second) principal.push_back(std::move(p));
  }

  std::vector<Ideal> all = principal;
  for (std::size_t next = 0; next < all.size(); ++next) {
    for (const auto& p : principal) {
      if (p.is_subset_of(all[next])) continue;
      Ideal sum = ideal_sum(ring, all[next], p);
      if (!seen.insert(sum.members()).second) continue;
      all.push_back(std::move(sum));
      if (all.size() > ideal_cap)
        throw SringError(ErrorKind::CapExceeded,
                         ring.describe() + " has more than " + std::to_string(ideal_cap) +
                             " ideals");
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

Ideal colon(const FiniteRing& ring, const Ideal& i, const Ideal& j) {
  require_same_ring(ring, i.ring_id(), "ideal");
  require_same_ring(ring, j.ring_id(), "ideal");
  ElementSet out = ring.empty_set();
  for (Elem r = 0; r < ring.size(); ++r) {
    bool inside = true;
    for (Elem g : j.generators())
      if (!i.contains(ring.mul(r, g))) {
        inside = false;
        break;
      }
    if (inside) out.insert(r);
  }
  return Ideal::from_members(ring, std::move(out));
}

Ideal colon_elem(const FiniteRing& ring, const Ideal& i, Elem x) {
  require_same_ring(ring, i.ring_id(), "ideal");
  ElementSet out = ring.empty_set();
  for (Elem r = 0; r < ring.size(); ++r)
    if (i.contains(ring.mul(r, x))) out.insert(r);
  return Ideal::from_members(ring, std::move(out));
}

Ideal annihilator(const FiniteRing& ring, Elem x) { return colon_elem(ring, zero_ideal(ring), x); }

bool is_prime_ideal(const FiniteRing& ring, const Ideal& i) {
  require_commutative(ring);
  if (i.is_whole()) return false;
  for (Elem a = 0; a < ring.size(); ++a) {
    if (i.contains(a)) continue;
    for (Elem b = a; b < ring.size(); ++b)
      if (!i.contains(b) && i.contains(ring.mul(a, b))) return false;
  }
  return true;
}

bool is_maximal_ideal(const FiniteRing& ring, const Ideal& i) {
  if (i.is_whole()) return false;
  // Maximal iff every element outside I generates the unit ideal together with I.
  for (Elem a = 0; a < ring.size(); ++a) {
    if (i.contains(a)) continue;
    std::vector<Elem> gens = i.generators();
    gens.push_back(a);
    if (generate_ideal_set(ring, gens).size() != ring.size()) return false;
  }
  return true;
}

MultiplicativeSet mult_closure(const FiniteRing& ring, std::span<const Elem> gens,
                               bool allow_zero) {
  std::vector<Elem> generators(gens.begin(), gens.end());
  ElementSet members = ring.empty_set();
  std::vector<Elem> frontier{ring.one()};
  members.insert(ring.one());
  for (Elem g : generators)
    if (!members.contains(g)) {
      members.insert(g);
      frontier.push_back(g);
    }
  // Every element is a word in the generators; extend words by one letter.
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : generators) {
      const Elem y = ring.mul(x, g);
      if (!members.contains(y)) {
        members.insert(y);
        frontier.push_back(y);
      }
    }
  }
  if (members.contains(ring.zero()) && !allow_zero)
    throw SringError(ErrorKind::ZeroInClosure,
                     "0 lies in the multiplicative closure of the given generators in " +
                         ring.describe());
  return MultiplicativeSet(ring, std::move(members), std::move(generators));
}

MultiplicativeSet image_of(const MultiplicativeSet& s, const QuotientResult& quotient) {
  ElementSet members = quotient.ring.empty_set();
  for (Elem x : s.elements()) members.insert(quotient.projection[x]);
  std::vector<Elem> gens;
  for (Elem g : s.generators()) gens.push_back(quotient.projection[g]);
  return MultiplicativeSet(quotient.ring, std::move(members), std::move(gens));
}

SRadical s_radical(const FiniteRing& ring, const MultiplicativeSet& s, const Ideal& i) {
  require_same_ring(ring, i.ring_id(), "ideal");
  require_same_ring(ring, s.ring_id(), "multiplicative set");
  std::vector<std::optional<RadicalWitness>> witnesses(ring.size());
  ElementSet members = ring.empty_set();
  for (Elem a = 0; a < ring.size(); ++a) {
    Elem power = a;
    // a^n is eventually periodic with preperiod plus period at most |R|.
    for (std::uint32_t n = 1; n <= ring.size() && !witnesses[a]; ++n) {
      for (Elem t : s.elements())
        if (i.contains(ring.mul(t, power))) {
          witnesses[a] = RadicalWitness{t, n};
          members.insert(a);
          break;
        }
      power = ring.mul(power, a);
    }
  }
  const bool same = members == i.members();
  return SRadical{Ideal::from_members(ring, std::move(members)), std::move(witnesses), same};
}

SRadical s_nilradical(const FiniteRing& ring, const MultiplicativeSet& s) {
  return s_radical(ring, s, zero_ideal(ring));
}

std::optional<Elem> s_prime_definitional(const FiniteRing& ring, const MultiplicativeSet& s,
                                         const Ideal& p) {
  require_commutative(ring);
  if (p.members().intersects(s.members())) return std::nullopt;
  for (Elem t : s.elements()) {
    // ab ∈ P ⇒ ta ∈ P or tb ∈ P, scanned over pairs with ta, tb ∉ P.
    std::vector<Elem> outside;
    for (Elem a = 0; a < ring.size(); ++a)
      if (!p.contains(ring.mul(t, a))) outside.push_back(a);
    bool ok = true;
    for (std::size_t x = 0; x < outside.size() && ok; ++x)
      for (std::size_t y = x; y < outside.size(); ++y)
        if (p.contains(ring.mul(outside[x], outside[y]))) {
          ok = false;
          break;
        }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Elem> s_prime_colon(const FiniteRing& ring, const MultiplicativeSet& s,
                                  const Ideal& p) {
  if (p.members().intersects(s.members())) return std::nullopt;
  for (Elem t : s.elements())
    if (is_prime_ideal(ring, colon_elem(ring, p, t))) return t;
  return std::nullopt;
}

std::optional<Elem> dominant_colon_witness(const FiniteRing& ring, const MultiplicativeSet& s,
                                           const Ideal& p) {
  if (p.members().intersects(s.members())) return std::nullopt;
  std::vector<Ideal> colons;
  for (Elem t : s.elements()) colons.push_back(colon_elem(ring, p, t));
  for (std::size_t k = 0; k < colons.size(); ++k) {
    const bool dominates = std::all_of(colons.begin(), colons.end(), [&](const Ideal& c) {
      return c.is_subset_of(colons[k]);
    });
    if (dominates && is_prime_ideal(ring, colons[k])) return s.elements()[k];
  }
  return std::nullopt;
}

std::optional<SPrimeWitness> is_s_prime(const FiniteRing& ring, const MultiplicativeSet& s,
                                        const Ideal& p) {
  const auto direct = s_prime_definitional(ring, s, p);
  const auto via_colon = s_prime_colon(ring, s, p);
  if (direct.has_value() != via_colon.has_value())
    throw std::logic_error("S-prime criteria disagree on an ideal of " + ring.describe());
  if (!direct) return std::nullopt;
  return SPrimeWitness{p, *direct, *via_colon, colon_elem(ring, p, *via_colon)};
}

std::vector<SPrimeWitness> s_spectrum(const FiniteRing& ring, const MultiplicativeSet& s,
                                      const std::vector<Ideal>& ideals) {
  auto tested = parallel_map<std::optional<SPrimeWitness>>(
      ideals.size(), [&](std::size_t k) { return is_s_prime(ring, s, ideals[k]); });
  std::vector<SPrimeWitness> out;
  for (auto& t : tested)
    if (t) out.push_back(std::move(*t));
  return out;
}

std::vector<SPrimeWitness> s_spectrum(const FiniteRing& ring, const MultiplicativeSet& s) {
  return s_spectrum(ring, s, enumerate_ideals(ring));
}

std::vector<Ideal> s_minimal_s_primes(const FiniteRing& ring, const MultiplicativeSet& s,
                                      const std::vector<SPrimeWitness>& spectrum) {
  std::vector<Ideal> out;
  for (const auto& p : spectrum) {
    bool minimal = true;
    for (const auto& q : spectrum) {
      if (!q.ideal.is_subset_of(p.ideal)) continue;
      const bool absorbed = std::any_of(s.elements().begin(), s.elements().end(), [&](Elem t) {
        return std::all_of(p.ideal.generators().begin(), p.ideal.generators().end(),
                           [&](Elem g) { return q.ideal.contains(ring.mul(t, g)); });
      });
      if (!absorbed) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p.ideal);
  }
  return out;
}

std::vector<Ideal> s_minimal_s_primes(const FiniteRing& ring, const MultiplicativeSet& s) {
  return s_minimal_s_primes(ring, s, s_spectrum(ring, s));
}

Ideal spectrum_intersection(const FiniteRing& ring, const std::vector<SPrimeWitness>& spectrum) {
  if (spectrum.empty())
    throw SringError(ErrorKind::EmptySpectrum, ring.describe() + " has no S-prime ideals");
  ElementSet meet = ring.all_elements();
  for (const auto& p : spectrum) meet &= p.ideal.members();
  return Ideal::from_members(ring, std::move(meet));
}

Ideal spectrum_intersection(const FiniteRing& ring, const MultiplicativeSet& s) {
  return spectrum_intersection(ring, s_spectrum(ring, s));
}

}  // namespace sring
