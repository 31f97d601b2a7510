#include "sring/s_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace sring {

namespace {

bool kills(const FiniteRing& ring, Elem s, Elem a) { return ring.mul(s, a) == ring.zero(); }

bool scaled_subset(const FiniteRing& ring, Elem s, const ElementSet& from, const ElementSet& into) {
  bool ok = true;
  from.for_each([&](Elem x) {
    if (ok && !into.contains(ring.mul(s, x))) ok = false;
  });
  return ok;
}

ElementSet ann_set(const FiniteRing& ring, Elem x) {
  ElementSet out = ring.empty_set();
  for (Elem r = 0; r < ring.size(); ++r)
    if (ring.mul(r, x) == ring.zero()) out.insert(r);
  return out;
}

SPureVerdict pure_check(const FiniteRing& ring, const MultiplicativeSet& s,
                        const ElementSet& ideal) {
  SPureVerdict v;
  v.verdict = true;
  const auto members = ideal.members();
  for (Elem a : members) {
    bool found = false;
    for (Elem b : members) {
      const Elem ab = ring.mul(a, b);
      for (Elem t : s.elements())
        if (ring.mul(t, a) == ab) {
          v.witnesses.emplace_back(a, b, t);
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) {
      v.verdict = false;
      v.failing_element = a;
      return v;
    }
  }
  return v;
}

}  // namespace

SReducedCertificate is_s_reduced(const FiniteRing& ring, const MultiplicativeSet& s) {
  SReducedCertificate cert;
  cert.degenerate = s.degenerate();
  cert.verdict = true;
  const ElementSet nilpotents = nilpotent_set(ring);
  nilpotents.for_each([&](Elem a) {
    const auto w = is_s_zero_element(ring, s, a);
    if (w) {
      cert.witnesses.emplace_back(a, *w);
    } else if (cert.verdict) {
      cert.verdict = false;
      cert.failing_element = a;
    }
  });
  cert.uniform_witness = is_u_s_reduced(ring, s);
  return cert;
}

std::optional<Elem> is_u_s_reduced(const FiniteRing& ring, const MultiplicativeSet& s) {
  const auto nilpotents = nilpotent_set(ring).members();
  for (Elem t : s.elements())
    if (std::all_of(nilpotents.begin(), nilpotents.end(),
                    [&](Elem a) { return kills(ring, t, a); }))
      return t;
  return std::nullopt;
}

std::optional<Elem> is_s_integral_domain(const FiniteRing& ring, const MultiplicativeSet& s) {
  std::vector<std::pair<Elem, Elem>> zero_pairs;
  for (Elem a = 1; a < ring.size(); ++a)
    for (Elem b = a; b < ring.size(); ++b)
      if (ring.mul(a, b) == ring.zero()) zero_pairs.emplace_back(a, b);
  for (Elem t : s.elements()) {
    const bool works = std::all_of(zero_pairs.begin(), zero_pairs.end(), [&](const auto& p) {
      return kills(ring, t, p.first) || kills(ring, t, p.second);
    });
    if (works) return t;
  }
  return std::nullopt;
}

std::optional<Elem> is_s_zero_element(const FiniteRing& ring, const MultiplicativeSet& s, Elem a) {
  for (Elem t : s.elements())
    if (kills(ring, t, a)) return t;
  return std::nullopt;
}

SZeroIdealVerdict is_s_zero_ideal(const FiniteRing& ring, const MultiplicativeSet& s,
                                  const Ideal& ideal) {
  SZeroIdealVerdict v;
  v.verdict = true;
  ideal.members().for_each([&](Elem a) {
    if (!v.verdict) return;
    if (const auto w = is_s_zero_element(ring, s, a)) {
      v.witnesses.emplace_back(a, *w);
    } else {
      v.verdict = false;
      v.failing_element = a;
    }
  });
  return v;
}

Ideal s_torsion(const FiniteRing& ring, const MultiplicativeSet& s) {
  ElementSet members = ring.empty_set();
  for (Elem r = 0; r < ring.size(); ++r)
    if (is_s_zero_element(ring, s, r)) members.insert(r);
  return Ideal::from_members(ring, std::move(members));
}

LocalizationResult localize(const FiniteRing& ring, const MultiplicativeSet& s) {
  Ideal torsion = s_torsion(ring, s);
  if (s.degenerate() || torsion.is_whole())
    return LocalizationResult{true, std::nullopt, std::vector<Elem>(ring.size(), 0),
                              std::move(torsion)};

  QuotientResult q = quotient_ring(ring, torsion.members());
  const FiniteRing& local = q.ring;
  const auto& map = q.projection;

  for (Elem a = 0; a < ring.size(); ++a) {
    if ((map[a] == local.zero()) != torsion.contains(a))
      throw std::logic_error("localization kernel differs from the S-torsion ideal");
    for (Elem b = 0; b < ring.size(); ++b)
      if (map[ring.add(a, b)] != local.add(map[a], map[b]) ||
          map[ring.mul(a, b)] != local.mul(map[a], map[b]))
        throw std::logic_error("canonical map to the localization is not a homomorphism");
  }
  if (map[ring.one()] != local.one())
    throw std::logic_error("canonical map does not preserve 1");
  const ElementSet units = unit_set(local);
  for (Elem t : s.elements())
    if (!units.contains(map[t]))
      throw std::logic_error("an element of S does not become a unit in the localization");

  return LocalizationResult{false, std::move(q.ring), std::move(q.projection), std::move(torsion)};
}

SPureVerdict is_s_pure(const FiniteRing& ring, const MultiplicativeSet& s, const Ideal& ideal) {
  return pure_check(ring, s, ideal.members());
}

SPFVerdict is_s_pf(const FiniteRing& ring, const MultiplicativeSet& s) {
  SPFVerdict v;
  v.verdict = true;
  for (Elem a = 0; a < ring.size(); ++a) {
    const auto pure = pure_check(ring, s, ann_set(ring, a));
    if (!pure.verdict) {
      v.verdict = false;
      v.failing_annihilator_of = a;
      v.failing_member = pure.failing_element;
      return v;
    }
  }
  return v;
}

std::vector<HopfianEntry> s_strongly_hopfian_profile(const FiniteRing& ring,
                                                     const MultiplicativeSet& s) {
  std::vector<HopfianEntry> profile;
  profile.reserve(ring.size());
  for (Elem a = 0; a < ring.size(); ++a) {
    // chain[n-1] = ann(a^n) for n = 1..m+1, stopping once two consecutive agree.
    std::vector<ElementSet> chain;
    Elem power = a;
    chain.push_back(ann_set(ring, power));
    while (true) {
      power = ring.mul(power, a);
      ElementSet next = ann_set(ring, power);
      if (next == chain.back()) break;
      chain.push_back(std::move(next));
    }
    HopfianEntry entry;
    entry.element = a;
    entry.stabilization = static_cast<std::uint32_t>(chain.size());
    const ElementSet& top = chain.back();

    bool found = false;
    for (std::uint32_t k = 1; k <= entry.stabilization && !found; ++k)
      for (Elem t : s.elements())
        if (scaled_subset(ring, t, top, chain[k - 1])) {
          entry.k = k;
          entry.s = t;
          found = true;
          break;
        }
    if (!found) throw std::logic_error("annihilator chain failed to stabilize with s = 1");

    for (Elem t : s.elements()) {
      bool ok = true;
      for (std::size_t n = 1; n < chain.size() && ok; ++n)
        ok = scaled_subset(ring, t, chain[n], chain[n - 1]);
      if (ok) {
        entry.shift_witness = t;
        break;
      }
    }
    profile.push_back(std::move(entry));
  }
  return profile;
}

bool check_shift_witness(const FiniteRing& ring, Elem a, Elem s) {
  // Scan n up to |R| + 1 so the whole (eventually constant) chain is covered.
  Elem an = a;
  for (std::size_t n = 1; n <= ring.size() + 1; ++n) {
    const Elem an1 = ring.mul(an, a);
    for (Elem y = 0; y < ring.size(); ++y)
      if (ring.mul(y, an1) == ring.zero() && ring.mul(ring.mul(s, y), an) != ring.zero())
        return false;
    an = an1;
  }
  return true;
}

PolynomialTransfer polynomial_transfer(const FiniteRing& ring, const MultiplicativeSet& s,
                                       std::size_t max_degree, std::uint64_t budget) {
  PolynomialTransfer out;
  out.ring_s_reduced = is_s_reduced(ring, s).verdict;
  const auto nilpotents = nilpotent_set(ring).members();
  const std::uint64_t count = nilpotents.size();

  std::size_t degree = max_degree;
  const auto tuples = [&](std::size_t d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      total *= count;
      if (total > budget) return budget + 1;
    }
    return total;
  };
  while (degree > 0 && tuples(degree) > budget) --degree;
  out.degree = degree;

  // killers[k] = members of S annihilating nilpotents[k]
  std::vector<ElementSet> killers;
  for (Elem a : nilpotents) {
    ElementSet k(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (kills(ring, s.elements()[i], a)) k.insert(static_cast<Elem>(i));
    killers.push_back(std::move(k));
  }

  out.polynomial_ring_s_reduced = true;
  std::vector<std::size_t> digits(degree + 1, 0);
  const std::uint64_t total = tuples(degree);
  for (std::uint64_t t = 0; t < total; ++t) {
    ElementSet common = ElementSet::full(s.size());
    for (std::size_t d : digits) common &= killers[d];
    ++out.polynomials_examined;
    if (common.empty()) {
      out.polynomial_ring_s_reduced = false;
      std::vector<Elem> coeffs;
      for (std::size_t d : digits) coeffs.push_back(nilpotents[d]);
      out.failing_polynomial = Polynomial(std::move(coeffs));
      break;
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < count) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace sring
