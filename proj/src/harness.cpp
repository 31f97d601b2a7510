#include "sring/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>

#include "sring/armendariz.hpp"
#include "sring/parallel.hpp"
#include "sring/ring_io.hpp"
#include "sring/s_theory.hpp"

namespace sring {

using nlohmann::json;

namespace {

struct Entry {
  StatementId id;
  std::string_view name;
};

constexpr Entry kCatalog[] = {
    {StatementId::SRadicalQuotient, "S_RADICAL_QUOTIENT"},
    {StatementId::IntersectionVsProduct, "INTERSECTION_VS_PRODUCT"},
    {StatementId::SpectrumSZero, "SPECTRUM_S_ZERO"},
    {StatementId::NilSInColon, "NILS_IN_COLON"},
    {StatementId::NilSSZero, "NILS_S_ZERO"},
    {StatementId::LocalizationReduced, "LOCALIZATION_REDUCED"},
    {StatementId::LocalizationArtinian, "LOCALIZATION_ARTINIAN"},
    {StatementId::ProductOfFields, "PRODUCT_OF_FIELDS"},
    {StatementId::PolyTransfer, "POLY_TRANSFER"},
    {StatementId::USReducedImpliesUSArmendariz, "U_S_RED_IMPLIES_U_S_ARM"},
    {StatementId::ERingArmendariz, "E_RING_ARMENDARIZ"},
    {StatementId::IdealizationArmendariz, "IDEALIZATION_ARMENDARIZ"},
    {StatementId::SReducedImpliesHopfian, "S_REDUCED_IMPLIES_HOPFIAN"},
    {StatementId::SPFImpliesSReduced, "S_PF_IMPLIES_S_REDUCED"},
    {StatementId::StructureForward, "STRUCTURE_FORWARD"},
    {StatementId::StructureConverse, "STRUCTURE_CONVERSE"},
    {StatementId::NilIsIntersection, "NIL_IS_INTERSECTION"},
    {StatementId::NilNilpotent, "NIL_NILPOTENT"},
};

constexpr std::string_view kDegenerate = "degenerate hypotheses";
constexpr std::string_view kArtinianReading =
    "S-Artinian read as s*I_k ⊆ I_n for n >= k; finite rings satisfy it with s = 1";

// Hypotheses first, conclusion second. Scale limits are never forced.
class Outcome {
 public:
  explicit Outcome(bool force) : force_(force) {}

  void hypothesis(std::string name, bool met) {
    eval_.hypotheses.push_back({std::move(name), met});
    if (!met) eval_.hypotheses_met = false;
  }
  void scale_limit(std::string name, bool met) {
    hypothesis(std::move(name), met);
    if (!met) {
      scale_ok_ = false;
      note("desk-scale limit not met: " + eval_.hypotheses.back().name);
    }
  }
  void note(std::string text) { eval_.notes.push_back(std::move(text)); }
  /// True when the conclusion should be evaluated.
  bool proceed() const { return scale_ok_ && (force_ || eval_.hypotheses_met); }
  void conclude(bool holds) { eval_.conclusion = holds; }
  json& payload() { return eval_.payload; }
  bool forced() const { return force_; }

  Evaluation take() { return std::move(eval_); }

 private:
  Evaluation eval_{.hypotheses = {}, .notes = {}, .hypotheses_met = true, .conclusion = {}};
  bool force_;
  bool scale_ok_ = true;
};

json ideal_json(const FiniteRing& ring, const Ideal& i) { return set_to_json(ring, i.members()); }

Ideal torsion_of(const Instance& in) { return s_torsion(in.ring, in.s); }

bool s_zero_set(const ElementSet& set, const Ideal& torsion) {
  return set.is_subset_of(torsion.members());
}

json armendariz_json(const FiniteRing& ring, const ArmendarizVerdict& v) {
  json out = {{"mode", to_string(v.mode)},
              {"degree", v.degree},
              {"seed", v.seed},
              {"budget", v.budget},
              {"pairs_examined", v.pairs_examined},
              {"nontrivial_pairs", v.nontrivial_pairs},
              {"uniform_holds", v.uniform_holds},
              {"per_pair_holds", v.per_pair_holds}};
  if (v.uniform_witness) out["uniform_witness"] = element_to_json(ring, *v.uniform_witness);
  json counts = json::array();
  for (const auto& [s, n] : v.per_pair_witness_counts)
    counts.push_back({{"s", element_to_json(ring, s)}, {"pairs", n}});
  out["per_pair_witness_counts"] = counts;
  const auto poly = [&](const Polynomial& p) { return elements_to_json(ring, p.coeffs); };
  if (v.uniform_breaking_pair)
    out["uniform_breaking_pair"] = {{"f", poly(v.uniform_breaking_pair->f)},
                                    {"g", poly(v.uniform_breaking_pair->g)}};
  if (v.per_pair_failure)
    out["per_pair_failure"] = {{"f", poly(v.per_pair_failure->f)},
                               {"g", poly(v.per_pair_failure->g)}};
  if (v.violation)
    out["violation"] = {{"f", poly(v.violation->pair.f)},
                        {"g", poly(v.violation->pair.g)},
                        {"i", v.violation->i},
                        {"j", v.violation->j}};
  return out;
}

ArmendarizConfig armendariz_config(std::size_t ring_size, const HarnessConfig& config) {
  ArmendarizConfig c;
  c.seed = config.seed;
  if (ring_size <= config.exhaustive_max_size) {
    c.mode = SearchMode::Exhaustive;
    c.degree = config.exhaustive_degree;
    c.budget = config.exhaustive_budget;
  } else {
    c.mode = SearchMode::Sampled;
    c.degree = config.sampled_degree;
    c.budget = config.sampled_budget;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Statements

void s_radical_quotient(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  std::size_t meeting = 0;
  json ideals = json::array();
  bool holds = true;
  struct Row {
    Ideal ideal;
    QuotientResult q;
    MultiplicativeSet sbar;
    bool hyp;
  };
  std::vector<Row> rows;
  for (const Ideal& i : enumerate_ideals(r)) {
    if (i.is_whole()) continue;
    QuotientResult q = quotient_ring(r, i.members());
    MultiplicativeSet sbar = image_of(in.s, q);
    // S̄ must itself be a multiplicative set avoiding 0, i.e. S ∩ I = ∅.
    if (sbar.degenerate()) continue;
    const bool hyp = !zero_divisor_set(q.ring).intersects(sbar.members());
    meeting += hyp ? 1 : 0;
    rows.push_back({i, std::move(q), std::move(sbar), hyp});
  }
  out.hypothesis("some proper I with S ∩ I = ∅ and Z(R/I) ∩ S̄ = ∅", meeting > 0);
  if (!out.proceed()) return;
  for (const Row& row : rows) {
    json entry = {{"ideal", ideal_json(r, row.ideal)},
                  {"s_bar", set_to_json(row.q.ring, row.sbar.members())},
                  {"hypothesis_met", row.hyp}};
    if (!row.hyp && !out.forced()) {
      entry["status"] = to_string(Verdict::HypothesisNotMet);
      ideals.push_back(entry);
      continue;
    }
    const SRadical rad = s_radical(r, in.s, row.ideal);
    const auto cert = is_s_reduced(row.q.ring, row.sbar);
    entry["s_radical"] = ideal_json(r, rad.radical);
    entry["ideal_is_s_radical"] = rad.input_is_s_radical;
    entry["quotient_s_reduced"] = cert.verdict;
    if (!rad.input_is_s_radical) {
      const Elem a = (rad.radical.members() - row.ideal.members()).first();
      entry["radical_witness"] = {{"a", element_to_json(r, a)},
                                  {"s", element_to_json(r, rad.witnesses[a]->s)},
                                  {"n", rad.witnesses[a]->n}};
    }
    if (cert.failing_element)
      entry["quotient_failing_nilpotent"] = element_to_json(row.q.ring, *cert.failing_element);
    const bool agree = rad.input_is_s_radical == cert.verdict;
    entry["status"] = to_string(agree ? Verdict::Holds : Verdict::Violated);
    if (!agree && holds) {
      holds = false;
      out.payload()["counterexample"] = entry;
    }
    ideals.push_back(entry);
  }
  out.payload()["ideals"] = ideals;
  out.payload()["ideals_meeting_hypothesis"] = meeting;
  out.conclude(holds);
}

void intersection_vs_product(const Instance& in, const HarnessConfig& config, Outcome& out) {
  const FiniteRing& r = in.ring;
  const auto ideals = enumerate_ideals(r);
  out.scale_limit("at most " + std::to_string(config.max_ideals_pairwise) + " ideals",
                  ideals.size() <= config.max_ideals_pairwise);
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  const Ideal torsion = torsion_of(in);
  std::uint64_t pairs = 0;
  bool holds = true;
  for (std::size_t a = 0; a < ideals.size() && holds; ++a)
    for (std::size_t b = a; b < ideals.size(); ++b) {
      ++pairs;
      const ElementSet meet = ideals[a].members() & ideals[b].members();
      const Ideal prod = ideal_product(r, ideals[a], ideals[b]);
      const bool lhs = s_zero_set(meet, torsion);
      const bool rhs = s_zero_set(prod.members(), torsion);
      if (lhs != rhs) {
        holds = false;
        out.payload()["counterexample"] = {{"I", ideal_json(r, ideals[a])},
                                           {"J", ideal_json(r, ideals[b])},
                                           {"intersection_s_zero", lhs},
                                           {"product_s_zero", rhs}};
        break;
      }
    }
  out.payload()["ideal_pairs_checked"] = pairs;
  out.payload()["s_torsion"] = ideal_json(r, torsion);
  out.conclude(holds);
}

json spectrum_json(const FiniteRing& r, const std::vector<SPrimeWitness>& spec) {
  json out = json::array();
  for (const auto& w : spec)
    out.push_back({{"ideal", ideal_json(r, w.ideal)},
                   {"witness_s", element_to_json(r, w.s)},
                   {"colon_s", element_to_json(r, w.colon_s)},
                   {"colon_prime", ideal_json(r, w.colon_prime)}});
  return out;
}

void spectrum_s_zero(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  out.hypothesis("0 ∉ S", !in.s.degenerate());
  if (!out.proceed()) return;
  const auto spec = s_spectrum(r, in.s);
  out.payload()["spectrum"] = spectrum_json(r, spec);
  if (spec.empty()) {
    out.note("empty S-prime spectrum: the intersection is R");
    out.conclude(false);
    return;
  }
  const Ideal meet = spectrum_intersection(r, spec);
  out.payload()["intersection"] = ideal_json(r, meet);
  json witnesses = json::array();
  bool holds = true;
  meet.members().for_each([&](Elem x) {
    if (const auto s = is_s_zero_element(r, in.s, x)) {
      witnesses.push_back({{"a", element_to_json(r, x)}, {"s", element_to_json(r, *s)}});
    } else if (holds) {
      holds = false;
      out.payload()["counterexample"] = {{"a", element_to_json(r, x)}};
    }
  });
  out.payload()["s_zero_witnesses"] = witnesses;
  out.conclude(holds);
}

void nil_s_in_colon(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("0 ∉ S", !in.s.degenerate());
  const auto spec = s_spectrum(r, in.s);
  out.hypothesis("Spec_S(R) nonempty", !spec.empty());
  if (!out.proceed()) return;
  const SRadical nil = s_nilradical(r, in.s);
  out.payload()["nil_s"] = ideal_json(r, nil.radical);
  json rows = json::array();
  bool holds = true;
  for (const auto& w : spec) {
    const auto sp = dominant_colon_witness(r, in.s, w.ideal);
    json row = {{"ideal", ideal_json(r, w.ideal)}};
    if (!sp) {
      row["s_P"] = nullptr;
      holds = false;
    } else {
      const Ideal colon = colon_elem(r, w.ideal, *sp);
      const bool inside = nil.radical.is_subset_of(colon);
      row["s_P"] = element_to_json(r, *sp);
      row["colon"] = ideal_json(r, colon);
      row["contains_nil_s"] = inside;
      holds = holds && inside;
    }
    rows.push_back(row);
  }
  out.payload()["primes"] = rows;
  out.conclude(holds);
}

void nil_s_s_zero(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  const SRadical nil = s_nilradical(r, in.s);
  const auto v = is_s_zero_ideal(r, in.s, nil.radical);
  out.payload()["nil_s"] = ideal_json(r, nil.radical);
  json witnesses = json::array();
  for (const auto& [a, s] : v.witnesses)
    witnesses.push_back({{"a", element_to_json(r, a)}, {"s", element_to_json(r, s)}});
  out.payload()["s_zero_witnesses"] = witnesses;
  if (v.failing_element) out.payload()["counterexample"] = {{"a", element_to_json(r, *v.failing_element)}};
  out.conclude(v.verdict);
}

void localization_reduced(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  const auto loc = localize(r, in.s);
  out.payload()["torsion"] = ideal_json(r, loc.torsion);
  if (loc.degenerate) {
    out.note("localization is the zero ring");
    out.conclude(true);
    return;
  }
  const bool reduced = is_reduced(*loc.ring);
  out.payload()["localized_size"] = loc.ring->size();
  out.payload()["localized_nilpotents"] = set_to_json(*loc.ring, nilpotent_set(*loc.ring));
  out.conclude(reduced);
}

void localization_artinian(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.note(std::string(kDegenerate));
  out.hypothesis("S-Noetherian (every finite ring)", true);
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  const auto loc = localize(r, in.s);
  bool zd_or_unit = true;
  if (!loc.degenerate) {
    const ElementSet zd = zero_divisor_set(*loc.ring);
    const ElementSet units = unit_set(*loc.ring);
    for (Elem x = 1; x < loc.ring->size(); ++x)
      zd_or_unit = zd_or_unit && (zd.contains(x) || units.contains(x));
  }
  out.hypothesis("nonzero elements of S^-1 R are zero divisors or units", zd_or_unit);
  if (!out.proceed()) return;
  if (loc.degenerate) {
    out.conclude(true);
    return;
  }
  // Artinian with finitely many primes, all maximal: Krull dimension 0.
  const FiniteRing& l = *loc.ring;
  std::size_t primes = 0;
  bool dim_zero = true;
  for (const Ideal& p : enumerate_ideals(l))
    if (is_prime_ideal(l, p)) {
      ++primes;
      dim_zero = dim_zero && is_maximal_ideal(l, p);
    }
  out.payload()["localized_size"] = l.size();
  out.payload()["prime_ideals"] = primes;
  out.payload()["all_primes_maximal"] = dim_zero;
  out.conclude(dim_zero);
}

void product_of_fields(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.note(std::string(kDegenerate));
  out.note(std::string(kArtinianReading));
  out.hypothesis("S-Artinian (every finite ring)", true);
  out.hypothesis("reduced", is_reduced(r));
  out.hypothesis("Z(R) ∩ S = ∅", !zero_divisor_set(r).intersects(in.s.members()));
  if (!out.proceed()) return;

  std::vector<Ideal> maximal;
  for (const Ideal& i : enumerate_ideals(r))
    if (is_maximal_ideal(r, i)) maximal.push_back(i);
  std::vector<QuotientResult> quotients;
  std::vector<FiniteRing> factors;
  json fields = json::array();
  bool all_fields = true;
  for (const Ideal& m : maximal) {
    quotients.push_back(quotient_ring(r, m.members()));
    factors.push_back(quotients.back().ring);
    all_fields = all_fields && is_field(factors.back());
    fields.push_back({{"maximal_ideal", ideal_json(r, m)}, {"field_size", factors.back().size()}});
  }
  out.payload()["factors"] = fields;
  const FiniteRing prod = product_ring(factors);
  std::vector<std::size_t> sizes;
  for (const auto& f : factors) sizes.push_back(f.size());

  // CRT map r -> (r + M_i)_i, verified on every element and every pair.
  std::vector<Elem> map(r.size());
  ElementSet image = prod.empty_set();
  for (Elem x = 0; x < r.size(); ++x) {
    std::vector<Elem> digits;
    for (const auto& q : quotients) digits.push_back(q.projection[x]);
    map[x] = product_index(sizes, digits);
    image.insert(map[x]);
  }
  const bool bijective = prod.size() == r.size() && image.size() == r.size();
  bool homomorphic = map[r.one()] == prod.one();
  std::uint64_t products_checked = 0;
  for (Elem a = 0; a < r.size() && homomorphic; ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      ++products_checked;
      if (map[r.add(a, b)] != prod.add(map[a], map[b]) ||
          map[r.mul(a, b)] != prod.mul(map[a], map[b])) {
        homomorphic = false;
        out.payload()["counterexample"] = {{"a", element_to_json(r, a)},
                                           {"b", element_to_json(r, b)}};
        break;
      }
    }
  out.payload()["bijective"] = bijective;
  out.payload()["homomorphic"] = homomorphic;
  out.payload()["pairs_checked"] = products_checked;
  out.conclude(all_fields && bijective && homomorphic);
}

void poly_transfer(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  const auto t = polynomial_transfer(r, in.s);
  out.payload()["degree"] = t.degree;
  out.payload()["ring_s_reduced"] = t.ring_s_reduced;
  out.payload()["polynomial_ring_s_reduced"] = t.polynomial_ring_s_reduced;
  out.payload()["polynomials_examined"] = t.polynomials_examined;
  if (t.failing_polynomial)
    out.payload()["unkilled_polynomial"] = elements_to_json(r, t.failing_polynomial->coeffs);
  out.conclude(t.ring_s_reduced == t.polynomial_ring_s_reduced);
}

void us_reduced_implies_us_armendariz(const Instance& in, const HarnessConfig& config,
                                      Outcome& out) {
  const FiniteRing& r = in.ring;
  const auto u = is_u_s_reduced(r, in.s);
  out.hypothesis("u-S-reduced", u.has_value());
  if (!out.proceed()) return;
  if (u) out.payload()["u_s_reduced_witness"] = element_to_json(r, *u);
  const auto v = is_u_s_armendariz_up_to(r, in.s, armendariz_config(r.size(), config));
  out.payload()["armendariz"] = armendariz_json(r, v);
  out.conclude(v.uniform_holds);
}

void e_ring_armendariz(const Instance& in, const HarnessConfig& config, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.scale_limit("|R| <= " + std::to_string(config.e_ring_max_base),
                  r.size() <= config.e_ring_max_base);
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  out.note("S' is the set of constant matrices (s, s, s, s); it need not be multiplicatively closed");
  RingOptions options = config.ring_options;
  options.size_cap = std::max(options.size_cap, r.size() * r.size() * r.size() * r.size());
  const FiniteRing e = build_ring(RingExpression::triangular_e(in.expression), options);
  const auto witnesses = constant_quadruples(e, r, in.s.elements());
  ArmendarizConfig c;
  c.mode = SearchMode::Sampled;
  c.degree = config.sampled_degree;
  c.budget = config.sampled_budget;
  c.seed = config.seed;
  c.coefficient_pool = triangular_zero_divisor_pool(e, r);
  const auto v = is_u_s_armendariz_up_to(e, witnesses, c);
  out.payload()["e_ring"] = e.describe();
  out.payload()["e_ring_size"] = e.size();
  out.payload()["armendariz"] = armendariz_json(e, v);
  out.conclude(v.uniform_holds);
}

void idealization_armendariz(const Instance& in, const HarnessConfig& config, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.scale_limit("|R|^2 within the size cap",
                  r.size() * r.size() <= config.ring_options.size_cap);
  out.hypothesis("u-S-reduced", is_u_s_reduced(r, in.s).has_value());
  if (!out.proceed()) return;
  out.note("witnesses drawn from S(+)R = {(s, m)}");
  const FiniteRing rr =
      build_ring(RingExpression::self_idealization(in.expression), config.ring_options);
  const auto witnesses = s_idealization_set(rr, r, in.s);
  const ArmendarizConfig ac = armendariz_config(rr.size(), config);
  const auto v = is_u_s_armendariz_up_to(rr, witnesses, ac);
  // The elements (s^2, s) alone, which the proof exhibits as witnesses.
  std::vector<Elem> squares;
  for (Elem s : in.s.elements())
    squares.push_back(rr.encode(Literal::list({r.decode(r.mul(s, s)), Literal::list({r.decode(s)})})));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  const auto proof_form = is_u_s_armendariz_up_to(rr, squares, ac);
  out.payload()["idealization"] = rr.describe();
  out.payload()["armendariz"] = armendariz_json(rr, v);
  out.payload()["square_witness_form"] = armendariz_json(rr, proof_form);
  out.conclude(v.uniform_holds);
}

void s_reduced_implies_hopfian(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  bool holds = true;
  std::uint32_t longest = 0;
  json entries = json::array();
  for (const auto& e : s_strongly_hopfian_profile(r, in.s)) {
    longest = std::max(longest, e.stabilization);
    const bool ok = e.shift_witness && check_shift_witness(r, e.element, *e.shift_witness);
    json row = {{"a", element_to_json(r, e.element)},
                {"stabilization", e.stabilization},
                {"k", e.k},
                {"s", element_to_json(r, e.s)}};
    row["shift_witness"] = e.shift_witness ? element_to_json(r, *e.shift_witness) : json(nullptr);
    entries.push_back(row);
    if (!ok && holds) {
      holds = false;
      out.payload()["counterexample"] = row;
    }
  }
  out.payload()["profile"] = entries;
  out.payload()["longest_chain"] = longest;
  out.conclude(holds);
}

void s_pf_implies_s_reduced(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  const auto pf = is_s_pf(r, in.s);
  out.hypothesis("S-PF", pf.verdict);
  if (pf.failing_annihilator_of)
    out.payload()["non_pure_annihilator_of"] = element_to_json(r, *pf.failing_annihilator_of);
  if (!out.proceed()) return;
  const auto cert = is_s_reduced(r, in.s);
  if (cert.failing_element)
    out.payload()["counterexample"] = {{"a", element_to_json(r, *cert.failing_element)}};
  out.conclude(cert.verdict);
}

struct Decomposition {
  std::vector<Ideal> primes;
  std::vector<QuotientResult> quotients;
  std::vector<MultiplicativeSet> images;
  std::vector<std::optional<Elem>> domain_witness;
  ElementSet kernel;
  bool kernel_torsion = true;
  bool surjective = true;
  bool domains = true;
  json payload;
};

Decomposition decompose(const Instance& in) {
  const FiniteRing& r = in.ring;
  Decomposition d{.primes = s_minimal_s_primes(r, in.s), .quotients = {}, .images = {},
                  .domain_witness = {}, .kernel = r.all_elements(), .payload = json::array()};
  for (const Ideal& p : d.primes) {
    d.quotients.push_back(quotient_ring(r, p.members()));
    const auto& q = d.quotients.back();
    d.images.push_back(image_of(in.s, q));
    d.domain_witness.push_back(is_s_integral_domain(q.ring, d.images.back()));
    ElementSet image = q.ring.empty_set();
    ElementSet zero_fiber = r.empty_set();
    for (Elem x = 0; x < r.size(); ++x) {
      image.insert(q.projection[x]);
      if (q.projection[x] == q.ring.zero()) zero_fiber.insert(x);
    }
    d.kernel &= zero_fiber;
    const bool onto = image.size() == q.ring.size();
    d.surjective = d.surjective && onto;
    d.domains = d.domains && d.domain_witness.back().has_value();
    json row = {{"prime", ideal_json(r, p)}, {"quotient_size", q.ring.size()},
                {"projection_surjective", onto}};
    row["integral_domain_witness"] = d.domain_witness.back()
                                         ? element_to_json(q.ring, *d.domain_witness.back())
                                         : json(nullptr);
    d.payload.push_back(row);
  }
  d.kernel.for_each([&](Elem x) {
    if (!is_s_zero_element(r, in.s, x)) d.kernel_torsion = false;
  });
  return d;
}

void structure_forward(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.hypothesis("S-reduced", is_s_reduced(r, in.s).verdict);
  if (!out.proceed()) return;
  const Decomposition d = decompose(in);
  out.payload()["s_minimal_s_primes"] = d.payload;
  out.payload()["kernel"] = set_to_json(r, d.kernel);
  out.payload()["kernel_s_torsion"] = d.kernel_torsion;
  out.payload()["projections_surjective"] = d.surjective;
  out.payload()["quotients_s_integral_domains"] = d.domains;
  out.conclude(!d.primes.empty() && d.kernel_torsion && d.surjective && d.domains);
}

void structure_converse(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  const Decomposition d = decompose(in);
  out.hypothesis("S-minimal S-primes exist", !d.primes.empty());
  out.hypothesis("kernel of r -> (r + P_i) is S-torsion", d.kernel_torsion);
  out.hypothesis("every projection is surjective", d.surjective);
  out.hypothesis("every R/P_i is an S̄_i-integral domain", d.domains);
  out.payload()["s_minimal_s_primes"] = d.payload;
  if (!out.proceed()) return;
  // Re-derive: for nilpotent r pick t_i ∈ S with t_i r ∈ P_i, then s' with s' (∏ t_i) r = 0.
  bool derived = true;
  json rows = json::array();
  nilpotent_set(r).for_each([&](Elem a) {
    Elem t = r.one();
    for (const Ideal& p : d.primes) {
      const auto& els = in.s.elements();
      const auto it = std::find_if(els.begin(), els.end(),
                                   [&](Elem s) { return p.contains(r.mul(s, a)); });
      if (it == els.end()) {
        derived = false;
        return;
      }
      t = r.mul(t, *it);
    }
    const auto s2 = is_s_zero_element(r, in.s, r.mul(t, a));
    if (!s2) {
      derived = false;
      return;
    }
    rows.push_back({{"a", element_to_json(r, a)},
                    {"s", element_to_json(r, r.mul(*s2, t))}});
  });
  const bool direct = is_s_reduced(r, in.s).verdict;
  out.payload()["derived_witnesses"] = rows;
  out.payload()["derived"] = derived;
  out.payload()["s_reduced"] = direct;
  out.conclude(derived && direct);
}

void nil_is_intersection(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.note(std::string(kDegenerate));
  out.hypothesis("S ∩ Z(R) = ∅", !zero_divisor_set(r).intersects(in.s.members()));
  if (!out.proceed()) return;
  ElementSet meet = r.all_elements();
  std::size_t primes = 0;
  for (const Ideal& p : enumerate_ideals(r))
    if (!p.members().intersects(in.s.members()) && is_prime_ideal(r, p)) {
      ++primes;
      meet &= p.members();
    }
  const ElementSet nil = nilpotent_set(r);
  out.payload()["nilradical"] = set_to_json(r, nil);
  out.payload()["intersection"] = set_to_json(r, meet);
  out.payload()["primes_disjoint_from_s"] = primes;
  out.conclude(meet == nil);
}

void nil_nilpotent(const Instance& in, const HarnessConfig&, Outcome& out) {
  const FiniteRing& r = in.ring;
  out.note(std::string(kDegenerate));
  out.note(std::string(kArtinianReading));
  out.hypothesis("S ∩ Z(R) = ∅", !zero_divisor_set(r).intersects(in.s.members()));
  out.hypothesis("S-Artinian (every finite ring)", true);
  if (!out.proceed()) return;
  const Ideal nil = Ideal::from_members(r, nilpotent_set(r));
  Ideal power = nil;
  std::size_t k = 1;
  while (!power.is_zero() && k <= r.size()) {
    power = ideal_product(r, power, nil);
    ++k;
  }
  out.payload()["nilradical"] = ideal_json(r, nil);
  if (power.is_zero()) out.payload()["nilpotency_index"] = k;
  out.conclude(power.is_zero());
}

using Checker = void (*)(const Instance&, const HarnessConfig&, Outcome&);

Checker checker_for(StatementId id) {
  switch (id) {
    case StatementId::SRadicalQuotient: return s_radical_quotient;
    case StatementId::IntersectionVsProduct: return intersection_vs_product;
    case StatementId::SpectrumSZero: return spectrum_s_zero;
    case StatementId::NilSInColon: return nil_s_in_colon;
    case StatementId::NilSSZero: return nil_s_s_zero;
    case StatementId::LocalizationReduced: return localization_reduced;
    case StatementId::LocalizationArtinian: return localization_artinian;
    case StatementId::ProductOfFields: return product_of_fields;
    case StatementId::PolyTransfer: return poly_transfer;
    case StatementId::USReducedImpliesUSArmendariz: return us_reduced_implies_us_armendariz;
    case StatementId::ERingArmendariz: return e_ring_armendariz;
    case StatementId::IdealizationArmendariz: return idealization_armendariz;
    case StatementId::SReducedImpliesHopfian: return s_reduced_implies_hopfian;
    case StatementId::SPFImpliesSReduced: return s_pf_implies_s_reduced;
    case StatementId::StructureForward: return structure_forward;
    case StatementId::StructureConverse: return structure_converse;
    case StatementId::NilIsIntersection: return nil_is_intersection;
    case StatementId::NilNilpotent: return nil_nilpotent;
  }
  throw std::logic_error("unknown statement");
}

// ---------------------------------------------------------------------------
// Corpus

struct Seed {
  RingExpression expr;
  std::vector<Literal> gens;
};

Literal pair_lit(std::int64_t a, std::int64_t b) { return Literal::list({a, b}); }

std::vector<Seed> curated() {
  using E = RingExpression;
  const auto z = [](std::uint64_t n) { return E::zmod(n); };
  return {
      {z(24), {2}},
      {z(12), {4}},
      {z(12), {2}},
      {z(6), {2}},
      {z(4), {3}},
      {z(8), {3}},
      {z(30), {}},
      {E::product({z(2), z(2)}), {pair_lit(1, 0)}},
      {E::product({z(2), z(2)}), {}},
      {z(6), {}},
      {z(5), {}},
      {z(7), {}},
      {z(4), {}},
      {z(12), {}},
      {z(24), {}},
      {E::quotient(z(24), {12}), {2}},
      {E::product({z(12), z(2)}), {pair_lit(4, 1)}},
      {E::product({z(2), z(2), z(2)}), {Literal::list({1, 1, 0})}},
      {E::self_idealization(z(4)), {}},
      {E::self_idealization(z(3)), {Literal::list({2, Literal::list({0})})}},
      {E::idealization(z(6), ModuleSpec{{{2}}}), {Literal::list({5, Literal::list({0})})}},
  };
}

std::optional<Instance> try_instance(const RingExpression& expr, const std::vector<Literal>& gens,
                                     const RingOptions& options) {
  try {
    return make_instance(expr, gens, options);
  } catch (const SringError&) {
    return std::nullopt;
  }
}

RingExpression random_expression(std::mt19937_64& rng, std::size_t max_size) {
  using E = RingExpression;
  const auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  const std::uint64_t cap = std::max<std::size_t>(max_size, 4);
  switch (rng() % 4) {
    case 0:
      return E::zmod(pick(2, cap));
    case 1: {
      const std::uint64_t a = pick(2, cap / 2);
      const std::uint64_t b = pick(2, std::max<std::uint64_t>(2, cap / a));
      return E::product({E::zmod(a), E::zmod(b)});
    }
    case 2: {
      const std::uint64_t n = pick(4, 2 * cap);
      return E::quotient(E::zmod(n), {static_cast<std::int64_t>(pick(1, n - 1))});
    }
    default: {
      const std::uint64_t n = pick(2, 8);
      return E::idealization(E::zmod(n),
                             ModuleSpec{{{static_cast<std::int64_t>(pick(0, n - 1))}}});
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<StatementId>& all_statements() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> out;
    for (const auto& e : kCatalog) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(StatementId id) {
  for (const auto& e : kCatalog)
    if (e.id == id) return e.name;
  return "UNKNOWN";
}

std::optional<StatementId> statement_from_string(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Violated: return "VIOLATED";
  }
  return "unknown";
}

std::string Instance::describe() const {
  std::string out = expression.describe() + " S=";
  if (generators.empty()) return out + "{1}";
  out += "<";
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += (i ? "," : "") + generators[i].to_string();
  return out + ">";
}

Instance make_instance(const RingExpression& expr, const std::vector<Literal>& generators,
                       const RingOptions& options) {
  FiniteRing ring = build_ring(expr, options);
  std::vector<Elem> gens;
  for (const auto& g : generators) gens.push_back(ring.encode(g));
  MultiplicativeSet s = mult_closure(ring, gens);
  return Instance{expr, generators, std::move(ring), std::move(s)};
}

std::vector<Instance> generate_corpus(const CorpusConfig& config) {
  RingOptions options;
  options.size_cap = std::max<std::size_t>(options.size_cap, config.max_size);
  std::vector<Instance> out;
  const auto accept = [&](Instance&& in) {
    if (config.only_s_reduced && !is_s_reduced(in.ring, in.s).verdict) return false;
    out.push_back(std::move(in));
    return true;
  };
  if (config.include_curated)
    for (const auto& seed : curated())
      if (auto in = try_instance(seed.expr, seed.gens, options)) accept(std::move(*in));

  std::mt19937_64 rng(config.seed);
  std::size_t added = 0;
  for (std::size_t attempt = 0; added < config.count && attempt < 100 * (config.count + 1);
       ++attempt) {
    const RingExpression expr = random_expression(rng, config.max_size);
    FiniteRing ring;
    try {
      ring = build_ring(expr, options);
    } catch (const SringError&) {
      continue;
    }
    if (ring.size() > config.max_size) continue;
    std::optional<Instance> in;
    for (int tries = 0; tries < 8 && !in; ++tries) {
      std::vector<Literal> gens;
      const std::size_t k = rng() % 3;
      for (std::size_t i = 0; i < k; ++i)
        gens.push_back(ring.decode(static_cast<Elem>(1 + rng() % (ring.size() - 1))));
      in = try_instance(expr, gens, options);
    }
    if (!in) in = try_instance(expr, {}, options);
    if (in && accept(std::move(*in))) ++added;
  }
  return out;
}

Evaluation evaluate_statement(StatementId id, const Instance& instance,
                              const HarnessConfig& config, bool force) {
  Outcome out(force);
  checker_for(id)(instance, config, out);
  return out.take();
}

StatementReport check_statement(StatementId id, const Instance& instance,
                                const HarnessConfig& config, std::size_t instance_index) {
  const auto start = std::chrono::steady_clock::now();
  Evaluation e = evaluate_statement(id, instance, config, false);
  StatementReport report;
  report.id = id;
  report.instance_index = instance_index;
  report.instance = instance.describe();
  report.input = to_json(RingDocument{instance.expression, instance.generators});
  report.hypotheses = std::move(e.hypotheses);
  report.notes = std::move(e.notes);
  report.payload = std::move(e.payload);
  if (!e.hypotheses_met || !e.conclusion)
    report.verdict = Verdict::HypothesisNotMet;
  else
    report.verdict = *e.conclusion ? Verdict::Holds : Verdict::Violated;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<StatementReport> verify_corpus(const std::vector<StatementId>& ids,
                                           const std::vector<Instance>& corpus,
                                           const HarnessConfig& config) {
  const std::size_t n = corpus.size();
  return parallel_map<StatementReport>(ids.size() * n, [&](std::size_t task) {
    return check_statement(ids[task / n], corpus[task % n], config, task % n);
  });
}

json to_json(const StatementReport& report, bool with_timings) {
  json hyps = json::array();
  for (const auto& h : report.hypotheses) hyps.push_back({{"name", h.name}, {"met", h.met}});
  json out = {{"statement", to_string(report.id)},
              {"instance_index", report.instance_index},
              {"instance", report.instance},
              {"input", report.input},
              {"hypotheses", hyps},
              {"verdict", to_string(report.verdict)},
              {"notes", report.notes},
              {"payload", report.payload}};
  if (with_timings) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

std::string_view to_string(SearchVariant v) {
  switch (v) {
    case SearchVariant::Full: return "full";
    case SearchVariant::DropHypothesis: return "drop-hypothesis";
    case SearchVariant::Converse: return "converse";
  }
  return "unknown";
}

std::optional<SearchVariant> variant_from_string(std::string_view name) {
  for (auto v : {SearchVariant::Full, SearchVariant::DropHypothesis, SearchVariant::Converse})
    if (to_string(v) == name) return v;
  return std::nullopt;
}

namespace {

using LiteralMap = std::function<std::optional<Literal>(const Literal&)>;

struct Smaller {
  RingExpression expr;
  LiteralMap map;
};

std::optional<Literal> identity_map(const Literal& l) { return l; }

std::vector<Smaller> smaller_expressions(const RingExpression& expr) {
  using Kind = RingExpression::Kind;
  std::vector<Smaller> out;
  switch (expr.kind) {
    case Kind::ZMod:
      for (std::uint64_t p = 2; p <= expr.modulus; ++p) {
        if (expr.modulus % p != 0) continue;
        bool prime = true;
        for (std::uint64_t q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
        // Literals reduce modulo the new modulus on encoding.
        if (prime && expr.modulus / p >= 2)
          out.push_back({RingExpression::zmod(expr.modulus / p), identity_map});
      }
      break;
    case Kind::Product: {
      const std::size_t k = expr.operands.size();
      for (std::size_t drop = 0; drop < k && k >= 2; ++drop) {
        std::vector<RingExpression> rest;
        for (std::size_t i = 0; i < k; ++i)
          if (i != drop) rest.push_back(expr.operands[i]);
        const bool single = rest.size() == 1;
        RingExpression e = single ? rest.front() : RingExpression::product(rest);
        out.push_back({std::move(e), [drop, k, single](const Literal& l) -> std::optional<Literal> {
                         if (l.is_integer() || l.items().size() != k) return std::nullopt;
                         std::vector<Literal> items;
                         for (std::size_t i = 0; i < k; ++i)
                           if (i != drop) items.push_back(l.items()[i]);
                         return single ? items.front() : Literal::list(items);
                       }});
      }
      for (std::size_t f = 0; f < k; ++f)
        for (auto& sub : smaller_expressions(expr.operands[f])) {
          RingExpression e = expr;
          e.operands[f] = sub.expr;
          out.push_back({std::move(e), [f, k, m = sub.map](const Literal& l) -> std::optional<Literal> {
                           if (l.is_integer() || l.items().size() != k) return std::nullopt;
                           auto items = l.items();
                           auto mapped = m(items[f]);
                           if (!mapped) return std::nullopt;
                           items[f] = *mapped;
                           return Literal::list(items);
                         }});
        }
      break;
    }
    case Kind::Quotient:
      for (auto& sub : smaller_expressions(expr.base())) {
        std::vector<Literal> gens;
        bool ok = true;
        for (const auto& g : expr.ideal) {
          auto m = sub.map(g);
          ok = ok && m.has_value();
          if (m) gens.push_back(*m);
        }
        if (ok) out.push_back({RingExpression::quotient(sub.expr, gens), sub.map});
      }
      break;
    case Kind::Idealization: {
      const std::size_t k = expr.module.cyclic.size();
      for (auto& sub : smaller_expressions(expr.base())) {
        ModuleSpec spec;
        bool ok = true;
        for (const auto& comp : expr.module.cyclic) {
          std::vector<Literal> gens;
          for (const auto& g : comp) {
            auto m = sub.map(g);
            ok = ok && m.has_value();
            if (m) gens.push_back(*m);
          }
          spec.cyclic.push_back(gens);
        }
        if (!ok) continue;
        out.push_back({RingExpression::idealization(sub.expr, spec),
                       [m = sub.map](const Literal& l) -> std::optional<Literal> {
                         if (l.is_integer() || l.items().size() != 2 || l.items()[1].is_integer())
                           return std::nullopt;
                         auto r = m(l.items()[0]);
                         if (!r) return std::nullopt;
                         std::vector<Literal> parts;
                         for (const auto& x : l.items()[1].items()) {
                           auto y = m(x);
                           if (!y) return std::nullopt;
                           parts.push_back(*y);
                         }
                         return Literal::list({*r, Literal::list(parts)});
                       }});
      }
      for (std::size_t drop = 0; drop < k && k >= 2; ++drop) {
        ModuleSpec spec;
        for (std::size_t i = 0; i < k; ++i)
          if (i != drop) spec.cyclic.push_back(expr.module.cyclic[i]);
        out.push_back({RingExpression::idealization(expr.base(), spec),
                       [drop, k](const Literal& l) -> std::optional<Literal> {
                         if (l.is_integer() || l.items().size() != 2 || l.items()[1].is_integer() ||
                             l.items()[1].items().size() != k)
                           return std::nullopt;
                         std::vector<Literal> parts;
                         for (std::size_t i = 0; i < k; ++i)
                           if (i != drop) parts.push_back(l.items()[1].items()[i]);
                         return Literal::list({l.items()[0], Literal::list(parts)});
                       }});
      }
      // The base ring itself, r ↦ (r, 0) dropped to r.
      out.push_back({expr.base(), [](const Literal& l) -> std::optional<Literal> {
                       if (l.is_integer() || l.items().size() != 2) return std::nullopt;
                       return l.items()[0];
                     }});
      break;
    }
    case Kind::TriangularE:
      for (auto& sub : smaller_expressions(expr.base()))
        out.push_back({RingExpression::triangular_e(sub.expr),
                       [m = sub.map](const Literal& l) -> std::optional<Literal> {
                         if (l.is_integer() || l.items().size() != 4) return std::nullopt;
                         std::vector<Literal> items;
                         for (const auto& x : l.items()) {
                           auto y = m(x);
                           if (!y) return std::nullopt;
                           items.push_back(*y);
                         }
                         return Literal::list(items);
                       }});
      break;
  }
  return out;
}

bool search_hit(SearchVariant variant, const Evaluation& e) {
  if (!e.conclusion) return false;
  switch (variant) {
    case SearchVariant::Full: return e.hypotheses_met && !*e.conclusion;
    case SearchVariant::DropHypothesis: return !*e.conclusion;
    case SearchVariant::Converse: return !e.hypotheses_met && *e.conclusion;
  }
  return false;
}

}  // namespace

std::vector<Instance> shrink_candidates(const Instance& instance, const RingOptions& options) {
  std::vector<Instance> out;
  for (const auto& sub : smaller_expressions(instance.expression)) {
    std::vector<Literal> gens;
    bool ok = true;
    for (const auto& g : instance.generators) {
      auto m = sub.map(g);
      ok = ok && m.has_value();
      if (m) gens.push_back(*m);
    }
    if (!ok) continue;
    if (auto in = try_instance(sub.expr, gens, options);
        in && in->ring.size() < instance.ring.size())
      out.push_back(std::move(*in));
  }
  for (std::size_t drop = 0; drop < instance.generators.size(); ++drop) {
    std::vector<Literal> gens;
    for (std::size_t i = 0; i < instance.generators.size(); ++i)
      if (i != drop) gens.push_back(instance.generators[i]);
    if (auto in = try_instance(instance.expression, gens, options)) out.push_back(std::move(*in));
  }
  std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    if (a.ring.size() != b.ring.size()) return a.ring.size() < b.ring.size();
    return a.generators.size() < b.generators.size();
  });
  return out;
}

SearchResult counterexample_search(StatementId id, SearchVariant variant,
                                   const SearchConfig& config) {
  const bool force = variant != SearchVariant::Full;
  std::vector<Instance> pool = generate_corpus(config.corpus);
  CorpusConfig fresh = config.corpus;
  fresh.include_curated = false;
  fresh.count = config.fresh;
  fresh.seed = config.corpus.seed ^ 0x5deece66dULL;
  for (auto& in : generate_corpus(fresh)) pool.push_back(std::move(in));

  SearchResult result;
  for (const Instance& in : pool) {
    ++result.instances_examined;
    Evaluation e = evaluate_statement(id, in, config.harness, force);
    if (!search_hit(variant, e)) continue;

    Counterexample cx{in, std::move(e), in.describe(), 0};
    bool shrunk = true;
    while (shrunk && cx.shrink_steps < config.max_shrink_steps) {
      shrunk = false;
      for (Instance& cand : shrink_candidates(cx.instance, config.harness.ring_options)) {
        Evaluation ce = evaluate_statement(id, cand, config.harness, force);
        if (!search_hit(variant, ce)) continue;
        cx.instance = std::move(cand);
        cx.evaluation = std::move(ce);
        ++cx.shrink_steps;
        shrunk = true;
        break;
      }
    }
    result.counterexample = std::move(cx);
    break;
  }
  return result;
}

}  // namespace sring
