#include "doctest.h"
#include "oracles.hpp"

#include <set>

#include "sring/harness.hpp"
#include "sring/ring_io.hpp"
#include "sring/s_theory.hpp"

using namespace sring;
using nlohmann::json;

namespace {

const std::vector<Instance>& default_corpus() {
  static const std::vector<Instance> corpus = generate_corpus({});
  return corpus;
}

std::vector<Elem> decode_set(const FiniteRing& r, const json& members) {
  std::vector<Elem> out;
  for (const auto& m : members) out.push_back(r.encode(literal_from_json(m, "$")));
  return out;
}

// Naive re-check of one S_RADICAL_QUOTIENT payload entry: recompute both
// sides from the listed ideal with brute-force definitions.
std::pair<bool, bool> recheck_radical_entry(const Instance& in, const json& entry) {
  const FiniteRing& r = in.ring;
  const auto members = decode_set(r, entry["ideal"]);
  const oracle::Set ideal(members.begin(), members.end());
  REQUIRE(oracle::is_ideal(r, ideal));
  // I is S-radical: s*a^n ∈ I for some s, n forces a ∈ I.
  bool radical = true;
  for (Elem a = 0; a < r.size(); ++a) {
    if (ideal.count(a)) continue;
    for (Elem s : in.s.elements())
      for (unsigned n = 1; n <= r.size(); ++n)
        if (ideal.count(r.mul(s, oracle::power(r, a, n)))) radical = false;
  }
  // R/I is S̄-reduced: a^n ∈ I implies s*a ∈ I for some s.
  bool reduced = true;
  for (Elem a = 0; a < r.size(); ++a) {
    bool nil = false;
    for (unsigned n = 1; n <= r.size(); ++n) nil = nil || ideal.count(oracle::power(r, a, n));
    if (!nil) continue;
    bool killed = false;
    for (Elem s : in.s.elements()) killed = killed || ideal.count(r.mul(s, a));
    reduced = reduced && killed;
  }
  return {radical, reduced};
}

}  // namespace

TEST_CASE("catalog names are unique and round-trip") {
  std::set<std::string_view> names;
  for (StatementId id : all_statements()) {
    names.insert(to_string(id));
    CHECK(statement_from_string(to_string(id)) == id);
  }
  CHECK(names.size() == 18);
  CHECK_FALSE(statement_from_string("NOT_A_STATEMENT").has_value());
  CHECK(variant_from_string("drop-hypothesis") == SearchVariant::DropHypothesis);
}

TEST_CASE("default corpus: instance 0, determinism and validity") {
  const auto& corpus = default_corpus();
  REQUIRE(!corpus.empty());
  CHECK(corpus[0].describe() == "Z24 S=<2>");
  CHECK(corpus[0].s.elements() == std::vector<Elem>{1, 2, 4, 8, 16});

  const auto again = generate_corpus({});
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].describe() == corpus[i].describe());
    CHECK(again[i].s.members() == corpus[i].s.members());
  }

  const auto curated = generate_corpus(CorpusConfig{64, 0, 42, false, true});
  CHECK(corpus.size() == curated.size() + 30);
  for (std::size_t i = curated.size(); i < corpus.size(); ++i) {
    const Instance& in = corpus[i];
    INFO(in.describe());
    CHECK(in.ring.size() <= 64);
    CHECK(in.s.contains(in.ring.one()));
    CHECK_FALSE(in.s.contains(0));
    for (Elem a : in.s.elements())
      for (Elem b : in.s.elements()) CHECK(in.s.contains(in.ring.mul(a, b)));
  }
  const auto other_seed = generate_corpus(CorpusConfig{64, 30, 7, false, true});
  bool differs = false;
  for (std::size_t i = curated.size(); i < corpus.size(); ++i)
    differs |= other_seed[i].describe() != corpus[i].describe();
  CHECK(differs);
}

TEST_CASE("filtered corpus keeps only S-reduced instances") {
  const auto corpus = generate_corpus(CorpusConfig{64, 10, 42, true, true});
  for (const auto& in : corpus) CHECK(is_s_reduced(in.ring, in.s).verdict);
}

TEST_CASE("no statement is violated on the default corpus") {
  const auto reports = verify_corpus(all_statements(), default_corpus());
  CHECK(reports.size() == 18 * default_corpus().size());
  for (const auto& r : reports) {
    INFO(to_string(r.id) << " on " << r.instance);
    CHECK(r.verdict != Verdict::Violated);
  }
  // Canonical order: statement-major.
  for (std::size_t k = 0; k < reports.size(); ++k) {
    CHECK(reports[k].id == all_statements()[k / default_corpus().size()]);
    CHECK(reports[k].instance_index == k % default_corpus().size());
  }
}

TEST_CASE("spectrum intersection of Z24 is S-zero") {
  const auto r = check_statement(StatementId::SpectrumSZero, default_corpus()[0]);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.payload["intersection"] == json::array({0}));
  CHECK(r.payload["spectrum"].size() == 4);
}

TEST_CASE("Z30 splits into fields of sizes 2, 3, 5") {
  const Instance in = make_instance(RingExpression::zmod(30), {});
  const auto r = check_statement(StatementId::ProductOfFields, in);
  CHECK(r.verdict == Verdict::Holds);
  std::multiset<std::size_t> sizes;
  for (const auto& f : r.payload["factors"]) sizes.insert(f["field_size"].get<std::size_t>());
  CHECK(sizes == std::multiset<std::size_t>{2, 3, 5});
  CHECK(r.payload["pairs_checked"] == 900);
  CHECK(r.payload["bijective"] == true);
  CHECK(r.payload["homomorphic"] == true);
  const auto degenerate = std::find(r.notes.begin(), r.notes.end(), "degenerate hypotheses");
  CHECK(degenerate != r.notes.end());
}

TEST_CASE("quotient equivalence: hypothesis failure on Z24/(12) is reported per ideal") {
  const auto r = check_statement(StatementId::SRadicalQuotient, default_corpus()[0]);
  CHECK(r.verdict == Verdict::Holds);
  bool saw_twelve = false;
  for (const auto& entry : r.payload["ideals"]) {
    if (entry["ideal"] != json::array({0, 12})) continue;
    saw_twelve = true;
    CHECK(entry["status"] == "hypothesis-not-met");
    CHECK(entry["s_bar"] == json::array({1, 2, 4, 8}));
  }
  CHECK(saw_twelve);
}

TEST_CASE("drop-hypothesis search finds and shrinks the quotient counterexample") {
  const auto res = counterexample_search(StatementId::SRadicalQuotient,
                                         SearchVariant::DropHypothesis, SearchConfig{});
  REQUIRE(res.counterexample.has_value());
  const auto& cx = *res.counterexample;
  CHECK(cx.found_on == "Z24 S=<2>");
  CHECK(cx.instance.describe() == "Z6 S=<2>");
  CHECK(cx.evaluation.conclusion == false);
  // Double entry: the listed ideal reproduces the failure under naive checks.
  const json& entry = cx.evaluation.payload["counterexample"];
  CHECK(entry["status"] == "VIOLATED");
  CHECK(entry["hypothesis_met"] == false);
  const auto [radical, reduced] = recheck_radical_entry(cx.instance, entry);
  CHECK(radical == entry["ideal_is_s_radical"].get<bool>());
  CHECK(reduced == entry["quotient_s_reduced"].get<bool>());
  CHECK(radical != reduced);
  // The input document rebuilds the same instance.
  const json doc = to_json(RingDocument{cx.instance.expression, cx.instance.generators});
  const RingDocument back = parse_ring_document(doc.dump());
  CHECK(make_instance(back.ring, back.generators).describe() == cx.instance.describe());
}

TEST_CASE("every recorded quotient entry survives the naive re-check") {
  for (std::size_t i = 0; i < 12; ++i) {
    const Instance& in = default_corpus()[i];
    const Evaluation e = evaluate_statement(StatementId::SRadicalQuotient, in, {}, true);
    for (const auto& entry : e.payload["ideals"]) {
      const auto [radical, reduced] = recheck_radical_entry(in, entry);
      CHECK(radical == entry["ideal_is_s_radical"].get<bool>());
      CHECK(reduced == entry["quotient_s_reduced"].get<bool>());
    }
  }
}

TEST_CASE("full-variant search finds nothing for the spectrum statement") {
  const auto res =
      counterexample_search(StatementId::SpectrumSZero, SearchVariant::Full, SearchConfig{});
  CHECK_FALSE(res.counterexample.has_value());
  CHECK(res.instances_examined == default_corpus().size() + 60);
}

TEST_CASE("converse search hits have failing hypotheses and a holding conclusion") {
  const auto res = counterexample_search(StatementId::USReducedImpliesUSArmendariz,
                                         SearchVariant::Converse, SearchConfig{});
  if (res.counterexample) {
    CHECK_FALSE(res.counterexample->evaluation.hypotheses_met);
    CHECK(res.counterexample->evaluation.conclusion == true);
  }
}

TEST_CASE("shrink candidates are strictly smaller or drop a generator") {
  const Instance in = default_corpus()[16];  // Z12xZ2 with a generator
  const auto cands = shrink_candidates(in);
  REQUIRE(!cands.empty());
  for (std::size_t k = 0; k < cands.size(); ++k) {
    CHECK((cands[k].ring.size() < in.ring.size() ||
           cands[k].generators.size() < in.generators.size()));
    if (k > 0) CHECK(cands[k - 1].ring.size() <= cands[k].ring.size());
  }
}

TEST_CASE("report JSON omits runtime unless asked") {
  const auto r = check_statement(StatementId::NilSSZero, default_corpus()[0]);
  CHECK_FALSE(to_json(r).contains("runtime_seconds"));
  CHECK(to_json(r, true).contains("runtime_seconds"));
  CHECK(to_json(r)["verdict"] == "holds");
  CHECK(to_json(r)["input"]["ring"]["n"] == 24);
}

TEST_CASE("degenerate statements carry the watermark") {
  for (StatementId id : {StatementId::LocalizationArtinian, StatementId::NilIsIntersection,
                         StatementId::NilNilpotent, StatementId::ProductOfFields}) {
    const auto r = check_statement(id, default_corpus()[0]);
    CHECK(std::count(r.notes.begin(), r.notes.end(), "degenerate hypotheses") == 1);
  }
}
