#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sring/ideal.hpp"
#include "sring/ring.hpp"

namespace sring {

enum class StatementId {
  SRadicalQuotient,
  IntersectionVsProduct,
  SpectrumSZero,
  NilSInColon,
  NilSSZero,
  LocalizationReduced,
  LocalizationArtinian,
  ProductOfFields,
  PolyTransfer,
  USReducedImpliesUSArmendariz,
  ERingArmendariz,
  IdealizationArmendariz,
  SReducedImpliesHopfian,
  SPFImpliesSReduced,
  StructureForward,
  StructureConverse,
  NilIsIntersection,
  NilNilpotent,
};

/// Catalog order.
const std::vector<StatementId>& all_statements();
/// Catalog name, e.g. "SPECTRUM_S_ZERO".
std::string_view to_string(StatementId id);
std::optional<StatementId> statement_from_string(std::string_view name);

enum class Verdict { Holds, HypothesisNotMet, Violated };
std::string_view to_string(Verdict v);

/// A ring with a multiplicative set, plus the file form it came from.
struct Instance {
  RingExpression expression;
  std::vector<Literal> generators;
  FiniteRing ring;
  MultiplicativeSet s;

  std::string describe() const;
};

/// Builds the ring and closes the generators; SringError on invalid input.
Instance make_instance(const RingExpression& expr, const std::vector<Literal>& generators,
                       const RingOptions& options = {});

struct CorpusConfig {
  std::size_t max_size = 64;
  std::size_t count = 30;
  std::uint64_t seed = 42;
  bool only_s_reduced = false;
  bool include_curated = true;
};

/**
 * Curated instances (instance 0 is Z24 with S = <2>) followed by `count`
 * seeded random ones: Z/n, products, quotients and idealizations of size at
 * most max_size, each with up to two random generators whose closure avoids 0.
 * Identical configs give identical corpora.
 */
std::vector<Instance> generate_corpus(const CorpusConfig& config);

struct HarnessConfig {
  std::uint64_t seed = 42;
  /// Armendariz checks: exhaustive at this degree up to this ring size,
  /// sampled above it.
  std::size_t exhaustive_max_size = 12;
  std::size_t exhaustive_degree = 2;
  std::uint64_t exhaustive_budget = 2985984;  // 12^6
  std::size_t sampled_degree = 1;
  std::uint64_t sampled_budget = 100000;
  /// E(R) has |R|^4 elements.
  std::size_t e_ring_max_base = 12;
  /// Pairwise ideal checks run on rings with at most this many ideals.
  std::size_t max_ideals_pairwise = 64;
  RingOptions ring_options{};
};

struct HypothesisCheck {
  std::string name;
  bool met = false;
};

struct StatementReport {
  StatementId id = StatementId::SRadicalQuotient;
  std::size_t instance_index = 0;
  std::string instance;
  /// Ring-definition document reproducing the instance.
  nlohmann::json input;
  std::vector<HypothesisCheck> hypotheses;
  Verdict verdict = Verdict::HypothesisNotMet;
  /// Watermarks such as "degenerate hypotheses".
  std::vector<std::string> notes;
  nlohmann::json payload = nlohmann::json::object();
  double runtime_seconds = 0;
};

/// Checks one statement; hypothesis-not-met never evaluates the conclusion.
StatementReport check_statement(StatementId id, const Instance& instance,
                                const HarnessConfig& config = {}, std::size_t instance_index = 0);

/// Every statement on every instance, ordered by (statement, instance).
std::vector<StatementReport> verify_corpus(const std::vector<StatementId>& ids,
                                           const std::vector<Instance>& corpus,
                                           const HarnessConfig& config = {});

/// `with_timings` adds runtime_seconds; otherwise the line is deterministic.
nlohmann::json to_json(const StatementReport& report, bool with_timings = false);

enum class SearchVariant { Full, DropHypothesis, Converse };
std::string_view to_string(SearchVariant v);
std::optional<SearchVariant> variant_from_string(std::string_view name);

/// Hypotheses and conclusion evaluated independently, for searching.
struct Evaluation {
  std::vector<HypothesisCheck> hypotheses;
  std::vector<std::string> notes;
  bool hypotheses_met = false;
  /// Absent when the conclusion is out of reach (e.g. above desk scale).
  std::optional<bool> conclusion;
  nlohmann::json payload = nlohmann::json::object();
};

/// With `force`, the conclusion is evaluated even when hypotheses fail.
Evaluation evaluate_statement(StatementId id, const Instance& instance,
                              const HarnessConfig& config, bool force);

struct SearchConfig {
  CorpusConfig corpus{};
  /// Fresh seeded instances tried after the corpus.
  std::size_t fresh = 60;
  HarnessConfig harness{};
  std::size_t max_shrink_steps = 64;
};

struct Counterexample {
  Instance instance;
  Evaluation evaluation;
  /// Instance the search first hit, before shrinking.
  std::string found_on;
  std::size_t shrink_steps = 0;
};

struct SearchResult {
  std::size_t instances_examined = 0;
  std::optional<Counterexample> counterexample;
};

/**
 * Looks for an instance where:
 *   full            hypotheses hold and the conclusion fails,
 *   drop-hypothesis the conclusion fails (hypotheses ignored),
 *   converse        the conclusion holds and the hypotheses fail.
 * A hit is shrunk greedily: smaller ring first, then fewer generators of S.
 */
SearchResult counterexample_search(StatementId id, SearchVariant variant,
                                   const SearchConfig& config);

/// Smaller variants of an instance, ring size ascending then generator count.
std::vector<Instance> shrink_candidates(const Instance& instance, const RingOptions& options = {});

}  // namespace sring
