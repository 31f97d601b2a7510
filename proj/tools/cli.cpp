#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "sring/armendariz.hpp"
#include "sring/harness.hpp"
#include "sring/ring_io.hpp"
#include "sring/s_theory.hpp"

namespace sring::cli {

using nlohmann::json;

namespace {

constexpr std::string_view kVersion = "0.1.0";

const std::vector<std::string> kProperties = {
    "axioms",       "reduced",      "s-reduced", "u-s-reduced", "s-integral-domain",
    "s-pf",         "s-hopfian",    "s-armendariz", "polynomial-s-reduced", "s-nilradical",
};

struct Common {
  std::size_t size_cap = 4096;
  bool allow_zero = false;
  bool timings = false;
};

struct LoadedInstance {
  RingDocument doc;
  FiniteRing ring;
  MultiplicativeSet s;
};

LoadedInstance load(const std::string& path, const Common& common) {
  RingDocument doc = load_ring_file(path);
  FiniteRing ring = build_ring(doc.ring, RingOptions{common.size_cap});
  std::vector<Elem> gens;
  for (const auto& g : doc.generators) gens.push_back(ring.encode(g));
  MultiplicativeSet s = mult_closure(ring, gens, common.allow_zero);
  return {std::move(doc), std::move(ring), std::move(s)};
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInClosure: return kZeroInClosure;
    case ErrorKind::SizeCap:
    case ErrorKind::CapExceeded: return kSizeCap;
    case ErrorKind::Parse:
    case ErrorKind::Usage:
    case ErrorKind::InvalidModulus:
    case ErrorKind::MalformedLiteral:
    case ErrorKind::MalformedExpression:
    case ErrorKind::RingMismatch: return kUsage;
    default: return kComputation;
  }
}

class Manifest {
 public:
  Manifest(std::string command, const Common& common)
      : command_(std::move(command)), timings_(common.timings),
        start_(std::chrono::steady_clock::now()) {
    caps_["size_cap"] = common.size_cap;
  }
  void seed(std::uint64_t s) { seed_ = s; }
  void cap(const std::string& key, json value) { caps_[key] = std::move(value); }
  void input(const std::string& path) {
    inputs_.push_back({{"path", path}, {"sha256", sha256_file(path)}});
  }
  json to_json() const {
    json m = {{"tool", "sring"}, {"version", kVersion}, {"command", command_},
              {"caps", caps_}, {"inputs", inputs_}};
    m["seed"] = seed_ ? json(*seed_) : json(nullptr);
    if (timings_)
      m["wall_clock_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return {{"manifest", m}};
  }

 private:
  std::string command_;
  bool timings_;
  std::chrono::steady_clock::time_point start_;
  std::optional<std::uint64_t> seed_;
  json caps_ = json::object();
  json inputs_ = json::array();
};

json pairs_json(const FiniteRing& r, const std::vector<std::pair<Elem, Elem>>& pairs) {
  json out = json::array();
  for (const auto& [a, s] : pairs)
    out.push_back({{"a", element_to_json(r, a)}, {"s", element_to_json(r, s)}});
  return out;
}

json opt_elem(const FiniteRing& r, const std::optional<Elem>& e) {
  return e ? element_to_json(r, *e) : json(nullptr);
}

struct ArmendarizFlags {
  std::size_t degree = 1;
  std::string mode = "exhaustive";
  std::uint64_t seed = 42;
  std::uint64_t budget = 100000;
};

json predicate_report(const std::string& name, const LoadedInstance& in,
                      const ArmendarizFlags& arm) {
  const FiniteRing& r = in.ring;
  const MultiplicativeSet& s = in.s;
  json rep = {{"predicate", name}};
  json w = json::object();
  bool verdict = false;
  if (name == "axioms") {
    const auto a = check_ring_axioms(r, arm.seed);
    verdict = a.ok;
    w = {{"exhaustive", a.exhaustive}, {"triples_checked", a.triples_checked},
         {"failure", a.failure}};
  } else if (name == "reduced") {
    verdict = is_reduced(r);
    w["nilpotents"] = set_to_json(r, nilpotent_set(r));
  } else if (name == "s-reduced") {
    const auto c = is_s_reduced(r, s);
    verdict = c.verdict;
    w = {{"nilpotent_witnesses", pairs_json(r, c.witnesses)},
         {"uniform", opt_elem(r, c.uniform_witness)},
         {"failing_element", opt_elem(r, c.failing_element)}};
    if (c.degenerate) rep["degenerate"] = true;
  } else if (name == "u-s-reduced") {
    const auto u = is_u_s_reduced(r, s);
    verdict = u.has_value();
    w["uniform"] = opt_elem(r, u);
  } else if (name == "s-integral-domain") {
    const auto u = is_s_integral_domain(r, s);
    verdict = u.has_value();
    w["s"] = opt_elem(r, u);
  } else if (name == "s-pf") {
    const auto v = is_s_pf(r, s);
    verdict = v.verdict;
    w = {{"failing_annihilator_of", opt_elem(r, v.failing_annihilator_of)},
         {"failing_member", opt_elem(r, v.failing_member)}};
  } else if (name == "s-hopfian") {
    verdict = true;
    json rows = json::array();
    for (const auto& e : s_strongly_hopfian_profile(r, s)) {
      rows.push_back({{"a", element_to_json(r, e.element)},
                      {"stabilization", e.stabilization},
                      {"k", e.k},
                      {"s", element_to_json(r, e.s)},
                      {"shift_witness", opt_elem(r, e.shift_witness)}});
    }
    w["profile"] = rows;
  } else if (name == "s-armendariz") {
    ArmendarizConfig c;
    c.degree = arm.degree;
    c.mode = arm.mode == "sampled" ? SearchMode::Sampled : SearchMode::Exhaustive;
    c.seed = arm.seed;
    c.budget = arm.budget;
    const auto v = is_u_s_armendariz_up_to(r, s, c);
    verdict = v.uniform_holds;
    w = {{"uniform", opt_elem(r, v.uniform_witness)},
         {"per_pair_holds", v.per_pair_holds},
         {"pairs_examined", v.pairs_examined},
         {"nontrivial_pairs", v.nontrivial_pairs}};
    if (v.violation)
      w["violation"] = {{"f", elements_to_json(r, v.violation->pair.f.coeffs)},
                        {"g", elements_to_json(r, v.violation->pair.g.coeffs)},
                        {"i", v.violation->i},
                        {"j", v.violation->j}};
    rep["mode"] = {{"degree", v.degree}, {"search", to_string(v.mode)}, {"seed", v.seed},
                   {"budget", v.budget}};
    if (v.degenerate) rep["degenerate"] = true;
  } else if (name == "polynomial-s-reduced") {
    const auto t = polynomial_transfer(r, s);
    verdict = t.polynomial_ring_s_reduced;
    w = {{"degree", t.degree}, {"ring_s_reduced", t.ring_s_reduced},
         {"polynomials_examined", t.polynomials_examined}};
    if (t.failing_polynomial) w["unkilled"] = elements_to_json(r, t.failing_polynomial->coeffs);
  } else if (name == "s-nilradical") {
    const SRadical nil = s_nilradical(r, s);
    const auto z = is_s_zero_ideal(r, s, nil.radical);
    verdict = z.verdict;
    w = {{"nil_s", set_to_json(r, nil.radical.members())},
         {"s_zero_witnesses", pairs_json(r, z.witnesses)}};
  }
  if (s.degenerate()) rep["degenerate"] = true;
  rep["verdict"] = verdict;
  rep["witnesses"] = w;
  return rep;
}

json ideal_json(const FiniteRing& r, const Ideal& i) { return set_to_json(r, i.members()); }

void emit(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

std::string summary_table(const std::vector<StatementId>& ids,
                          const std::vector<StatementReport>& reports) {
  std::map<StatementId, std::array<std::size_t, 3>> counts;
  for (const auto& r : reports) ++counts[r.id][static_cast<std::size_t>(r.verdict)];
  std::ostringstream os;
  os << std::left << std::setw(28) << "statement" << std::right << std::setw(8) << "holds"
     << std::setw(20) << "hypothesis-not-met" << std::setw(10) << "violated" << '\n';
  for (StatementId id : ids) {
    const auto& c = counts[id];
    os << std::left << std::setw(28) << to_string(id) << std::right << std::setw(8)
       << c[static_cast<std::size_t>(Verdict::Holds)] << std::setw(20)
       << c[static_cast<std::size_t>(Verdict::HypothesisNotMet)] << std::setw(10)
       << c[static_cast<std::size_t>(Verdict::Violated)] << '\n';
  }
  return os.str();
}

std::vector<Instance> load_corpus_dir(const std::string& dir, const RingOptions& options,
                                      Manifest& manifest) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw SringError(ErrorKind::Usage, dir + ": no .json ring files");
  std::vector<Instance> out;
  for (const auto& f : files) {
    manifest.input(f.string());
    const RingDocument doc = load_ring_file(f.string());
    try {
      out.push_back(make_instance(doc.ring, doc.generators, options));
    } catch (const SringError& e) {
      throw SringError(e.kind(), f.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-ring S-theory toolkit", "sring"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--size-cap", common.size_cap, "Largest ring size constructed")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-zero", common.allow_zero, "Accept a multiplicative set containing 0");
  app.add_flag("--timings", common.timings, "Record wall-clock and runtimes (non-deterministic)");

  std::string input;
  std::string property;
  ArmendarizFlags arm;
  auto* check = app.add_subcommand("check", "Evaluate one predicate on a ring file");
  check->add_option("property", property, "Predicate name")
      ->required()
      ->check(CLI::IsMember(kProperties));
  check->add_option("input", input, "Ring-definition file")->required();
  check->add_option("--degree", arm.degree, "Armendariz degree bound")->check(CLI::Range(0, 8));
  check->add_option("--mode", arm.mode, "Armendariz search mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  check->add_option("--seed", arm.seed, "Seed for sampled searches");
  check->add_option("--budget", arm.budget, "Pair budget for Armendariz searches");

  auto* spectrum = app.add_subcommand("spectrum", "S-prime spectrum with witnesses");
  spectrum->add_option("input", input, "Ring-definition file")->required();
  auto* localize_cmd = app.add_subcommand("localize", "Localization as a quotient by S-torsion");
  localize_cmd->add_option("input", input, "Ring-definition file")->required();
  auto* describe = app.add_subcommand("describe", "Summary of a ring and its S");
  describe->add_option("input", input, "Ring-definition file")->required();

  std::vector<std::string> statement_names;
  for (StatementId id : all_statements()) statement_names.emplace_back(to_string(id));
  bool all = false;
  std::vector<std::string> statements;
  std::string corpus_dir;
  std::string output;
  std::uint64_t seed = 42;
  std::size_t max_degree = 2;
  std::uint64_t budget = 100000;
  std::size_t count = 30;
  std::size_t max_size = 64;
  bool only_s_reduced = false;
  auto* verify = app.add_subcommand("verify", "Run catalog statements over a corpus");
  auto* all_opt = verify->add_flag("--all", all, "Every catalog statement");
  auto* stmt_opt = verify->add_option("--statement", statements, "Catalog statement id")
                       ->check(CLI::IsMember(statement_names));
  all_opt->excludes(stmt_opt);
  verify->add_option("--corpus", corpus_dir, "Directory of ring files (default: built-in)")
      ->check(CLI::ExistingDirectory);
  verify->add_option("--seed", seed, "Corpus and sampling seed");
  verify->add_option("--max-degree", max_degree, "Exhaustive Armendariz degree")
      ->check(CLI::Range(0, 4));
  verify->add_option("--budget", budget, "Sampled Armendariz pair budget");
  verify->add_option("--count", count, "Seeded random instances in the built-in corpus");
  verify->add_option("--max-size", max_size, "Largest random corpus ring");
  verify->add_flag("--only-s-reduced", only_s_reduced, "Keep only S-reduced instances");
  verify->add_option("--output", output, "JSON-lines destination (default: stdout)");

  std::string statement;
  std::string variant = "full";
  std::size_t fresh = 60;
  auto* search = app.add_subcommand("search", "Seeded counterexample search with shrinking");
  search->add_option("--statement", statement, "Catalog statement id")
      ->required()
      ->check(CLI::IsMember(statement_names));
  search->add_option("--variant", variant, "full | drop-hypothesis | converse")
      ->check(CLI::IsMember({"full", "drop-hypothesis", "converse"}));
  search->add_option("--max-size", max_size, "Largest corpus ring");
  search->add_option("--seed", seed, "Corpus seed");
  search->add_option("--count", count, "Seeded random corpus instances");
  search->add_option("--fresh", fresh, "Fresh instances after the corpus");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      Manifest m("check " + property, common);
      m.input(input);
      if (property == "s-armendariz" || property == "axioms") {
        m.seed(arm.seed);
        m.cap("budget", arm.budget);
        m.cap("degree", arm.degree);
      }
      const LoadedInstance in = load(input, common);
      emit(out, m.to_json());
      emit(out, predicate_report(property, in, arm));
      return kOk;
    }
    if (*spectrum) {
      Manifest m("spectrum", common);
      m.input(input);
      const LoadedInstance in = load(input, common);
      const auto spec = s_spectrum(in.ring, in.s);
      json primes = json::array();
      for (const auto& w : spec)
        primes.push_back({{"ideal", ideal_json(in.ring, w.ideal)},
                          {"s", element_to_json(in.ring, w.s)},
                          {"colon_s", element_to_json(in.ring, w.colon_s)},
                          {"colon_prime", ideal_json(in.ring, w.colon_prime)}});
      json minimal = json::array();
      for (const auto& p : s_minimal_s_primes(in.ring, in.s)) minimal.push_back(ideal_json(in.ring, p));
      json rep = {{"spectrum", primes}, {"s_minimal", minimal}};
      rep["intersection"] =
          spec.empty() ? json(nullptr) : ideal_json(in.ring, spectrum_intersection(in.ring, spec));
      emit(out, m.to_json());
      emit(out, rep);
      return kOk;
    }
    if (*localize_cmd) {
      Manifest m("localize", common);
      m.input(input);
      const LoadedInstance in = load(input, common);
      const auto loc = localize(in.ring, in.s);
      json rep = {{"torsion", ideal_json(in.ring, loc.torsion)}, {"degenerate", loc.degenerate}};
      if (loc.ring) {
        json map = json::array();
        for (Elem x = 0; x < in.ring.size(); ++x)
          map.push_back({element_to_json(in.ring, x), element_to_json(*loc.ring, loc.canonical_map[x])});
        rep["localized_size"] = loc.ring->size();
        rep["field"] = is_field(*loc.ring);
        rep["reduced"] = is_reduced(*loc.ring);
        rep["canonical_map"] = map;
      }
      emit(out, m.to_json());
      emit(out, rep);
      return kOk;
    }
    if (*describe) {
      Manifest m("describe", common);
      m.input(input);
      const LoadedInstance in = load(input, common);
      const FiniteRing& r = in.ring;
      json rep = {{"ring", r.describe()},
                  {"input", to_json(in.doc)},
                  {"size", r.size()},
                  {"commutative", r.is_commutative()},
                  {"multiplicative_set", elements_to_json(r, in.s.elements())},
                  {"degenerate", in.s.degenerate()},
                  {"units", unit_set(r).size()},
                  {"zero_divisors", zero_divisor_set(r).size()},
                  {"nilpotents", set_to_json(r, nilpotent_set(r))},
                  {"field", is_field(r)},
                  {"reduced", is_reduced(r)}};
      if (r.is_commutative()) rep["ideals"] = enumerate_ideals(r).size();
      emit(out, m.to_json());
      emit(out, rep);
      return kOk;
    }
    if (*verify) {
      if (!all && statements.empty()) {
        err << "verify: pass --all or --statement ID\n";
        return kUsage;
      }
      std::vector<StatementId> ids;
      if (all) {
        ids = all_statements();
      } else {
        for (const auto& name : statements) ids.push_back(*statement_from_string(name));
      }
      Manifest m("verify", common);
      m.seed(seed);
      m.cap("max_degree", max_degree);
      m.cap("budget", budget);
      HarnessConfig hc;
      hc.seed = seed;
      hc.exhaustive_degree = max_degree;
      hc.sampled_degree = std::min<std::size_t>(1, max_degree);
      hc.sampled_budget = budget;
      hc.ring_options.size_cap = common.size_cap;
      std::vector<Instance> corpus;
      if (!corpus_dir.empty()) {
        corpus = load_corpus_dir(corpus_dir, hc.ring_options, m);
      } else {
        m.cap("count", count);
        m.cap("max_size", max_size);
        corpus = generate_corpus(CorpusConfig{max_size, count, seed, only_s_reduced, true});
      }
      std::ofstream file;
      if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) throw SringError(ErrorKind::Usage, output + ": cannot open for writing");
      }
      std::ostream& sink = output.empty() ? out : file;
      std::ostream& table = output.empty() ? err : out;
      const auto reports = verify_corpus(ids, corpus, hc);
      emit(sink, m.to_json());
      bool violated = false;
      for (const auto& r : reports) {
        emit(sink, to_json(r, common.timings));
        violated = violated || r.verdict == Verdict::Violated;
      }
      table << summary_table(ids, reports);
      return violated ? kViolated : kOk;
    }
    if (*search) {
      const StatementId id = *statement_from_string(statement);
      const SearchVariant v = *variant_from_string(variant);
      Manifest m("search " + statement + " " + variant, common);
      m.seed(seed);
      m.cap("max_size", max_size);
      m.cap("count", count);
      m.cap("fresh", fresh);
      SearchConfig sc;
      sc.corpus = CorpusConfig{max_size, count, seed, false, true};
      sc.fresh = fresh;
      sc.harness.seed = seed;
      sc.harness.ring_options.size_cap = common.size_cap;
      const SearchResult res = counterexample_search(id, v, sc);
      json rep = {{"statement", statement},
                  {"variant", variant},
                  {"instances_examined", res.instances_examined},
                  {"found", res.counterexample.has_value()}};
      if (res.counterexample) {
        const auto& cx = *res.counterexample;
        json hyps = json::array();
        for (const auto& h : cx.evaluation.hypotheses)
          hyps.push_back({{"name", h.name}, {"met", h.met}});
        rep["counterexample"] = {
            {"found_on", cx.found_on},
            {"shrink_steps", cx.shrink_steps},
            {"instance", cx.instance.describe()},
            {"input", to_json(RingDocument{cx.instance.expression, cx.instance.generators})},
            {"hypotheses", hyps},
            {"hypotheses_met", cx.evaluation.hypotheses_met},
            {"conclusion", cx.evaluation.conclusion ? json(*cx.evaluation.conclusion) : json(nullptr)},
            {"notes", cx.evaluation.notes},
            {"payload", cx.evaluation.payload}};
      }
      emit(out, m.to_json());
      emit(out, rep);
      // A hit in the full variant contradicts a proved statement.
      return v == SearchVariant::Full && res.counterexample ? kViolated : kOk;
    }
  } catch (const SringError& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
  return kUsage;
}

}  // namespace sring::cli
