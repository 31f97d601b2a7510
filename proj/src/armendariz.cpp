#include "sring/armendariz.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "sring/parallel.hpp"

namespace sring {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

constexpr std::uint64_t kSampledChunk = 4096;    // pairs per sampled chunk
constexpr std::uint64_t kExhaustiveChunk = 1024;  // f's per exhaustive chunk
constexpr std::size_t kLeadPoolLimit = 256;
constexpr int kSampleNodeLimit = 64;
constexpr int kSampleBranching = 3;

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

// Solutions of a*x = t for every t, x in increasing order.
class Fibers {
 public:
  Fibers(const FiniteRing& ring, Elem a) : offsets_(ring.size() + 1, 0), xs_(ring.size()) {
    std::vector<Elem> image(ring.size());
    for (Elem x = 0; x < ring.size(); ++x) {
      image[x] = ring.mul(a, x);
      ++offsets_[image[x] + 1];
    }
    for (std::size_t t = 0; t < ring.size(); ++t) offsets_[t + 1] += offsets_[t];
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (Elem x = 0; x < ring.size(); ++x) xs_[cursor[image[x]]++] = x;
  }

  std::span<const Elem> solutions(Elem t) const {
    return {xs_.data() + offsets_[t], offsets_[t + 1] - offsets_[t]};
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Elem> xs_;
};

using Coeffs = std::vector<Elem>;  // exactly D + 1 entries

class PairStream {
 public:
  PairStream(const FiniteRing& ring, const ArmendarizConfig& config)
      : ring_(ring), config_(config), d_(config.degree), n_(ring.size()) {
    if (config_.mode == SearchMode::Exhaustive) {
      const std::uint64_t cost = saturating_pow(n_, 2 * d_ + 2, config_.budget);
      if (cost > config_.budget)
        throw SringError(ErrorKind::BudgetExhausted,
                         "exhaustive search over " + ring.describe() + " at degree " +
                             std::to_string(d_) + " needs |R|^" + std::to_string(2 * d_ + 2) +
                             " pairs, above the budget of " + std::to_string(config_.budget));
      total_f_ = saturating_pow(n_, d_ + 1, config_.budget);
      for (Elem a = 1; a < n_; ++a) fibers_.emplace(a, Fibers(ring_, a));
      chunks_ = (total_f_ + kExhaustiveChunk - 1) / kExhaustiveChunk;
    } else {
      pool_ = config_.coefficient_pool;
      if (pool_.empty()) pool_ = zero_divisor_set(ring_).members();
      std::vector<Elem> leads;
      for (Elem x : pool_)
        if (x != ring_.zero()) leads.push_back(x);
      if (leads.empty())
        for (Elem x = 1; x < n_; ++x) leads.push_back(x);
      std::sort(leads.begin(), leads.end());
      leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
      if (leads.size() > kLeadPoolLimit) {
        std::mt19937_64 rng(config_.seed);
        std::shuffle(leads.begin(), leads.end(), rng);
        leads.resize(kLeadPoolLimit);
        std::sort(leads.begin(), leads.end());
      }
      lead_pool_ = std::move(leads);
      for (Elem a : lead_pool_) fibers_.emplace(a, Fibers(ring_, a));
      chunks_ = (config_.budget + kSampledChunk - 1) / kSampledChunk;
    }
  }

  std::uint64_t chunks() const { return chunks_; }

  /// visit(f, g) for every pair of chunk c, in stream order.
  template <class Visit>
  void run_chunk(std::uint64_t c, Visit&& visit) const {
    if (config_.mode == SearchMode::Exhaustive)
      exhaustive_chunk(c, visit);
    else
      sampled_chunk(c, visit);
  }

 private:
  // a_p * b_j = target at level j, for the coefficient of X^(p+j).
  Elem level_target(const Coeffs& f, std::size_t p, const Coeffs& g, std::size_t j) const {
    Elem sum = ring_.zero();
    for (std::size_t i = p + 1; i <= std::min(d_, p + j); ++i)
      sum = ring_.add(sum, ring_.mul(f[i], g[p + j - i]));
    return ring_.neg(sum);
  }

  // Coefficients of X^k beyond those fixed by the levels.
  bool tail_vanishes(const Coeffs& f, std::size_t p, const Coeffs& g) const {
    for (std::size_t k = p + d_ + 1; k <= 2 * d_; ++k) {
      Elem sum = ring_.zero();
      for (std::size_t i = std::max(p, k - d_); i <= d_; ++i)
        sum = ring_.add(sum, ring_.mul(f[i], g[k - i]));
      if (sum != ring_.zero()) return false;
    }
    return true;
  }

  template <class Visit>
  void solve_all(const Coeffs& f, std::size_t p, Coeffs& g, std::size_t j, Visit& visit) const {
    if (j > d_) {
      if (tail_vanishes(f, p, g)) visit(f, g);
      return;
    }
    const Fibers& fib = fibers_.at(f[p]);
    for (Elem x : fib.solutions(level_target(f, p, g, j))) {
      g[j] = x;
      solve_all(f, p, g, j + 1, visit);
    }
    g[j] = ring_.zero();
  }

  template <class Visit>
  void exhaustive_chunk(std::uint64_t c, Visit& visit) const {
    const std::uint64_t begin = c * kExhaustiveChunk;
    const std::uint64_t end = std::min(total_f_, begin + kExhaustiveChunk);
    Coeffs f(d_ + 1), g(d_ + 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i <= d_; ++i) {
        f[i] = static_cast<Elem>(rest % n_);
        rest /= n_;
      }
      const auto lead = std::find_if(f.begin(), f.end(), [](Elem x) { return x != 0; });
      if (lead == f.end()) {
        for (std::uint64_t gi = 0; gi < total_f_; ++gi) {
          std::uint64_t r = gi;
          for (std::size_t j = 0; j <= d_; ++j) {
            g[j] = static_cast<Elem>(r % n_);
            r /= n_;
          }
          visit(f, g);
        }
        continue;
      }
      std::fill(g.begin(), g.end(), ring_.zero());
      solve_all(f, static_cast<std::size_t>(lead - f.begin()), g, 0, visit);
    }
  }

  bool solve_random(const Coeffs& f, std::size_t p, Coeffs& g, std::size_t j,
                    std::mt19937_64& rng, int& nodes) const {
    if (j > d_) return tail_vanishes(f, p, g);
    const auto sols = fibers_.at(f[p]).solutions(level_target(f, p, g, j));
    if (sols.empty()) return false;
    for (int attempt = 0; attempt < kSampleBranching; ++attempt) {
      if (++nodes > kSampleNodeLimit) return false;
      g[j] = sols[rng() % sols.size()];
      if (solve_random(f, p, g, j + 1, rng, nodes)) return true;
      if (sols.size() == 1) break;
    }
    g[j] = ring_.zero();
    return false;
  }

  Elem draw_coefficient(std::mt19937_64& rng) const {
    if (!pool_.empty() && rng() % 2 == 0) return pool_[rng() % pool_.size()];
    return static_cast<Elem>(rng() % n_);
  }

  template <class Visit>
  void sampled_chunk(std::uint64_t c, Visit& visit) const {
    // Chunk seeds depend only on (seed, c), so the stream ignores the worker count.
    std::mt19937_64 rng(config_.seed ^ (0x9e3779b97f4a7c15ULL * (c + 1)));
    const std::uint64_t begin = c * kSampledChunk;
    const std::uint64_t end = std::min(config_.budget, begin + kSampledChunk);
    Coeffs f(d_ + 1), g(d_ + 1);
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::size_t p = rng() % (d_ + 1);
      std::fill(f.begin(), f.end(), ring_.zero());
      f[p] = lead_pool_[rng() % lead_pool_.size()];
      for (std::size_t i = p + 1; i <= d_; ++i) f[i] = draw_coefficient(rng);
      std::fill(g.begin(), g.end(), ring_.zero());
      int nodes = 0;
      if (!solve_random(f, p, g, 0, rng, nodes)) std::fill(g.begin(), g.end(), ring_.zero());
      visit(f, g);
    }
  }

  const FiniteRing& ring_;
  const ArmendarizConfig& config_;
  std::size_t d_;
  std::size_t n_;
  std::uint64_t total_f_ = 0;
  std::uint64_t chunks_ = 0;
  std::vector<Elem> pool_;
  std::vector<Elem> lead_pool_;
  std::unordered_map<Elem, Fibers> fibers_;
};

bool is_zero_poly(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](Elem x) { return x == 0; });
}

ZeroProductPair as_pair(const Coeffs& f, const Coeffs& g) {
  return {Polynomial(f), Polynomial(g)};
}

struct ChunkResult {
  std::uint64_t pairs = 0;
  std::uint64_t nontrivial = 0;
  std::map<Elem, std::uint64_t> counts;
  std::optional<ZeroProductPair> per_pair_failure;
  std::optional<ArmendarizViolation> violation;
  /// Pairs whose mask shrank the chunk-local intersection, in stream order.
  std::vector<std::pair<ElementSet, ZeroProductPair>> shrinking;
};

}  // namespace

ZeroProductStats zero_product_poly_pairs(const FiniteRing& ring, const ArmendarizConfig& config,
                                         const ZeroProductVisitor& visit) {
  const PairStream stream(ring, config);
  ZeroProductStats stats;
  for (std::uint64_t c = 0; c < stream.chunks(); ++c)
    stream.run_chunk(c, [&](const Coeffs& f, const Coeffs& g) {
      ++stats.pairs;
      if (!is_zero_poly(f) && !is_zero_poly(g)) ++stats.nontrivial;
      visit(Polynomial(f), Polynomial(g));
    });
  return stats;
}

ArmendarizVerdict is_u_s_armendariz_up_to(const FiniteRing& ring, std::span<const Elem> witnesses,
                                          const ArmendarizConfig& config) {
  ArmendarizVerdict verdict;
  verdict.degree = config.degree;
  verdict.mode = config.mode;
  verdict.seed = config.seed;
  verdict.budget = config.budget;
  if (std::find(witnesses.begin(), witnesses.end(), ring.zero()) != witnesses.end()) {
    verdict.degenerate = true;
    verdict.uniform_witness = ring.zero();
    return verdict;
  }

  const std::size_t w = witnesses.size();
  // kill[x] = indices k with witnesses[k] * x = 0.
  std::vector<ElementSet> kill(ring.size(), ElementSet(w));
  for (Elem x = 0; x < ring.size(); ++x)
    for (std::size_t k = 0; k < w; ++k)
      if (ring.mul(witnesses[k], x) == ring.zero()) kill[x].insert(static_cast<Elem>(k));

  const PairStream stream(ring, config);
  auto chunks = parallel_map<ChunkResult>(stream.chunks(), [&](std::size_t c) {
    ChunkResult out;
    ElementSet local = ElementSet::full(w);
    stream.run_chunk(c, [&](const Coeffs& f, const Coeffs& g) {
      ++out.pairs;
      ElementSet mask = ElementSet::full(w);
      if (!is_zero_poly(f) && !is_zero_poly(g)) {
        ++out.nontrivial;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (f[i] == 0) continue;
          for (std::size_t j = 0; j < g.size(); ++j) {
            const Elem x = ring.mul(f[i], g[j]);
            if (x == 0) continue;
            mask &= kill[x];
            if (kill[x].empty() && !out.violation)
              out.violation = ArmendarizViolation{as_pair(f, g), i, j};
          }
        }
      }
      if (mask.empty()) {
        if (!out.per_pair_failure) out.per_pair_failure = as_pair(f, g);
      } else {
        ++out.counts[witnesses[mask.first()]];
      }
      if (!local.is_subset_of(mask)) {
        local &= mask;
        out.shrinking.emplace_back(std::move(mask), as_pair(f, g));
      }
    });
    return out;
  });

  ElementSet global = ElementSet::full(w);
  for (auto& chunk : chunks) {
    verdict.pairs_examined += chunk.pairs;
    verdict.nontrivial_pairs += chunk.nontrivial;
    for (const auto& [s, count] : chunk.counts) verdict.per_pair_witness_counts[s] += count;
    if (!verdict.per_pair_failure && chunk.per_pair_failure)
      verdict.per_pair_failure = std::move(chunk.per_pair_failure);
    if (!verdict.violation && chunk.violation) verdict.violation = std::move(chunk.violation);
    for (auto& [mask, pair] : chunk.shrinking) {
      if (global.empty()) break;
      global &= mask;
      if (global.empty()) verdict.uniform_breaking_pair = std::move(pair);
    }
  }
  verdict.per_pair_holds = !verdict.per_pair_failure.has_value();
  verdict.uniform_holds = !global.empty();
  if (verdict.uniform_holds) verdict.uniform_witness = witnesses[global.first()];
  return verdict;
}

ArmendarizVerdict is_u_s_armendariz_up_to(const FiniteRing& ring, const MultiplicativeSet& s,
                                          const ArmendarizConfig& config) {
  return is_u_s_armendariz_up_to(ring, std::span<const Elem>(s.elements()), config);
}

std::vector<Elem> constant_quadruples(const FiniteRing& e_ring, const FiniteRing& base,
                                      std::span<const Elem> base_elements) {
  std::vector<Elem> out;
  for (Elem s : base_elements) {
    const Literal d = base.decode(s);
    out.push_back(e_ring.encode(Literal::list({d, d, d, d})));
  }
  return out;
}

std::vector<Elem> triangular_zero_divisor_pool(const FiniteRing& e_ring, const FiniteRing& base,
                                               std::size_t limit) {
  std::vector<Elem> entries{base.zero()};
  for (Elem z : zero_divisor_set(base).members()) entries.push_back(z);
  std::vector<Literal> decoded;
  for (Elem z : entries) decoded.push_back(base.decode(z));
  std::vector<Elem> out;
  const std::size_t k = entries.size();
  for (std::size_t idx = 0; idx < k * k * k * k && out.size() < limit; ++idx)
    out.push_back(e_ring.encode(Literal::list({decoded[idx / (k * k * k)],
                                               decoded[(idx / (k * k)) % k],
                                               decoded[(idx / k) % k], decoded[idx % k]})));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> s_idealization_set(const FiniteRing& idealization, const FiniteRing& base,
                                     const MultiplicativeSet& s) {
  std::vector<Elem> out;
  for (Elem t : s.elements())
    for (Elem m = 0; m < base.size(); ++m)
      out.push_back(idealization.encode(
          Literal::list({base.decode(t), Literal::list({base.decode(m)})})));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sring
