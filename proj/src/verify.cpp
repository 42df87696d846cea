#include "wcayley/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "wcayley/acylindricity.hpp"
#include "wcayley/geometry.hpp"
#include "wcayley/sampling.hpp"
#include "wcayley/ydist.hpp"

namespace wcayley::verify {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct RunContext {
  Options opts;
  WOracle oracle;
  std::vector<TranslationLengthEstimate> power_sample;  // shared by 2 and 3
  long c_hat = -1;                                      // measured by 6

  explicit RunContext(const Options& o)
      : opts(o),
        oracle(WOracleConfig{WordSchedule{o.base_length}, 16, 64}) {}
};

double elapsed_seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The 50-element sample of nontrivial c-free words with |g|_A <= 8 and the
// Y-lengths of their powers up to 49, shared by criteria 2 and 3.
const std::vector<TranslationLengthEstimate>& power_sample(RunContext& ctx) {
  if (!ctx.power_sample.empty()) return ctx.power_sample;
  constexpr std::size_t kSampleSize = 50;
  constexpr long kMaxPower = 49;
  ctx.power_sample.resize(kSampleSize);
  parallel_for(kSampleSize, ctx.opts.workers, [&](std::size_t i) {
    Rng rng(mix_seed(ctx.opts.seed, 0x2000 + i));
    const std::size_t len = 1 + rng.below(8);
    const ReducedWord g = random_reduced_word(rng, len, /*c_free=*/true);
    ctx.power_sample[i] = power_lengths(ctx.oracle, g, kMaxPower, 1);
  });
  return ctx.power_sample;
}

CriterionResult criterion1(RunContext& ctx) {
  CriterionResult r;
  r.id = 1;
  r.name = "non-QI orbit map: y_dist(1, v(n)) = 1, |v(n)|_A -> inf";
  const auto start = Clock::now();
  const auto& schedule = ctx.oracle.schedule();
  long violations = 0;
  std::size_t max_x_len = 0;
  for (long n = 1; n <= 200; ++n) {
    const ReducedWord v = schedule.v(n);
    if (y_length(ctx.oracle, v) != 1) ++violations;
    if (v.size() != schedule.length_of(n)) ++violations;
    max_x_len = std::max(max_x_len, v.size());
  }
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0 && r.seconds < 10.0;
  r.data = {{"n_max", 200},
            {"violations", violations},
            {"max_x_length", max_x_len},
            {"time_limit_s", 10.0}};
  std::ostringstream os;
  os << "n <= 200, violations=" << violations << ", |v(200)|_A=" << max_x_len;
  r.detail = os.str();
  return r;
}

CriterionResult criterion2(RunContext& ctx) {
  CriterionResult r;
  r.id = 2;
  r.name = "power bound: |g^n|_Y >= floor(n/7) for c-free g";
  const auto start = Clock::now();
  long violations = 0;
  std::string witness;
  for (const auto& est : power_sample(ctx)) {
    for (const auto& s : est.samples) {
      if (static_cast<long>(s.y_len) < s.n / 7) {
        ++violations;
        if (witness.empty())
          witness = est.g.str() + "^" + std::to_string(s.n);
      }
    }
  }
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0 && r.seconds < 300.0;
  r.data = {{"sample_size", 50},
            {"max_power", 49},
            {"violations", violations},
            {"time_limit_s", 300.0}};
  if (!witness.empty()) r.data["witness"] = witness;
  r.detail = "50 words, n <= 49, violations=" + std::to_string(violations);
  return r;
}

CriterionResult criterion3(RunContext& ctx) {
  CriterionResult r;
  r.id = 3;
  r.name = "translation length: upper estimate >= 1/7 for c-free g";
  const auto start = Clock::now();
  const Rational bound{1, 7};
  long violations = 0;
  std::string witness;
  for (const auto& est : power_sample(ctx)) {
    if (rational_less(est.upper, bound)) {
      ++violations;
      if (witness.empty()) witness = est.g.str();
    }
  }
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0;
  r.data = {{"sample_size", 50}, {"violations", violations}};
  if (!witness.empty()) r.data["witness"] = witness;
  r.detail = "min_n |g^n|_Y/n >= 1/7, violations=" + std::to_string(violations);
  return r;
}

// Every substring with length <= max_len of w(n)^m over n <= n_max,
// 1 <= m <= m_max, as raw code strings. Positive z is a W-word under the
// brute-force definition iff it lies in this set.
std::unordered_set<std::string> brute_substring_set(const WordSchedule& schedule,
                                                    long n_max, long m_max,
                                                    std::size_t max_len) {
  std::unordered_set<std::string> set;
  for (long n = 1; n <= n_max; ++n) {
    const ReducedWord wn = schedule.w(n);
    std::string text;
    text.reserve(wn.size() * static_cast<std::size_t>(m_max));
    for (long m = 0; m < m_max; ++m)
      for (LetterCode c : wn.codes()) text.push_back(static_cast<char>(c));
    for (std::size_t i = 0; i < text.size(); ++i) {
      const std::size_t top = std::min(max_len, text.size() - i);
      for (std::size_t l = 1; l <= top; ++l) set.insert(text.substr(i, l));
    }
  }
  return set;
}

CriterionResult criterion4(RunContext& ctx) {
  CriterionResult r;
  r.id = 4;
  r.name = "distance engine: greedy == DP; oracle == brute force";
  const auto start = Clock::now();

  // (a) greedy vs DP factor counts on random reduced words
  std::atomic<long> mismatches{0};
  constexpr std::size_t kWords = 10'000;
  parallel_for(kWords, ctx.opts.workers, [&](std::size_t i) {
    Rng rng(mix_seed(ctx.opts.seed, 0x4000 + i));
    const std::size_t len = 1 + rng.below(200);
    const ReducedWord w = random_reduced_word(rng, len, /*c_free=*/false);
    if (y_length_dp(ctx.oracle, w).count() !=
        y_length_greedy(ctx.oracle, w).count())
      ++mismatches;
  });

  // (b) decision procedure vs brute force on every positive z with
  // |z| <= 12, for base lengths 1, 2 and 3
  long oracle_mismatches = 0;
  std::string witness;
  for (int L0 = 1; L0 <= 3 && oracle_mismatches == 0; ++L0) {
    const WOracle oracle(WOracleConfig{WordSchedule{L0}, 16, 64});
    const auto brute = brute_substring_set(oracle.schedule(), 64, 12, 12);
    std::vector<LetterCode> z;
    const std::function<void(std::size_t)> walk = [&](std::size_t depth) {
      if (oracle_mismatches > 0) return;
      for (LetterCode c = 0; c < 3; ++c) {
        z.push_back(c);
        const std::string key(reinterpret_cast<const char*>(z.data()),
                              z.size());
        if (oracle.is_w_word_span(z) != (brute.count(key) > 0)) {
          ++oracle_mismatches;
          if (witness.empty()) {
            witness = "L0=" + std::to_string(L0) + " z=" +
                      ReducedWord::from_reduced(z).str();
          }
        }
        if (depth + 1 < 12) walk(depth + 1);
        z.pop_back();
      }
    };
    walk(0);
  }

  r.seconds = elapsed_seconds(start);
  r.pass = mismatches == 0 && oracle_mismatches == 0 && r.seconds < 600.0;
  r.data = {{"greedy_dp_words", kWords},
            {"greedy_dp_mismatches", mismatches.load()},
            {"oracle_brute_mismatches", oracle_mismatches},
            {"time_limit_s", 600.0}};
  if (!witness.empty()) r.data["witness"] = witness;
  std::ostringstream os;
  os << "greedy/dp mismatches=" << mismatches.load()
     << ", oracle/brute mismatches=" << oracle_mismatches;
  r.detail = os.str();
  return r;
}

CriterionResult criterion5(RunContext& ctx) {
  CriterionResult r;
  r.id = 5;
  r.name = "metric axioms: symmetry and triangle inequality";
  const auto start = Clock::now();
  constexpr std::size_t kTriples = 10'000;
  std::atomic<long> violations{0};
  parallel_for(kTriples, ctx.opts.workers, [&](std::size_t i) {
    Rng rng(mix_seed(ctx.opts.seed, 0x5000 + i));
    ReducedWord w[3];
    for (auto& v : w)
      v = random_reduced_word(rng, 1 + rng.below(100), /*c_free=*/false);
    const std::size_t dxy = y_dist(ctx.oracle, w[0], w[1]);
    const std::size_t dyx = y_dist(ctx.oracle, w[1], w[0]);
    const std::size_t dyz = y_dist(ctx.oracle, w[1], w[2]);
    const std::size_t dxz = y_dist(ctx.oracle, w[0], w[2]);
    if (dxy != dyx) ++violations;
    if (dxz > dxy + dyz) ++violations;
    if ((dxy == 0) != (w[0] == w[1])) ++violations;
  });
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0;
  r.data = {{"triples", kTriples}, {"violations", violations.load()}};
  r.detail = "10^4 triples, violations=" + std::to_string(violations.load());
  return r;
}

CriterionResult criterion6(RunContext& ctx) {
  CriterionResult r;
  r.id = 6;
  r.name = "fellow traveling: X- and Y-geodesics C-Hausdorff close";
  const auto start = Clock::now();
  const auto report = hausdorff_experiment(ctx.oracle, 500, 50, 400,
                                           ctx.opts.seed, ctx.opts.workers);
  // band maxima at the boundaries named by the criterion
  long low = 0, high = 0;
  for (const auto& [len, h] : report.rows) {
    if (len <= 200) low = std::max(low, h);
    if (len >= 200) high = std::max(high, h);
  }
  ctx.c_hat = std::max(report.c_estimate, 1L);
  r.seconds = elapsed_seconds(start);
  r.pass = high <= low + 1;
  r.data = {{"samples", 500},
            {"c_hat", report.c_estimate},
            {"band_50_200_max", low},
            {"band_200_400_max", high},
            {"witness", report.max_defect_witness}};
  std::ostringstream os;
  os << "C-hat=" << report.c_estimate << ", bands " << low << "/" << high;
  r.detail = os.str();
  return r;
}

CriterionResult criterion7(RunContext& ctx) {
  CriterionResult r;
  r.id = 7;
  r.name = "quasiconvexity: probe <= C-hat + 1 for c-free words";
  const auto start = Clock::now();
  const auto report =
      qc_experiment(ctx.oracle, 500, 200, ctx.opts.seed, ctx.opts.workers);
  const long bound = ctx.c_hat + 1;
  long violations = 0;
  for (const auto& [len, value] : report.rows) {
    if (value > bound) ++violations;
  }
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0;
  r.data = {{"samples", 500},
            {"bound", bound},
            {"max_probe", report.c_estimate},
            {"violations", violations}};
  std::ostringstream os;
  os << "max probe=" << report.c_estimate << " <= " << bound
     << ", violations=" << violations;
  r.detail = os.str();
  return r;
}

CriterionResult criterion8(RunContext& ctx) {
  CriterionResult r;
  r.id = 8;
  r.name = "gluing defect: |d(x,x') + d(x',y) - d(x,y)| <= 2 C-hat";
  const auto start = Clock::now();
  const auto report = gluing_experiment(ctx.oracle, 1000, 50, 400,
                                        ctx.opts.seed, ctx.opts.workers);
  const long bound = 2 * ctx.c_hat;
  long violations = 0;
  for (const auto& [cut, defect] : report.rows) {
    if (defect > bound) ++violations;
  }
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0;
  r.data = {{"samples", 1000},
            {"bound", bound},
            {"max_defect", report.c_estimate},
            {"violations", violations}};
  std::ostringstream os;
  os << "max defect=" << report.c_estimate << " <= " << bound
     << ", violations=" << violations;
  r.detail = os.str();
  return r;
}

CriterionResult criterion9(RunContext& ctx) {
  CriterionResult r;
  r.id = 9;
  r.name = "acylindricity census: member and exponent bounds";
  const auto start = Clock::now();

  struct PairOutcome {
    long radius = 0;
    std::size_t separation_len = 0;
    std::size_t nontrivial = 0;
    bool ok = false;
    std::string note;
  };
  std::vector<PairOutcome> outcomes;
  long violations = 0;
  std::size_t max_members_seen = 0;

  for (long radius : {1L, 2L}) {
    const AcylParams params = AcylParams::make(radius, ctx.c_hat);
    for (std::size_t pair = 0; pair < 10; ++pair) {
      Rng rng(mix_seed(ctx.opts.seed, 0x9000 + radius * 100 + pair));
      // x = 1, y a long random c-free word; grow until separated
      std::size_t len = static_cast<std::size_t>(4 * params.separation);
      ReducedWord y;
      for (int attempt = 0; attempt < 8; ++attempt) {
        y = random_reduced_word(rng, len, /*c_free=*/true);
        if (y_dist(ctx.oracle, {}, y) >=
            static_cast<std::size_t>(params.separation))
          break;
        len = len * 3 / 2;
      }

      CensusOptions opts;
      opts.cap = 10;
      opts.workers = ctx.opts.workers;
      const CensusReport report = census(ctx.oracle, {}, y, params, opts);

      PairOutcome out;
      out.radius = radius;
      out.separation_len = report.y_dist_xy;
      out.nontrivial = report.members.size();
      max_members_seen = std::max(max_members_seen, report.members.size());
      out.ok = report.separation_ok && report.complete &&
               report.members.size() <=
                   static_cast<std::size_t>(params.max_members - 1);
      try {
        root_structure(report);
      } catch (const CensusViolation& e) {
        out.ok = false;
        out.note = e.what();
      }
      if (!out.ok) ++violations;
      outcomes.push_back(out);
    }
  }

  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0 && r.seconds < 1800.0;
  json pairs = json::array();
  for (const auto& out : outcomes) {
    json j = {{"radius", out.radius},
              {"y_dist_xy", out.separation_len},
              {"nontrivial_members", out.nontrivial},
              {"ok", out.ok}};
    if (!out.note.empty()) j["note"] = out.note;
    pairs.push_back(j);
  }
  const AcylParams p1 = AcylParams::make(1, ctx.c_hat);
  const AcylParams p2 = AcylParams::make(2, ctx.c_hat);
  r.data = {{"c_hat", ctx.c_hat},
            {"L", {p1.separation, p2.separation}},
            {"M", {p1.max_members, p2.max_members}},
            {"exponent_cap", {p1.exponent_cap, p2.exponent_cap}},
            {"cap", 10},
            {"violations", violations},
            {"pairs", pairs},
            {"time_limit_s", 1800.0}};
  std::ostringstream os;
  os << "20 pairs, R in {1,2}, max nontrivial members=" << max_members_seen
     << ", violations=" << violations;
  r.detail = os.str();
  return r;
}

CriterionResult criterion10(RunContext& ctx) {
  CriterionResult r;
  r.id = 10;
  r.name = "schedule aperiodicity: v(n) is 7-aperiodic";
  const auto start = Clock::now();
  std::atomic<long> violations{0};
  parallel_for(512, ctx.opts.workers, [&](std::size_t i) {
    if (!is_7_aperiodic(ctx.oracle.schedule().v(static_cast<long>(i) + 1)))
      ++violations;
  });
  r.seconds = elapsed_seconds(start);
  r.pass = violations == 0 && r.seconds < 60.0;
  r.data = {{"n_max", 512},
            {"violations", violations.load()},
            {"time_limit_s", 60.0}};
  r.detail = "n <= 512, violations=" + std::to_string(violations.load());
  return r;
}

}  // namespace

bool brute_force_is_w_word(const WordSchedule& schedule, const ReducedWord& z,
                           long n_max, long m_max) {
  if (z.empty()) throw std::domain_error("W-words are nontrivial");
  const ReducedWord zi = invert(z);
  for (long n = 1; n <= n_max; ++n) {
    const ReducedWord wn = schedule.w(n);
    std::vector<LetterCode> text;
    text.reserve(wn.size() * static_cast<std::size_t>(m_max));
    for (long m = 0; m < m_max; ++m)
      text.insert(text.end(), wn.codes().begin(), wn.codes().end());
    for (const ReducedWord* cand : {&z, &zi}) {
      if (std::search(text.begin(), text.end(), cand->codes().begin(),
                      cand->codes().end()) != text.end())
        return true;
    }
  }
  return false;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "[PASS]" : "[FAIL]") << " C" << r.id << " " << r.name
     << " -- " << r.detail << " (" << std::fixed << r.seconds << "s)";
  return os.str();
}

std::vector<CriterionResult> run_criteria(const Options& opts,
                                          const std::set<int>& only,
                                          std::ostream* progress) {
  RunContext ctx(opts);
  std::set<int> wanted = only;
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  // 7, 8 and 9 consume the C-hat measured by 6
  if (wanted.count(7) || wanted.count(8) || wanted.count(9)) wanted.insert(6);

  using Runner = CriterionResult (*)(RunContext&);
  static constexpr Runner runners[] = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};

  std::vector<CriterionResult> results;
  for (int id = 1; id <= 10; ++id) {
    if (!wanted.count(id)) continue;
    results.push_back(runners[id - 1](ctx));
    if (progress) *progress << format_line(results.back()) << std::endl;
  }
  return results;
}

}  // namespace wcayley::verify
