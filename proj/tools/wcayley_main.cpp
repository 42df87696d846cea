// Command-line front end: every experiment in one binary, with
// reproducible, machine-readable reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcayley/acylindricity.hpp"
#include "wcayley/geometry.hpp"
#include "wcayley/json_io.hpp"
#include "wcayley/sampling.hpp"
#include "wcayley/verify.hpp"
#include "wcayley/woracle.hpp"
#include "wcayley/ydist.hpp"

namespace {

using nlohmann::json;
using namespace wcayley;

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  int base_length = 1;
  std::uint64_t seed = 7;
  int workers = 0;
  std::string format = "json";
  std::string output;
  std::string config_file;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--base-length", c.base_length,
                  "Schedule base length L0 (config key schedule.base_length)");
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--workers", c.workers,
                  "Worker threads (0 = WCAYLEY_WORKERS env or hardware)");
  cmd->add_option("--format", c.format, "json or csv (table reports only)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", c.output, "Write the report to a file");
  cmd->add_option("--config", c.config_file,
                  "JSON config file, merged under the flags");
}

// Flags win over the config file; the file supplies defaults only for
// options the user did not pass.
void merge_config(const CLI::App* cmd, CommonOpts& c) {
  if (c.config_file.empty()) return;
  std::ifstream in(c.config_file);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + c.config_file);
  json cfg = json::parse(in);
  const auto unset = [&](const char* flag) {
    const auto* opt = cmd->get_option(flag);
    return opt && opt->count() == 0;
  };
  if (cfg.contains("schedule") && cfg["schedule"].contains("base_length") &&
      unset("--base-length"))
    c.base_length = cfg["schedule"]["base_length"].get<int>();
  if (cfg.contains("seed") && unset("--seed"))
    c.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("workers") && unset("--workers"))
    c.workers = cfg["workers"].get<int>();
}

json config_echo(const CommonOpts& c) {
  return {{"schedule", {{"base_length", c.base_length}}},
          {"seed", c.seed},
          {"workers", c.workers}};
}

void write_text(const CommonOpts& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot write " + c.output);
    out << text;
  }
}

void emit_report(const CommonOpts& c, const std::string& command,
                 const json& results, double wall_ms,
                 const std::optional<std::string>& csv = std::nullopt) {
  if (c.format == "csv") {
    if (!csv) throw CLI::ValidationError("--format", "no CSV form for " + command);
    write_text(c, *csv);
    return;
  }
  json report = {{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"config", config_echo(c)},
                 {"results", results},
                 {"wall_ms", wall_ms}};
  write_text(c, report.dump(2) + "\n");
}

int structured_error(const std::string& command, const std::exception& e) {
  json err = {{"schema_version", kSchemaVersion},
              {"command", command},
              {"error", e.what()}};
  std::cout << err.dump(2) << "\n";
  return 1;
}

WOracle make_oracle(const CommonOpts& c) {
  return WOracle(WOracleConfig{WordSchedule{c.base_length}, 16, 64});
}

std::string rows_csv(const char* header,
                     const std::vector<std::array<long, 2>>& rows) {
  std::ostringstream os;
  os << header << "\n";
  for (const auto& [a, b] : rows) os << a << "," << b << "\n";
  return os.str();
}

using Timer = std::chrono::steady_clock;

double ms_since(Timer::time_point start) {
  return std::chrono::duration<double, std::milli>(Timer::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coned-off Cayley graph experiments for F(a,b,c)"};
  app.require_subcommand(1);

  // gen-words
  auto* gen = app.add_subcommand("gen-words", "Emit v(1)..v(N), one per line");
  CommonOpts gen_opts;
  long gen_count = 0;
  gen->add_option("--count", gen_count, "How many words")->required();
  add_common(gen, gen_opts);

  // is-wword
  auto* isw = app.add_subcommand("is-wword", "W-word membership with witness");
  CommonOpts isw_opts;
  std::string isw_word;
  isw->add_option("word", isw_word, "Word in a..C text form")->required();
  add_common(isw, isw_opts);

  // ydist
  auto* yd = app.add_subcommand("ydist", "Exact d_Y(x, y) with a factorization");
  CommonOpts yd_opts;
  std::string yd_x, yd_y;
  yd->add_option("x", yd_x)->required();
  yd->add_option("y", yd_y)->required();
  add_common(yd, yd_opts);

  // translation-length
  auto* tl = app.add_subcommand("translation-length",
                                "Power Y-lengths and ||g||_Y estimates");
  CommonOpts tl_opts;
  std::string tl_g;
  long tl_max_power = 49;
  tl->add_option("g", tl_g)->required();
  tl->add_option("--max-power", tl_max_power, "Largest exponent sampled");
  add_common(tl, tl_opts);

  // hausdorff
  auto* hd = app.add_subcommand("hausdorff",
                                "X- vs Y-geodesic Hausdorff closeness");
  CommonOpts hd_opts;
  std::size_t hd_samples = 500, hd_length = 400, hd_min_length = 0;
  hd->add_option("--samples", hd_samples);
  hd->add_option("--length", hd_length, "Largest |w|_A sampled");
  hd->add_option("--min-length", hd_min_length, "Default length/8");
  add_common(hd, hd_opts);

  // delta
  auto* dl = app.add_subcommand("delta", "Four-point hyperbolicity defect");
  CommonOpts dl_opts;
  std::size_t dl_samples = 1000, dl_length = 100;
  dl->add_option("--samples", dl_samples);
  dl->add_option("--length", dl_length, "Largest word length sampled");
  add_common(dl, dl_opts);

  // qc-probe
  auto* qc = app.add_subcommand("qc-probe", "Quasiconvexity of the F(a,b) orbit");
  CommonOpts qc_opts;
  std::size_t qc_samples = 500, qc_length = 200;
  qc->add_option("--samples", qc_samples);
  qc->add_option("--length", qc_length, "Largest |g|_A sampled");
  add_common(qc, qc_opts);

  // acyl-census
  auto* ac = app.add_subcommand("acyl-census", "Coarse-stabilizer census");
  CommonOpts ac_opts;
  std::string ac_x = "", ac_y;
  long ac_radius = 1, ac_cap = 10, ac_c_hat = 1;
  std::size_t ac_budget = 50'000'000;
  ac->add_option("--x", ac_x, "First vertex (default identity)");
  ac->add_option("--y", ac_y, "Second vertex")->required();
  ac->add_option("--radius", ac_radius, "Displacement radius R");
  ac->add_option("--cap", ac_cap, "Enumerate c-free g with |g|_A <= cap");
  ac->add_option("--c-hat", ac_c_hat, "Measured C-hat feeding L, M");
  ac->add_option("--budget", ac_budget, "Enumeration budget");
  add_common(ac, ac_opts);

  // verify-all
  auto* va = app.add_subcommand("verify-all", "Run the full acceptance suite");
  CommonOpts va_opts;
  std::vector<int> va_only;
  va->add_option("--only", va_only, "Criterion ids to run (default all)");
  add_common(va, va_opts);

  CLI11_PARSE(app, argc, argv);
  auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  try {
    const auto start = Timer::now();

    if (cmd == gen) {
      merge_config(gen, gen_opts);
      WordSchedule schedule{gen_opts.base_length};
      std::ostringstream os;
      for (long n = 1; n <= gen_count; ++n) os << schedule.v(n).str() << "\n";
      write_text(gen_opts, os.str());
      return 0;
    }

    if (cmd == isw) {
      merge_config(isw, isw_opts);
      const WOracle oracle = make_oracle(isw_opts);
      const ReducedWord z = ReducedWord::parse(isw_word);
      const bool member = oracle.is_w_word(z);
      json witness;
      if (const auto w = oracle.witness(z))
        witness = {{"n", w->n}, {"m", w->m}};
      emit_report(isw_opts, name,
                  {{"word", z.str()}, {"is_w_word", member}, {"witness", witness}},
                  ms_since(start));
      return 0;
    }

    if (cmd == yd) {
      merge_config(yd, yd_opts);
      const WOracle oracle = make_oracle(yd_opts);
      const ReducedWord x = ReducedWord::parse(yd_x);
      const ReducedWord y = ReducedWord::parse(yd_y);
      const ReducedWord w = multiply(invert(x), y);
      const WFactorization f = y_length_dp(oracle, w);
      emit_report(yd_opts, name,
                  {{"x", x.str()},
                   {"y", y.str()},
                   {"reduced", w.str()},
                   {"distance", f.count()},
                   {"factorization", f}},
                  ms_since(start));
      return 0;
    }

    if (cmd == tl) {
      merge_config(tl, tl_opts);
      const WOracle oracle = make_oracle(tl_opts);
      const ReducedWord g = ReducedWord::parse(tl_g);
      const auto est = power_lengths(oracle, g, tl_max_power, tl_opts.workers);
      std::ostringstream csv;
      csv << "n,y_len\n";
      for (const auto& s : est.samples) csv << s.n << "," << s.y_len << "\n";
      emit_report(tl_opts, name, est, ms_since(start), csv.str());
      return 0;
    }

    if (cmd == hd) {
      merge_config(hd, hd_opts);
      if (hd_min_length == 0) hd_min_length = std::max<std::size_t>(1, hd_length / 8);
      const WOracle oracle = make_oracle(hd_opts);
      const auto report =
          hausdorff_experiment(oracle, hd_samples, hd_min_length, hd_length,
                               hd_opts.seed, hd_opts.workers);
      emit_report(hd_opts, name, report, ms_since(start),
                  rows_csv("length,hausdorff", report.rows));
      return 0;
    }

    if (cmd == dl) {
      merge_config(dl, dl_opts);
      const WOracle oracle = make_oracle(dl_opts);
      const auto report = delta_experiment(oracle, dl_samples, dl_length,
                                           dl_opts.seed, dl_opts.workers);
      emit_report(dl_opts, name, report, ms_since(start),
                  rows_csv("sample,defect_x2", report.rows));
      return 0;
    }

    if (cmd == qc) {
      merge_config(qc, qc_opts);
      const WOracle oracle = make_oracle(qc_opts);
      const auto report = qc_experiment(oracle, qc_samples, qc_length,
                                        qc_opts.seed, qc_opts.workers);
      emit_report(qc_opts, name, report, ms_since(start),
                  rows_csv("length,probe", report.rows));
      return 0;
    }

    if (cmd == ac) {
      merge_config(ac, ac_opts);
      const WOracle oracle = make_oracle(ac_opts);
      const ReducedWord x = ReducedWord::parse(ac_x);
      const ReducedWord y = ReducedWord::parse(ac_y);
      const AcylParams params = AcylParams::make(ac_radius, ac_c_hat);
      CensusOptions census_opts;
      census_opts.cap = ac_cap;
      census_opts.enumeration_budget = ac_budget;
      census_opts.workers = ac_opts.workers;
      const CensusReport report = census(oracle, x, y, params, census_opts);

      json results = report;
      bool bound_violated = false;
      if (!report.complete)
        throw std::runtime_error("enumeration budget exhausted; report incomplete");
      if (report.members.size() >
          static_cast<std::size_t>(params.max_members - 1))
        bound_violated = true;
      try {
        if (const auto rs = root_structure(report)) {
          results["root"] = {{"g0", rs->root.str()},
                             {"exponents", rs->exponents}};
        } else {
          results["root"] = nullptr;
        }
      } catch (const CensusViolation& e) {
        bound_violated = true;
        results["root_violation"] = e.what();
      }
      results["bound_violated"] = bound_violated;
      emit_report(ac_opts, name, results, ms_since(start));
      return bound_violated ? 2 : 0;
    }

    if (cmd == va) {
      merge_config(va, va_opts);
      verify::Options vopts;
      vopts.base_length = va_opts.base_length;
      vopts.seed = va_opts.seed;
      vopts.workers = va_opts.workers;
      const std::set<int> only(va_only.begin(), va_only.end());
      const auto results = verify::run_criteria(vopts, only, &std::cerr);
      json payload = json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        payload.push_back({{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds},
                           {"data", r.data}});
        all_pass = all_pass && r.pass;
      }
      emit_report(va_opts, name,
                  {{"criteria", payload}, {"all_pass", all_pass}},
                  ms_since(start));
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    return structured_error(name, e);
  }
  return 0;
}
