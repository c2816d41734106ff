#include "polyinv/cli/commands.hpp"

#include "polyinv/cli/corpus.hpp"
#include "polyinv/exec/trace_csv.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace polyinv {
namespace {

struct Flags {
  std::uint64_t alpha = 200;
  int degree = 0;
  std::int64_t oct_range = 10;
  std::string mode = "auto";
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::string locations;
  std::string format = "text";
  unsigned jobs = 1;
  bool wrap64 = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--alpha", f.alpha, "term cap for automatic degree selection");
  cmd->add_option("--degree", f.degree, "fixed equality degree (overrides --alpha)");
  cmd->add_option("--oct-range", f.oct_range, "octagon bounds are searched in [-M, M]");
  cmd->add_option("--mode", f.mode, "verifier mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
  cmd->add_option("--budget", f.budget, "max inputs per verifier call");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--locations", f.locations, "comma-separated location filter");
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", f.jobs, "worker threads");
  cmd->add_flag("--wrap64", f.wrap64, "64-bit wrap-around arithmetic");
  cmd->add_flag("--timings", f.timings, "include timings in JSON output");
}

Config to_config(const Flags& f) {
  Config c;
  c.alpha = f.alpha;
  if (f.degree != 0) c.degree = f.degree;
  c.oct_range = f.oct_range;
  c.mode = parse_mode(f.mode);
  if (f.budget != 0) c.budget = f.budget;
  c.seed = f.seed;
  std::stringstream ss(f.locations);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) c.locations.push_back(part);
  c.format = f.format == "json" ? OutputFormat::Json : OutputFormat::Text;
  c.jobs = f.jobs;
  c.wrap64 = f.wrap64;
  c.timings = f.timings;
  c.validate();
  return c;
}

int cmd_infer(const std::string& path, const Config& cfg, std::ostream& out) {
  Program p = load_program(path);
  Report r = run_infer(p, cfg);
  if (cfg.format == OutputFormat::Json) out << to_json(r, cfg.timings).dump(2) << "\n";
  else out << to_text(r);
  return kExitOk;
}

int cmd_traces(const std::string& path, const Config& cfg, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto sets = read_trace_csv(in);
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  Report r = run_traces(sets, cfg, name);
  if (cfg.format == OutputFormat::Json) out << to_json(r, cfg.timings).dump(2) << "\n";
  else out << to_text(r);
  return kExitOk;
}

int cmd_complexity(const std::string& path, const Config& cfg, std::ostream& out) {
  Program p = load_program(path);
  ComplexityReport r = run_complexity(p, cfg);
  if (cfg.format == OutputFormat::Json) out << to_json(r, cfg.timings).dump(2) << "\n";
  else out << to_text(r);
  return r.relation ? kExitOk : kExitFailure;
}

int cmd_corpus(const std::string& dir, const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  auto entries = run_corpus(dir, cfg, &warnings);
  for (const auto& w : warnings) err << w << "\n";
  if (cfg.format == OutputFormat::Json) out << to_json(entries, cfg, cfg.timings).dump(2) << "\n";
  else out << to_text(entries);
  for (const auto& e : entries)
    if (!e.error.empty() || (e.has_sidecar && !e.pass)) return kExitFailure;
  return kExitOk;
}

int cmd_exec(const std::string& path, const Config& cfg, std::ostream& out, std::ostream& err) {
  Program p = load_program(path);
  VerifyBudget b = cfg.verify_budget();
  std::vector<Input> inputs;
  auto n = box_size(p);
  VerifyMode mode = b.mode;
  if (mode == VerifyMode::Auto)
    mode = (n && *n <= b.exhaustive_limit) ? VerifyMode::Exhaustive : VerifyMode::Random;
  if (mode == VerifyMode::Exhaustive) {
    BoxEnumerator box(p);
    std::uint64_t m = std::min(box.size(), b.max_inputs);
    for (std::uint64_t i = 0; i < m; ++i) inputs.push_back(box.at(i));
  } else {
    RandomInputs gen(p, b.seed, b.random_window);
    std::uint64_t m = std::min(b.samples, b.max_inputs);
    for (std::uint64_t i = 0; i < m; ++i) inputs.push_back(gen.next());
  }
  std::vector<TraceSet> sets;
  for (const auto& l : p.locations()) {
    if (!cfg.locations.empty() &&
        std::find(cfg.locations.begin(), cfg.locations.end(), l.id.label) == cfg.locations.end())
      continue;
    ExecStats st;
    sets.push_back(exec_many(p, l.id, inputs, cfg.run_options(), cfg.jobs, &st));
    if (st.diverged + st.runtime_error)
      err << l.id.label << ": " << st.diverged << " diverged, " << st.runtime_error
          << " runtime errors\n";
  }
  write_trace_csv(out, sets);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical invariant inference for small integer programs", "polyinv"};
  app.require_subcommand(1);
  Flags f;
  std::string target;

  auto* infer = app.add_subcommand("infer", "infer invariants at every marked location");
  infer->add_option("program", target, "program file (.mpl)")->required();
  add_common(infer, f);
  auto* traces = app.add_subcommand("traces", "infer candidates from a trace CSV (unverified)");
  traces->add_option("csv", target, "trace file")->required();
  add_common(traces, f);
  auto* cx = app.add_subcommand("complexity", "counter relation and loop bounds at exit");
  cx->add_option("program", target, "program file (.mpl)")->required();
  add_common(cx, f);
  auto* corpus = app.add_subcommand("corpus", "run a directory of programs with sidecars");
  corpus->add_option("dir", target, "corpus directory")->required();
  add_common(corpus, f);
  auto* exec = app.add_subcommand("exec", "write traces of the input box as CSV");
  exec->add_option("program", target, "program file (.mpl)")->required();
  add_common(exec, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  Config cfg;
  try {
    cfg = to_config(f);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*infer) return cmd_infer(target, cfg, out);
    if (*traces) return cmd_traces(target, cfg, out);
    if (*cx) return cmd_complexity(target, cfg, out);
    if (*corpus) return cmd_corpus(target, cfg, out, err);
    if (*exec) return cmd_exec(target, cfg, out, err);
  } catch (const ParseError& e) {
    err << target << ":" << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace polyinv
