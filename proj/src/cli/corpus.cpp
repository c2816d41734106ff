#include "polyinv/cli/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

namespace polyinv {

namespace fs = std::filesystem;

namespace {

CorpusEntry run_entry(const fs::path& path, Config cfg) {
  CorpusEntry e;
  e.name = path.stem().string();
  e.path = path.string();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Program p = load_program(e.path);
    Sidecar sc;
    fs::path side = path;
    side.replace_extension(".expected");
    if (fs::exists(side)) {
      e.has_sidecar = true;
      sc = load_sidecar(side.string());
      for (const auto& [k, v] : sc.options) cfg.set_option(k, v);
    }
    e.report = run_infer(p, cfg);
    for (const auto& l : e.report->locations) e.invariants += l.equalities.size() + l.octagons.size();
    e.expectations = check_expectations(sc, *e.report);
    if (sc.has_bounds) {
      e.complexity = run_complexity(p, cfg);
      e.bounds_ok = check_bounds(sc, *e.complexity);
    }
    bool residual_ok = true;
    for (const auto& l : e.report->locations) residual_ok = residual_ok && l.residual_violations == 0;
    e.pass = residual_ok && e.bounds_ok &&
             std::all_of(e.expectations.begin(), e.expectations.end(),
                         [](const ExpectationOutcome& o) { return o.ok; });
  } catch (const std::exception& ex) {
    e.error = ex.what();
    e.pass = false;
  }
  e.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

}  // namespace

std::vector<CorpusEntry> run_corpus(const std::string& dir, const Config& cfg,
                                    std::vector<std::string>* warnings) {
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".mpl") files.push_back(de.path());
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> out(files.size());
  Config inner = cfg;
  unsigned workers = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(files.size()));
  if (workers > 1) {
    inner.jobs = 1;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&] {
        for (std::size_t i; (i = next++) < files.size();) out[i] = run_entry(files[i], inner);
      });
    for (auto& t : threads) t.join();
  } else {
    for (std::size_t i = 0; i < files.size(); ++i) out[i] = run_entry(files[i], inner);
  }
  if (warnings)
    for (const auto& e : out)
      if (!e.has_sidecar && e.error.empty())
        warnings->push_back("warning: no sidecar for " + e.name);
  return out;
}

nlohmann::ordered_json to_json(const std::vector<CorpusEntry>& entries, const Config& cfg,
                               bool timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "corpus";
  j["config"] = config_json(cfg);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json o;
    o["name"] = e.name;
    o["status"] = !e.error.empty() ? "error" : !e.has_sidecar ? "unchecked" : e.pass ? "pass" : "fail";
    o["invariants"] = e.invariants;
    if (!e.error.empty()) o["error"] = e.error;
    nlohmann::ordered_json ex = nlohmann::ordered_json::array();
    for (const auto& x : e.expectations) ex.push_back({{"expect", x.text}, {"ok", x.ok}});
    o["expectations"] = ex;
    if (e.report) o["report"] = to_json(*e.report, timings);
    if (e.complexity) {
      o["complexity"] = to_json(*e.complexity, timings);
      o["bounds_ok"] = e.bounds_ok;
    }
    if (timings) o["ms"] = e.ms;
    arr.push_back(std::move(o));
  }
  j["programs"] = arr;
  return j;
}

std::string to_text(const std::vector<CorpusEntry>& entries, bool timings) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-16s %6s %10s  %s\n", "program", "invs", "time(ms)", "correct");
  os << buf;
  std::size_t pass = 0;
  for (const auto& e : entries) {
    std::string status = !e.error.empty() ? "error" : !e.has_sidecar ? "unchecked" : e.pass ? "yes" : "NO";
    if (e.pass) ++pass;
    std::string t = "-";
    if (timings) {
      char tb[32];
      std::snprintf(tb, sizeof tb, "%.0f", e.ms);
      t = tb;
    }
    std::snprintf(buf, sizeof buf, "%-16s %6zu %10s  %s\n", e.name.c_str(), e.invariants, t.c_str(),
                  status.c_str());
    os << buf;
    if (!e.error.empty()) os << "    " << e.error << "\n";
    for (const auto& x : e.expectations)
      if (!x.ok) os << "    missing " << x.text << "\n";
    if (!e.bounds_ok) os << "    complexity bounds differ from expected\n";
  }
  os << pass << "/" << entries.size() << " correct\n";
  return os.str();
}

}  // namespace polyinv
