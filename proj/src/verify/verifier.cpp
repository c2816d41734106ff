#include "polyinv/verify/verifier.hpp"

#include "polyinv/algebra/eq_system.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

namespace polyinv {

std::string to_string(const Predicate& p) {
  if (const auto* e = std::get_if<Equality>(&p)) return e->to_string();
  if (const auto* o = std::get_if<OctConstraint>(&p)) return o->to_string();
  return "false";
}

bool predicate_holds(const Predicate& pred, const std::vector<std::string>& vars,
                     const std::vector<Int>& point) {
  if (const auto* e = std::get_if<Equality>(&pred)) return e->embed(vars).holds(point);
  if (const auto* o = std::get_if<OctConstraint>(&pred)) return o->holds(vars, point);
  return false;
}

const char* to_string(VerifyMode m) {
  switch (m) {
    case VerifyMode::Auto: return "auto";
    case VerifyMode::Exhaustive: return "exhaustive";
    case VerifyMode::Random: return "random";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kCacheInputLimit = 250'000;
constexpr std::size_t kCacheTraceLimit = 4'000'000;
constexpr std::size_t kObservedLimit = 2'000'000;
constexpr std::uint64_t kBlock = 512;

/// Candidates bound to a location's variable order.
class BoundChecker {
 public:
  BoundChecker(const std::vector<Candidate>& cands, const std::vector<std::string>& vars) {
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (const auto& c : cands) {
      Bound b;
      if (const auto* e = std::get_if<Equality>(&c.pred)) {
        b.kind = 0;
        Equality be = e->embed(vars);
        for (const auto& [m, coef] : be.poly().terms()) {
          auto it = index.find(m);
          if (it == index.end()) {
            it = index.emplace(m, monos_.size()).first;
            monos_.push_back(m);
          }
          b.eq.emplace_back(it->second, coef.get_num());
        }
      } else if (const auto* o = std::get_if<OctConstraint>(&c.pred)) {
        b.kind = 1;
        b.oct = BoundOctTerm::bind(o->term, vars);
        b.k = o->k;
      } else {
        b.kind = 2;
      }
      bounds_.push_back(std::move(b));
    }
  }

  /// Marks violated[i] for every candidate violated at `point`.
  void check(const std::vector<Int>& point, std::vector<char>& violated) const {
    IntVec mv;
    if (!monos_.empty()) mv = instantiate(monos_, point);
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
      if (violated[i]) continue;
      const Bound& b = bounds_[i];
      bool bad = false;
      if (b.kind == 0) {
        Int s = 0;
        for (const auto& [j, c] : b.eq) s += c * mv[j];
        bad = sgn(s) != 0;
      } else if (b.kind == 1) {
        bad = b.oct.eval(point) > b.k;
      } else {
        bad = true;
      }
      if (bad) violated[i] = 1;
    }
  }

 private:
  struct Bound {
    int kind = 0;
    std::vector<std::pair<std::size_t, Int>> eq;
    BoundOctTerm oct;
    Int k;
  };
  std::vector<Monomial> monos_;
  std::vector<Bound> bounds_;
};

}  // namespace

Verifier::Verifier(const Program& p, VerifyBudget budget, RunOptions run, unsigned jobs)
    : p_(p), budget_(budget), run_(std::move(run)), jobs_(jobs == 0 ? 1 : jobs) {
  run_.only.reset();
  if (budget_.max_inputs == 0 || budget_.samples == 0 || budget_.max_cex == 0)
    throw std::invalid_argument("verifier budget must be positive");
  auto n = box_size(p_);
  mode_ = budget_.mode;
  if (mode_ == VerifyMode::Auto)
    mode_ = (n && *n <= budget_.exhaustive_limit) ? VerifyMode::Exhaustive : VerifyMode::Random;
  if (mode_ == VerifyMode::Exhaustive) {
    if (!n) throw std::invalid_argument("exhaustive verification needs bounded input ranges");
    box_.emplace(p_);
    sweep_ = std::min(box_->size(), budget_.max_inputs);
  } else {
    sweep_ = std::min(budget_.samples, budget_.max_inputs);
    RandomInputs gen(p_, budget_.seed, budget_.random_window);
    random_inputs_.reserve(sweep_);
    for (std::uint64_t i = 0; i < sweep_; ++i) random_inputs_.push_back(gen.next());
  }
  cache_enabled_ = sweep_ <= kCacheInputLimit;
}

Input Verifier::input_at(std::uint64_t i) {
  return box_ ? box_->at(i) : random_inputs_[i];
}

void Verifier::record(const Input& in, const Outcome& o) {
  if (o.status != RunStatus::Ok) return;
  if (!recorded_.insert(in).second) return;
  for (const auto& t : o.traces) {
    auto it = observed_.find(t.loc);
    if (it == observed_.end())
      it = observed_.emplace(t.loc, TraceSet(t.loc, p_.location(t.loc).vars)).first;
    if (it->second.size() < kObservedLimit) it->second.add(t.values, in);
  }
}

std::shared_ptr<const Verifier::Outcome> Verifier::outcome(const Input& in) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.runs;
    auto it = cache_.find(in);
    if (it != cache_.end()) {
      ++stats_.cache_hits;
      --stats_.runs;
      return it->second;
    }
  }
  RunResult r = run(p_, in, run_);
  auto o = std::make_shared<Outcome>();
  o->status = r.status;
  o->truncated = r.truncated;
  if (r.status == RunStatus::Ok) o->traces = std::move(r.traces);
  std::lock_guard<std::mutex> lock(mu_);
  record(in, *o);
  if (cache_enabled_ && cached_traces_ + o->traces.size() <= kCacheTraceLimit) {
    cached_traces_ += o->traces.size();
    cache_.emplace(in, o);
  }
  return o;
}

const TraceSet& Verifier::observed(const LocationId& loc) {
  auto it = observed_.find(loc);
  if (it == observed_.end()) it = observed_.emplace(loc, TraceSet(loc, p_.location(loc).vars)).first;
  return it->second;
}

VerifyResult Verifier::find_cex(const LocationId& loc, std::vector<Candidate>& cands,
                                const InputSet& known) {
  if (cands.empty()) throw std::invalid_argument("find_cex needs at least one candidate");
  const LocationInfo& info = p_.location(loc);
  const int loc_index = static_cast<int>(&info - p_.locations().data());
  ++stats_.calls;
  BoundChecker checker(cands, info.vars);
  const auto start = std::chrono::steady_clock::now();

  VerifyResult res;
  std::vector<char> disproved(cands.size(), 0);
  std::size_t n_disproved = 0;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (cands[i].stat == CandStat::Disproved) {
      disproved[i] = 1;
      ++n_disproved;
    }

  struct Visit {
    Input in;
    bool reached = false;
    std::vector<char> violated;
  };
  auto evaluate = [&](std::uint64_t idx, Visit& v) {
    v.in = input_at(idx);
    v.violated.assign(cands.size(), 0);
    auto o = outcome(v.in);
    if (o->status != RunStatus::Ok) return;
    if (o->truncated) {
      RunOptions ro = run_;
      RunResult r = run_visit(p_, v.in, ro, [&](int li, const std::vector<Int>& state) {
        if (li != loc_index) return;
        v.reached = true;
        checker.check(values_at(info, state), v.violated);
      });
      if (r.status != RunStatus::Ok) {
        v.reached = false;
        v.violated.assign(cands.size(), 0);
      }
      return;
    }
    for (const auto& t : o->traces) {
      if (t.loc != loc) continue;
      v.reached = true;
      checker.check(t.values, v.violated);
    }
  };

  bool stopped = false;
  std::uint64_t idx = 0;
  std::vector<Visit> block;
  while (idx < sweep_ && !stopped) {
    std::uint64_t n = std::min<std::uint64_t>(kBlock, sweep_ - idx);
    block.assign(n, Visit{});
    if (jobs_ > 1 && n > 1) {
      std::vector<std::thread> threads;
      unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(jobs_, n));
      for (unsigned t = 0; t < w; ++t)
        threads.emplace_back([&, t] {
          for (std::uint64_t k = t; k < n; k += w) evaluate(idx + k, block[k]);
        });
      for (auto& th : threads) th.join();
    } else {
      for (std::uint64_t k = 0; k < n; ++k) evaluate(idx + k, block[k]);
    }
    for (std::uint64_t k = 0; k < n && !stopped; ++k) {
      Visit& v = block[k];
      ++res.inputs_tried;
      if (!v.reached) continue;
      res.reached = true;
      bool any = false, fresh_kill = false;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!v.violated[i]) continue;
        any = true;
        if (!disproved[i]) {
          disproved[i] = 1;
          ++n_disproved;
          fresh_kill = true;
        }
      }
      if (any && !known.count(v.in) &&
          (fresh_kill || res.cex_inputs.size() < budget_.max_cex)) {
        bool dup = false;
        for (const auto& c : res.cex_inputs) dup = dup || c == v.in;
        if (!dup) res.cex_inputs.push_back(v.in);
      }
      if (n_disproved == cands.size() && res.cex_inputs.size() >= budget_.max_cex)
        stopped = true;
    }
    idx += n;
    if (budget_.wall_ms) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      if (static_cast<std::uint64_t>(ms) >= budget_.wall_ms) break;
    }
  }
  res.box_complete = box_ && !stopped && idx >= box_->size();

  res.stats.resize(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (disproved[i]) {
      cands[i].stat = CandStat::Disproved;
    } else if (res.box_complete && cands[i].stat == CandStat::Undecided) {
      cands[i].stat = CandStat::Accepted;
      cands[i].accepted_on_box = true;
    }
    res.stats[i] = cands[i].stat;
  }
  stats_.cex_returned += res.cex_inputs.size();
  return res;
}

TraceSet Verifier::exec(const LocationId& loc, const std::vector<Input>& ins) {
  TraceSet out(loc, p_.location(loc).vars);
  for (const auto& in : ins) {
    auto o = outcome(in);
    if (o->status != RunStatus::Ok) continue;
    for (const auto& t : o->traces)
      if (t.loc == loc) out.add(t.values, in);
  }
  return out;
}

std::optional<Input> Verifier::check_reachable(const LocationId& loc, const InputSet& known) {
  std::vector<Candidate> c{Candidate(FalsePredicate{})};
  VerifyResult r = find_cex(loc, c, known);
  if (r.cex_inputs.empty()) return std::nullopt;
  return r.cex_inputs.front();
}

}  // namespace polyinv
