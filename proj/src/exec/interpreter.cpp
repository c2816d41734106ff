#include "polyinv/exec/interpreter.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polyinv {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Diverged: return "diverged";
    case RunStatus::AssumeViolated: return "assume-violated";
    case RunStatus::RuntimeError: return "runtime-error";
  }
  return "?";
}

std::uint64_t run_seed(std::uint64_t seed, const Input& in) {
  std::uint64_t h = seed ^ 0x243f6a8885a308d3ULL;
  h ^= static_cast<std::uint64_t>(hash_values(in)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  // splitmix64 finalizer
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

std::vector<Int> values_at(const LocationInfo& loc, const std::vector<Int>& state) {
  std::vector<Int> out;
  out.reserve(loc.slots.size());
  for (int s : loc.slots) out.push_back(state[s]);
  return out;
}

std::string format_input(const Program& p, const Input& in) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) os << ", ";
    if (i < p.inputs().size()) os << p.inputs()[i].name << "=";
    os << in[i].get_str();
  }
  os << ")";
  return os.str();
}

namespace {

struct Stop {
  RunStatus status;
  std::string msg;
  SourcePos pos;
};

class Machine {
 public:
  Machine(const Program& p, const RunOptions& opts, const VisitFn& visit, RunResult& res)
      : p_(p), opts_(opts), visit_(visit), res_(res) {}

  void exec(const Stmt& s) {
    switch (s.kind) {
      case Stmt::Kind::Block:
        for (const auto& c : s.children) exec(*c);
        return;
      case Stmt::Kind::Assign:
        step(s.pos);
        state_[s.slot] = eval(*s.expr);
        return;
      case Stmt::Kind::If:
        step(s.pos);
        if (truthy(*s.expr)) exec(*s.then_branch());
        else if (s.else_branch()) exec(**s.else_branch());
        return;
      case Stmt::Kind::While:
        for (;;) {
          step(s.pos);
          if (s.loc_index >= 0) visit(s.loc_index);
          if (!truthy(*s.expr)) return;
          ++res_.loop_entries;
          exec(*s.loop_body());
        }
      case Stmt::Kind::Assume:
        step(s.pos);
        if (!truthy(*s.expr)) throw Stop{RunStatus::AssumeViolated, "assumption violated", s.pos};
        return;
      case Stmt::Kind::Mark:
        step(s.pos);
        visit(s.loc_index);
        return;
    }
  }

  std::vector<Int> state_;

 private:
  void step(SourcePos pos) {
    if (++res_.steps > opts_.max_steps)
      throw Stop{RunStatus::Diverged, "step budget exhausted", pos};
  }

  void visit(int idx) {
    ++res_.visits[idx];
    visit_(idx, state_);
  }

  bool truthy(const Expr& e) { return sgn(eval(e)) != 0; }

  Int fix(Int v) {
    if (opts_.wrap64) wrap_to_int64(v);
    return v;
  }

  Int eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal:
        return e.value;
      case Expr::Kind::Variable:
        return state_[e.slot];
      case Expr::Kind::Unary: {
        Int v = eval(*e.lhs);
        if (e.uop == UnaryOp::Neg) return fix(-v);
        return Int(sgn(v) == 0 ? 1 : 0);
      }
      case Expr::Kind::Binary:
        break;
    }
    if (e.bop == BinaryOp::And) return Int(truthy(*e.lhs) && truthy(*e.rhs) ? 1 : 0);
    if (e.bop == BinaryOp::Or) return Int(truthy(*e.lhs) || truthy(*e.rhs) ? 1 : 0);
    Int a = eval(*e.lhs);
    Int b = eval(*e.rhs);
    switch (e.bop) {
      case BinaryOp::Add: return fix(a + b);
      case BinaryOp::Sub: return fix(a - b);
      case BinaryOp::Mul: return fix(a * b);
      case BinaryOp::Div:
        if (sgn(b) == 0) throw Stop{RunStatus::RuntimeError, "division by zero", e.pos};
        return fix(div_trunc(a, b));
      case BinaryOp::Mod:
        if (sgn(b) == 0) throw Stop{RunStatus::RuntimeError, "modulo by zero", e.pos};
        return fix(mod_trunc(a, b));
      case BinaryOp::Lt: return Int(a < b ? 1 : 0);
      case BinaryOp::Le: return Int(a <= b ? 1 : 0);
      case BinaryOp::Eq: return Int(a == b ? 1 : 0);
      case BinaryOp::Ne: return Int(a != b ? 1 : 0);
      case BinaryOp::Ge: return Int(a >= b ? 1 : 0);
      case BinaryOp::Gt: return Int(a > b ? 1 : 0);
      default: return Int(0);
    }
  }

  const Program& p_;
  const RunOptions& opts_;
  const VisitFn& visit_;
  RunResult& res_;
};

void check_input(const Program& p, const Input& in) {
  if (in.size() != p.inputs().size())
    throw std::invalid_argument("program '" + p.name() + "' expects " +
                                std::to_string(p.inputs().size()) + " inputs, got " +
                                std::to_string(in.size()));
}

}  // namespace

RunResult run_visit(const Program& p, const Input& in, const RunOptions& opts,
                    const VisitFn& visit) {
  check_input(p, in);
  RunResult res;
  res.visits.assign(p.locations().size(), 0);
  Machine m(p, opts, visit, res);
  m.state_.assign(p.slot_count(), Int(0));
  for (std::size_t i = 0; i < in.size(); ++i) {
    m.state_[p.input_slots()[i]] = in[i];
    if (opts.wrap64) wrap_to_int64(m.state_[p.input_slots()[i]]);
  }
  try {
    m.exec(*p.body());
  } catch (const Stop& s) {
    res.status = s.status;
    res.error = s.msg;
    res.error_pos = s.pos;
  }
  res.final_state = std::move(m.state_);
  return res;
}

RunResult run(const Program& p, const Input& in, const RunOptions& opts) {
  int only = -1;
  if (opts.only) only = static_cast<int>(&p.location(*opts.only) - p.locations().data());

  struct Kept {
    std::uint64_t order;
    int loc;
    std::vector<Int> values;
  };
  const std::size_t nloc = p.locations().size();
  std::vector<std::vector<Kept>> kept(nloc);
  std::vector<std::uint64_t> seen(nloc, 0);
  std::mt19937_64 rng(run_seed(opts.seed, in));
  std::uint64_t order = 0;
  bool truncated = false;

  VisitFn rec = [&](int idx, const std::vector<Int>& state) {
    ++order;
    if (only >= 0 && idx != only) return;
    std::uint64_t n = ++seen[idx];
    auto& bucket = kept[idx];
    const LocationInfo& loc = p.locations()[idx];
    if (bucket.size() < opts.trace_cap) {
      bucket.push_back({order, idx, values_at(loc, state)});
      return;
    }
    truncated = true;
    std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
    if (j < opts.trace_cap) bucket[j] = {order, idx, values_at(loc, state)};
  };

  RunResult res = run_visit(p, in, opts, rec);
  res.truncated = truncated;
  std::vector<Kept> all;
  for (auto& b : kept)
    for (auto& k : b) all.push_back(std::move(k));
  std::sort(all.begin(), all.end(),
            [](const Kept& a, const Kept& b) { return a.order < b.order; });
  res.traces.reserve(all.size());
  for (auto& k : all) res.traces.push_back({p.locations()[k.loc].id, std::move(k.values)});
  return res;
}

TraceSet exec_many(const Program& p, const LocationId& loc, const std::vector<Input>& ins,
                   const RunOptions& opts, unsigned jobs, ExecStats* stats) {
  const LocationInfo& info = p.location(loc);
  RunOptions o = opts;
  o.only = loc;

  std::vector<RunResult> results(ins.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = run(p, ins[i], o);
  };
  if (jobs <= 1 || ins.size() < 2) {
    work(0, ins.size());
  } else {
    std::size_t n = std::min<std::size_t>(jobs, ins.size());
    std::vector<std::thread> threads;
    std::size_t chunk = (ins.size() + n - 1) / n;
    for (std::size_t b = 0; b < ins.size(); b += chunk)
      threads.emplace_back(work, b, std::min(ins.size(), b + chunk));
    for (auto& t : threads) t.join();
  }

  TraceSet out(loc, info.vars);
  for (std::size_t i = 0; i < ins.size(); ++i) {
    const RunResult& r = results[i];
    if (stats) {
      switch (r.status) {
        case RunStatus::Ok: ++stats->ok; break;
        case RunStatus::Diverged: ++stats->diverged; break;
        case RunStatus::AssumeViolated: ++stats->assume_violated; break;
        case RunStatus::RuntimeError: ++stats->runtime_error; break;
      }
      if (r.status != RunStatus::Ok)
        stats->log.push_back(format_input(p, ins[i]) + ": " + to_string(r.status) +
                             (r.error.empty() ? "" : " (" + r.error + " at " +
                                                         std::to_string(r.error_pos.line) + ":" +
                                                         std::to_string(r.error_pos.column) + ")"));
    }
    if (r.status != RunStatus::Ok) continue;
    for (const auto& t : r.traces) out.add(t.values, ins[i]);
  }
  return out;
}

}  // namespace polyinv
