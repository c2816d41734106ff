#include "polyinv/simplify/octagon_closure.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {

OctagonDbm::OctagonDbm(std::vector<std::string> vars)
    : vars_(std::move(vars)), n2_(2 * vars_.size()), m_(n2_ * n2_) {
  for (std::size_t i = 0; i < n2_; ++i) at(i, i) = {true, Int(0)};
}

std::size_t OctagonDbm::node(const std::string& var, int sign) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw std::invalid_argument("unknown octagon variable '" + var + "'");
  std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  return 2 * i + (sign > 0 ? 0 : 1);
}

void OctagonDbm::tighten_edge(std::size_t i, std::size_t j, const Int& v) {
  Cell& c = at(i, j);
  if (!c.finite || v < c.v) c = {true, v};
}

// Cell (i, j) bounds V_j - V_i.
void OctagonDbm::add(const OctConstraint& c) {
  const OctTerm& t = c.term;
  std::size_t p = node(t.v1, t.a1);
  if (!t.is_pair()) {
    tighten_edge(p ^ 1, p, 2 * c.k);
    return;
  }
  std::size_t q = node(t.v2, -t.a2);  // V_p - V_q = a1*v1 + a2*v2
  tighten_edge(q, p, c.k);
  tighten_edge(p ^ 1, q ^ 1, c.k);
}

bool OctagonDbm::close() {
  const std::size_t n = n2_;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& ik = at(i, k);
      if (!ik.finite) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Cell& kj = at(k, j);
        if (!kj.finite) continue;
        Int s = ik.v + kj.v;
        tighten_edge(i, j, s);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (at(i, i).v < 0) return !(unsat_ = true);
  // integer tightening of unary bounds
  for (std::size_t i = 0; i < n; ++i) {
    Cell& c = at(i ^ 1, i);
    if (!c.finite) continue;
    Int h;
    mpz_fdiv_q_2exp(h.get_mpz_t(), c.v.get_mpz_t(), 1);
    c.v = 2 * h;
  }
  // strengthening through unary bounds
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Cell& a = at(i, i ^ 1);
      const Cell& b = at(j ^ 1, j);
      if (!a.finite || !b.finite) continue;
      Int s = a.v + b.v;
      Int h;
      mpz_fdiv_q_2exp(h.get_mpz_t(), s.get_mpz_t(), 1);
      tighten_edge(i, j, h);
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i).v < 0) return !(unsat_ = true);
    const Cell& a = at(i, i ^ 1);
    const Cell& b = at(i ^ 1, i);
    if (a.finite && b.finite && a.v + b.v < 0) return !(unsat_ = true);
  }
  return true;
}

std::optional<Int> OctagonDbm::bound(const OctTerm& t) const {
  if (unsat_) return std::nullopt;
  std::size_t p = node(t.v1, t.a1);
  if (!t.is_pair()) {
    const Cell& c = at(p ^ 1, p);
    if (!c.finite) return std::nullopt;
    Int h;
    mpz_fdiv_q_2exp(h.get_mpz_t(), c.v.get_mpz_t(), 1);
    return h;
  }
  std::size_t q = node(t.v2, -t.a2);
  const Cell& c = at(q, p);
  if (!c.finite) return std::nullopt;
  return c.v;
}

bool OctagonDbm::entails(const OctConstraint& c) const {
  if (unsat_) return true;
  for (const auto* v : {&c.term.v1, &c.term.v2}) {
    if (v->empty()) continue;
    if (std::find(vars_.begin(), vars_.end(), *v) == vars_.end()) return false;
  }
  auto b = bound(c.term);
  return b && *b <= c.k;
}

}  // namespace polyinv
