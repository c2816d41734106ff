#include "polyinv/algebra/eq_system.hpp"

#include <stdexcept>

namespace polyinv {

IntVec instantiate(const std::vector<Monomial>& terms, const std::vector<Int>& point) {
  int maxdeg = 0;
  for (const auto& t : terms) {
    if (t.nvars() != point.size())
      throw std::invalid_argument("trace does not cover the template variables");
    for (int e : t.exp) maxdeg = std::max(maxdeg, e);
  }
  std::vector<std::vector<Int>> pw(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    pw[i].resize(maxdeg + 1);
    pw[i][0] = 1;
    for (int k = 1; k <= maxdeg; ++k) pw[i][k] = pw[i][k - 1] * point[i];
  }
  IntVec row(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Int v = 1;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (terms[j].exp[i]) v *= pw[i][terms[j].exp[i]];
    row[j] = std::move(v);
  }
  return row;
}

EqSystem::EqSystem(std::vector<Monomial> terms)
    : terms_(std::move(terms)), modp_(terms_.size()), exact_(terms_.size()) {}

bool EqSystem::add_point(const std::vector<Int>& point) { return add_row(instantiate(terms_, point)); }

bool EqSystem::add_row(IntVec row) {
  if (row.size() != terms_.size()) throw std::invalid_argument("row length mismatch");
  bool indep = modp_.add(row);
  if (indep) exact_.add(row);
  in_exact_.push_back(indep);
  rows_.push_back(std::move(row));
  return indep;
}

std::vector<RatVec> EqSystem::solve() {
  for (;;) {
    std::vector<RatVec> basis = exact_.nullspace();
    std::vector<IntVec> ib;
    ib.reserve(basis.size());
    for (const auto& b : basis) ib.push_back(to_primitive_int(b));
    bool clean = true;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (in_exact_[r]) continue;
      for (const auto& v : ib) {
        Int s = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
          if (sgn(v[j]) != 0) s += rows_[r][j] * v[j];
        if (sgn(s) != 0) {
          exact_.add(rows_[r]);
          in_exact_[r] = true;
          clean = false;
          break;
        }
      }
    }
    if (clean) return basis;
  }
}

}  // namespace polyinv
