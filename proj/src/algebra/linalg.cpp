#include "polyinv/algebra/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {

void RrefBuilder::reduce(RatVec& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = row[pivots_[i]];
    if (f == 0) continue;
    const RatVec& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < ncols_; ++j)
      if (r[j] != 0) row[j] -= f * r[j];
  }
}

bool RrefBuilder::in_span(RatVec row) const {
  if (row.size() != ncols_) throw std::invalid_argument("row length mismatch");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
}

bool RrefBuilder::add(RatVec row) {
  if (row.size() != ncols_) throw std::invalid_argument("row length mismatch");
  reduce(row);
  std::size_t p = 0;
  while (p < ncols_ && row[p] == 0) ++p;
  if (p == ncols_) return false;
  const Rational inv = 1 / row[p];
  for (std::size_t j = p; j < ncols_; ++j)
    if (row[j] != 0) row[j] *= inv;
  for (auto& r : rows_) {
    const Rational f = r[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < ncols_; ++j)
      if (row[j] != 0) r[j] -= f * row[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

bool RrefBuilder::add(const IntVec& row) {
  RatVec r(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) r[i] = Rational(row[i]);
  return add(std::move(r));
}

std::vector<RatVec> RrefBuilder::nullspace() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols_, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> nullspace(const std::vector<IntVec>& rows, std::size_t ncols) {
  RrefBuilder b(ncols);
  for (const auto& r : rows) b.add(r);
  return b.nullspace();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 P = ModpEchelon::kPrime;

u64 mulmod(u64 a, u64 b) {
  u128 x = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(x & P), hi = static_cast<u64>(x >> 61);
  u64 s = lo + hi;
  return s >= P ? s - P : s;
}

u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return mulmod(a, b); }
std::uint64_t inv(std::uint64_t a) { return powmod(a, P - 2); }
std::uint64_t from_int(const Int& v) { return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), P)); }

std::uint64_t from_rational(const Rational& v) {
  u64 d = from_int(v.get_den());
  if (d == 0) throw std::domain_error("denominator divisible by the modulus");
  return mulmod(from_int(v.get_num()), powmod(d, P - 2));
}

}  // namespace modp

std::uint64_t ModpEchelon::reduce(const Int& v) {
  return static_cast<u64>(mpz_fdiv_ui(v.get_mpz_t(), P));
}

bool ModpEchelon::add(const IntVec& row) {
  if (row.size() != ncols_) throw std::invalid_argument("row length mismatch");
  std::vector<u64> r(ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) r[j] = reduce(row[j]);
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (r[j] == 0) continue;
    long pr = pivot_row_[j];
    if (pr < 0) {
      u64 inv = powmod(r[j], P - 2);
      for (std::size_t k = j; k < ncols_; ++k) r[k] = mulmod(r[k], inv);
      pivot_row_[j] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    const auto& pv = rows_[pr];
    u64 f = r[j];
    for (std::size_t k = j; k < ncols_; ++k)
      if (pv[k]) r[k] = submod(r[k], mulmod(f, pv[k]));
  }
  return false;
}

Rational dot(const IntVec& row, const RatVec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (v[i] != 0 && row[i] != 0) s += Rational(row[i]) * v[i];
  return s;
}

IntVec to_primitive_int(const RatVec& v) {
  Int den = 1, g = 0;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (den / v[i].get_den());
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace polyinv
