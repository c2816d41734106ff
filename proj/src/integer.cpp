#include "polyinv/integer.hpp"

#include <stdexcept>

namespace polyinv {

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

void wrap_to_int64(Int& v) {
  static const Int two64 = Int(1) << 64;
  static const Int two63 = Int(1) << 63;
  if (fits_int64(v)) return;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), two64.get_mpz_t());
  if (r >= two63) r -= two64;
  v = r;
}

bool fits_int64(const Int& v) {
  static const Int lo = -(Int(1) << 63);
  static const Int hi = (Int(1) << 63) - 1;
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) throw std::out_of_range("integer does not fit in 64 bits: " + to_string(v));
  // mpz_get_si is exact on LP64 targets.
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

Int div_trunc(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_trunc(const Int& a, const Int& b) {
  Int r;
  mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int ceil_half(const Int& a) {
  Int q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), 2);
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace polyinv
