#include "polyinv/invariant/equality.hpp"

#include <stdexcept>

namespace polyinv {

Equality Equality::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial is not an equality");
  return Equality(p.primitive());
}

Equality Equality::from_vector(const std::vector<std::string>& vars,
                               const std::vector<Monomial>& terms, const RatVec& coeffs) {
  if (coeffs.size() != terms.size()) throw std::invalid_argument("coefficient count mismatch");
  Polynomial p(vars);
  for (std::size_t i = 0; i < terms.size(); ++i) p.add_term(terms[i], coeffs[i]);
  return from_polynomial(p);
}

Equality Equality::parse(const std::string& text, const std::vector<std::string>& vars) {
  auto pos = text.find("==");
  if (pos == std::string::npos) return from_polynomial(parse_polynomial(text, vars));
  Polynomial l = parse_polynomial(text.substr(0, pos), vars);
  Polynomial r = parse_polynomial(text.substr(pos + 2), vars);
  return from_polynomial(l - r);
}

Equality Equality::embed(const std::vector<std::string>& vars) const {
  return Equality(poly_.embed(vars));
}

std::string Equality::to_string() const {
  Polynomial lhs(poly_.vars()), rhs(poly_.vars());
  for (const auto& [m, c] : poly_.terms()) {
    if (c > 0) lhs.add_term(m, c);
    else rhs.add_term(m, -c);
  }
  return lhs.to_string() + " == " + rhs.to_string();
}

bool Equality::operator<(const Equality& o) const {
  if (poly_.vars() != o.poly_.vars()) return poly_.vars() < o.poly_.vars();
  const auto& a = poly_.terms();
  const auto& b = o.poly_.terms();
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return grlex_less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.rend() && ib != b.rend();
}

}  // namespace polyinv
