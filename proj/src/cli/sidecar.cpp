#include "polyinv/cli/sidecar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polyinv {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Sidecar parse_sidecar(const std::string& text) {
  Sidecar s;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.rfind("option ", 0) == 0) {
      std::istringstream ls(line.substr(7));
      std::string key, value;
      if (!(ls >> key >> value)) throw SidecarError(lineno, "option needs a key and a value");
      s.options.emplace_back(key, value);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw SidecarError(lineno, "expected 'LOC: invariant'");
    std::string head = trim(line.substr(0, colon));
    std::string body = trim(line.substr(colon + 1));
    try {
      if (head == "bounds") {
        s.has_bounds = true;
        std::istringstream bs(body);
        std::string part;
        while (std::getline(bs, part, ';'))
          if (!trim(part).empty()) s.bounds.push_back(parse_polynomial(trim(part)));
        continue;
      }
      Expectation e;
      e.loc = LocationId(head);
      e.text = body;
      e.line = lineno;
      if (body.find("==") != std::string::npos) {
        e.pred = Equality::parse(body);
      } else {
        auto oc = OctConstraint::parse(body);
        if (!oc) throw SidecarError(lineno, "not an equality or octagonal inequality: " + body);
        e.pred = *oc;
      }
      s.expectations.push_back(std::move(e));
    } catch (const std::invalid_argument& ex) {
      throw SidecarError(lineno, ex.what());
    }
  }
  return s;
}

Sidecar load_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sidecar(ss.str());
}

std::vector<ExpectationOutcome> check_expectations(const Sidecar& s, const Report& r) {
  std::vector<ExpectationOutcome> out;
  for (const auto& e : s.expectations) {
    ExpectationOutcome o;
    o.text = e.loc.label + ": " + e.text;
    auto it = std::find_if(r.locations.begin(), r.locations.end(),
                           [&](const LocationReport& l) { return l.loc == e.loc; });
    if (it != r.locations.end()) {
      try {
        if (const auto* eq = std::get_if<Equality>(&e.pred)) {
          Equality cand = eq->embed(it->vars);
          int d = cand.degree();
          for (const auto& x : it->equalities) d = std::max(d, x.degree());
          o.ok = is_implied_eq(it->equalities, cand, d);
        } else {
          const auto& oc = std::get<OctConstraint>(e.pred);
          o.ok = is_implied_oct({it->equalities, it->octagons}, oc);
        }
      } catch (const std::invalid_argument&) {
        o.ok = false;
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

bool check_bounds(const Sidecar& s, const ComplexityReport& r) {
  if (!s.has_bounds) return true;
  if (!r.relation || !r.bounds.identity_holds) return false;
  const auto& got = r.bounds.bounds;
  if (got.size() != s.bounds.size()) return false;
  for (const auto& want : s.bounds) {
    bool found = false;
    for (const auto& g : got) found = found || (g - want).is_zero();
    if (!found) return false;
  }
  return true;
}

}  // namespace polyinv
