#pragma once

#include "polyinv/algebra/eq_system.hpp"
#include "polyinv/invariant/equality.hpp"
#include "polyinv/verify/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinv {

/// Largest d >= 1 with C(nvars + d, d) <= alpha (1 if even d = 1 exceeds alpha).
int auto_degree(std::size_t nvars, std::uint64_t alpha);

/// All monomials over `vars` up to degree d in ascending grlex order, constant first.
std::vector<Monomial> create_terms(const std::vector<std::string>& vars, int d);

/// Nullspace basis of the instantiated rows.
std::vector<RatVec> solve(const std::vector<IntVec>& rows, std::size_t ncols);

/// Canonical equalities from basis vectors; zero vectors are skipped.
std::vector<Equality> extract_eqts(const std::vector<RatVec>& basis,
                                   const std::vector<std::string>& vars,
                                   const std::vector<Monomial>& terms);

/// Canonical reduced basis of the span of `eqs` over `terms`: one element per leading
/// term, each free of the other elements' leading terms. Sorted by leading term.
std::vector<Equality> reduced_basis(const std::vector<Equality>& eqs,
                                    const std::vector<std::string>& vars,
                                    const std::vector<Monomial>& terms);

struct EqInferConfig {
  std::uint64_t alpha = 200;
  std::optional<int> degree;
  int max_iterations = 50;
  /// Infer over this subset of the location's variables only.
  std::optional<std::vector<std::string>> vars;
  /// Lower the degree when an exhaustive sweep yields too few traces.
  bool allow_degree_fallback = true;
};

enum class EqStatus { Ok, Unreachable, NotEnoughTraces };

const char* to_string(EqStatus s);

struct EqInferResult {
  EqStatus status = EqStatus::Ok;
  std::vector<Equality> equalities;
  std::vector<std::string> vars;
  int degree = 0;
  std::size_t term_count = 0;
  /// Distinct traces that instantiated the template.
  TraceSet traces;
  InputSet inputs;
  std::size_t first_solve_candidates = 0;
  int iterations = 0;
  std::size_t cex_inputs = 0;
  bool degree_reduced = false;
  bool accepted_on_box = false;
};

/// Counterexample-guided equality inference at `loc`.
EqInferResult infer_equalities(const Program& p, const LocationId& loc, CexOracle& oracle,
                               const EqInferConfig& cfg = {});

}  // namespace polyinv
