#include "polyinv/cli/config.hpp"

#include <sstream>
#include <stdexcept>

namespace polyinv {

void Config::validate() const {
  if (alpha < 2) throw std::invalid_argument("--alpha must be at least 2");
  if (degree && *degree < 1) throw std::invalid_argument("--degree must be positive");
  if (oct_range < 1) throw std::invalid_argument("--oct-range must be positive");
  if (budget && *budget == 0) throw std::invalid_argument("--budget must be positive");
  if (jobs == 0) throw std::invalid_argument("--jobs must be positive");
  if (max_cex == 0) throw std::invalid_argument("max-cex must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max-iterations must be positive");
}

VerifyBudget Config::verify_budget() const {
  VerifyBudget b;
  b.mode = mode;
  if (budget) {
    b.max_inputs = *budget;
    b.samples = *budget;
  }
  b.seed = seed;
  b.max_cex = max_cex;
  return b;
}

RunOptions Config::run_options() const {
  RunOptions r;
  r.wrap64 = wrap64;
  r.seed = seed;
  return r;
}

EqInferConfig Config::eq_config() const {
  EqInferConfig c;
  c.alpha = alpha;
  c.degree = degree;
  c.max_iterations = max_iterations;
  return c;
}

OctInferConfig Config::oct_config() const {
  OctInferConfig c;
  c.min_value = -oct_range;
  c.max_value = oct_range;
  return c;
}

VerifyMode parse_mode(const std::string& s) {
  if (s == "auto") return VerifyMode::Auto;
  if (s == "exhaustive") return VerifyMode::Exhaustive;
  if (s == "random") return VerifyMode::Random;
  throw std::invalid_argument("unknown verifier mode '" + s + "'");
}

namespace {

template <typename T>
T number(const std::string& key, const std::string& v) {
  std::istringstream is(v);
  T x{};
  if (!(is >> x) || !is.eof()) throw std::invalid_argument("option " + key + ": bad value '" + v + "'");
  return x;
}

}  // namespace

void Config::set_option(const std::string& key, const std::string& value) {
  if (key == "alpha") alpha = number<std::uint64_t>(key, value);
  else if (key == "degree") degree = number<int>(key, value);
  else if (key == "oct-range") oct_range = number<std::int64_t>(key, value);
  else if (key == "mode") mode = parse_mode(value);
  else if (key == "budget") budget = number<std::uint64_t>(key, value);
  else if (key == "seed") seed = number<std::uint64_t>(key, value);
  else if (key == "max-cex") max_cex = number<std::size_t>(key, value);
  else if (key == "max-iterations") max_iterations = number<int>(key, value);
  else if (key == "wrap64") wrap64 = value == "true" || value == "1" || value == "on";
  else throw std::invalid_argument("unknown option '" + key + "'");
  validate();
}

}  // namespace polyinv
