#include "polyinv/exec/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyinv {

std::size_t hash_values(const std::vector<Int>& v) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& x : v) {
    const mpz_srcptr z = x.get_mpz_t();
    mix(static_cast<std::uint64_t>(z->_mp_size));
    int n = std::abs(z->_mp_size);
    for (int i = 0; i < n; ++i) mix(static_cast<std::uint64_t>(z->_mp_d[i]));
  }
  return static_cast<std::size_t>(h);
}

bool TraceSet::add(std::vector<Int> values, const Input& origin) {
  if (values.size() != vars_.size())
    throw std::invalid_argument("trace arity does not match location variables");
  if (index_.count(values)) return false;
  index_.insert(values);
  rows_.push_back(std::move(values));
  origins_.push_back(origin);
  return true;
}

void TraceSet::merge(const TraceSet& other) {
  if (other.vars_ != vars_) throw std::invalid_argument("merging trace sets over different variables");
  for (std::size_t i = 0; i < other.size(); ++i) add(other.rows_[i], other.origins_[i]);
}

int TraceSet::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

}  // namespace polyinv
