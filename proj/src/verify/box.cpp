#include "polyinv/verify/box.hpp"

#include <limits>
#include <stdexcept>

namespace polyinv {

std::vector<Int> magnitude_order(const Int& lo, const Int& hi) {
  std::vector<Int> out;
  if (lo > hi) return out;
  Int start = 0;
  if (lo > 0) start = lo;
  else if (hi < 0) start = hi;
  out.push_back(start);
  if (start == 0) {
    for (Int k = 1; k <= hi || -k >= lo; ++k) {
      if (k <= hi) out.push_back(k);
      if (-k >= lo) out.push_back(-k);
    }
  } else if (start > 0) {
    for (Int v = start + 1; v <= hi; ++v) out.push_back(v);
  } else {
    for (Int v = start - 1; v >= lo; --v) out.push_back(v);
  }
  return out;
}

std::optional<std::uint64_t> box_size(const Program& p) {
  unsigned __int128 n = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  for (const auto& in : p.inputs()) {
    if (!in.bounded()) return std::nullopt;
    Int w = *in.hi - *in.lo + 1;
    if (!fits_int64(w)) return cap;
    n *= static_cast<std::uint64_t>(to_int64(w));
    if (n > cap) return cap;
  }
  return static_cast<std::uint64_t>(n);
}

BoxEnumerator::BoxEnumerator(const Program& p) {
  auto n = box_size(p);
  if (!n) throw std::invalid_argument("exhaustive enumeration needs bounded inputs");
  if (*n == std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument("input box too large to enumerate");
  for (const auto& in : p.inputs()) {
    if (*in.hi - *in.lo >= Int(std::numeric_limits<std::int32_t>::max()))
      throw std::invalid_argument("input range too large to enumerate");
    axes_.push_back(magnitude_order(*in.lo, *in.hi));
  }
  size_ = *n;
}

Input BoxEnumerator::at(std::uint64_t index) const {
  Input in(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    std::uint64_t w = axes_[k].size();
    in[k] = axes_[k][index % w];
    index /= w;
  }
  return in;
}

RandomInputs::RandomInputs(const Program& p, std::uint64_t seed, std::int64_t window)
    : rng_(seed) {
  for (const auto& in : p.inputs()) {
    Int lo, hi;
    if (in.lo && in.hi) {
      lo = *in.lo;
      hi = *in.hi;
    } else if (in.lo) {
      lo = *in.lo;
      hi = *in.lo + window;
    } else if (in.hi) {
      lo = *in.hi - window;
      hi = *in.hi;
    } else {
      lo = -window;
      hi = window;
    }
    ranges_.emplace_back(lo, hi);
  }
}

Input RandomInputs::next() {
  Input in;
  in.reserve(ranges_.size());
  for (const auto& [lo, hi] : ranges_) {
    Int w = hi - lo + 1;
    if (fits_int64(w) && to_int64(w) > 0) {
      std::uniform_int_distribution<std::uint64_t> d(0, static_cast<std::uint64_t>(to_int64(w)) - 1);
      in.push_back(lo + Int(std::to_string(d(rng_))));
    } else {
      // wide range: assemble a uniform value from 64-bit chunks, then reduce
      Int r = 0;
      std::size_t bits = mpz_sizeinbase(w.get_mpz_t(), 2) + 64;
      for (std::size_t b = 0; b < bits; b += 64) {
        r <<= 64;
        r += Int(std::to_string(rng_()));
      }
      in.push_back(lo + mod_trunc(r, w));
    }
  }
  return in;
}

}  // namespace polyinv
