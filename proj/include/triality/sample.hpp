#pragma once

#include <cstdint>

#include "element.hpp"
#include "rng.hpp"

namespace triality {

/// Uniform element of the finite group, or in infinite mode an element
/// whose zpart entries are uniform in [-zrange, zrange].
inline Element random_element(const CtxPtr& ctx, SplitMix64& g, std::uint64_t zrange = 16) {
  Element x(ctx);
  for (auto& v : x.mutable_z()) {
    if (ctx->finite())
      v = static_cast<unsigned>(g.below(4));
    else
      v = Integer(static_cast<long long>(g.below(2 * zrange + 1))) - Integer(static_cast<long long>(zrange));
  }
  auto& f = x.mutable_f();
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k % 64 == 0) bits = g.next();
    f[k] = static_cast<std::uint8_t>(bits & 1);
    bits >>= 1;
  }
  return x;
}

}  // namespace triality
