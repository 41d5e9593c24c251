#pragma once

#include <stdexcept>

#include "element.hpp"
#include "embedding.hpp"
#include "g3.hpp"
#include "rank3_auto.hpp"
#include "s3.hpp"

namespace triality {

/// Applies a reduced S3 element.  Rank 3 uses the coordinate formulas;
/// higher ranks act on each rank-3 projection and reassemble.
inline Element apply(S3Element g, const Element& x) {
  if (x.n() == 3) return rank3::apply(g, x);
  return apply_auto_via_embedding(g, x);
}

inline Element apply(const AutoWord& w, const Element& x) { return apply(w.reduce(), x); }

inline Element apply_sigma(const Element& x) { return apply(S3Element::sigma(), x); }
inline Element apply_rho(const Element& x) { return apply(S3Element::rho(), x); }

inline Element apply_tau(const Element& x) {
  if (x.n() != 3) throw std::invalid_argument("tau is only available for n = 3");
  return rank3::tau(x);
}

/// With a = x^-1 x^sigma, checks a * a^rho * a^(rho^2) = e.
inline bool check_triality(const Element& x) {
  const Element a = inverse(x) * apply_sigma(x);
  const Element b = apply_rho(a);
  const Element c = apply_rho(b);
  return (a * b * c).is_identity();
}

namespace g3 {

inline bool check_triality(Code x) {
  const Code a = mul(inv(x), sigma(x));
  const Code b = rho(a);
  const Code c = rho(b);
  return mul(mul(a, b), c) == kIdentity;
}

inline Code apply(S3Element g, Code x) {
  if (g.s()) x = sigma(x);
  for (int k = 0; k < g.r(); ++k) x = rho(x);
  return x;
}

}  // namespace g3

}  // namespace triality
