#pragma once

// Coordinate formulas for sigma and tau on the rank-3 group, valid in
// both coefficient modes.  Coordinates follow the 17-tuple numbering:
// x1..x6 are the zpart, x7..x17 the F2 layout positions 0..10.

#include <stdexcept>

#include "element.hpp"
#include "s3.hpp"

namespace triality::rank3 {

namespace detail {

struct View {
  const Element& e;
  const Integer& z(int i) const { return e.z(static_cast<std::size_t>(i - 1)); }
  std::uint8_t o(int i) const { return is_odd(z(i)) ? 1 : 0; }
  std::uint8_t f(int i) const { return e.f(static_cast<std::size_t>(i - 7)); }
};

inline void require_rank3(const Element& x) {
  if (x.n() != 3) throw std::invalid_argument("closed-form automorphisms are defined for n = 3 only");
}

}  // namespace detail

inline Element sigma(const Element& x) {
  detail::require_rank3(x);
  detail::View a{x};
  Element r(x.ctx_ptr());
  auto& z = r.mutable_z();
  auto& f = r.mutable_f();
  auto F = [&](int i) -> std::uint8_t& { return f[static_cast<std::size_t>(i - 7)]; };
  auto o = [&](int i) { return a.o(i); };
  for (int i = 1; i <= 3; ++i) {
    z[static_cast<std::size_t>(i - 1)] = a.z(i + 3);
    z[static_cast<std::size_t>(i + 2)] = a.z(i);
  }
  for (int i = 7; i <= 9; ++i) {
    F(i) = a.f(i + 3);
    F(i + 3) = a.f(i);
  }
  F(13) = a.f(13) ^ (o(1) & o(5)) ^ (o(2) & o(4));
  F(14) = a.f(14) ^ (o(1) & o(6)) ^ (o(3) & o(4));
  F(15) = a.f(15) ^ (o(2) & o(6)) ^ (o(3) & o(5));
  F(16) = a.f(17) ^ (o(1) & o(5) & o(6)) ^ (o(2) & o(4) & o(6)) ^ (o(3) & o(4) & o(5));
  F(17) = a.f(16) ^ (o(1) & o(2) & o(6)) ^ (o(1) & o(3) & o(5)) ^ (o(2) & o(3) & o(4));
  return r;
}

inline Element tau(const Element& x) {
  detail::require_rank3(x);
  detail::View a{x};
  Element r = x;
  auto& z = r.mutable_z();
  auto& f = r.mutable_f();
  auto F = [&](int i) -> std::uint8_t& { return f[static_cast<std::size_t>(i - 7)]; };
  auto o = [&](int i) { return a.o(i); };
  for (int i = 1; i <= 3; ++i) {
    z[static_cast<std::size_t>(i - 1)] = a.z(i) - a.z(i + 3);
    z[static_cast<std::size_t>(i + 2)] = -a.z(i + 3);
  }
  F(7) = a.f(7) ^ a.f(10) ^ a.f(13) ^ (o(2) & o(4));
  F(8) = a.f(8) ^ a.f(11) ^ a.f(14) ^ (o(3) & o(4));
  F(9) = a.f(9) ^ a.f(12) ^ a.f(15) ^ (o(3) & o(5));
  F(13) = a.f(13) ^ (o(4) & o(5));
  F(14) = a.f(14) ^ (o(4) & o(6));
  F(15) = a.f(15) ^ (o(5) & o(6));
  F(16) = a.f(16) ^ a.f(17) ^ (o(4) & o(5) & o(6));
  r.normalize();
  return r;
}

inline Element rho(const Element& x) { return sigma(tau(x)); }

inline Element apply(S3Element g, const Element& x) {
  Element r = g.s() ? sigma(x) : x;
  for (int k = 0; k < g.r(); ++k) r = rho(r);
  return r;
}

}  // namespace triality::rank3
