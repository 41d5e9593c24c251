#pragma once

// Packed arithmetic for the finite rank-3 group.  An element is one
// 23-bit word: bits 2k..2k+1 hold the exponent of a1,a2,a3,b1,b2,b3
// (k = 0..5) and bit 12+l holds coordinate 7+l of the 17-tuple
// (u12 u13 u23 v12 v13 v23 p12 p13 p23 z123 t123).  The word is the
// same integer as the element's dump record.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "element.hpp"

namespace triality::g3 {

using Code = std::uint32_t;

inline constexpr unsigned kBits = 23;
inline constexpr Code kOrder = Code{1} << kBits;
inline constexpr Code kIdentity = 0;

/// Coordinates x[1..17]; x[1..6] are residues mod 4, the rest bits.
struct Coords {
  std::array<std::uint32_t, 18> x{};
  std::uint32_t operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
  std::uint32_t& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
  /// parity of coordinate i
  std::uint32_t o(int i) const { return x[static_cast<std::size_t>(i)] & 1u; }
};

inline Coords unpack(Code c) {
  Coords r;
  for (int k = 0; k < 6; ++k) r[k + 1] = (c >> (2 * k)) & 3u;
  for (int l = 0; l < 11; ++l) r[l + 7] = (c >> (12 + l)) & 1u;
  return r;
}

inline Code pack(const Coords& r) {
  Code c = 0;
  for (int k = 0; k < 6; ++k) c |= (r[k + 1] & 3u) << (2 * k);
  for (int l = 0; l < 11; ++l) c |= (r[l + 7] & 1u) << (12 + l);
  return c;
}

inline Code mul(Code ca, Code cb) {
  const Coords a = unpack(ca), b = unpack(cb);
  Coords g;
  for (int i = 1; i <= 6; ++i) g[i] = (a[i] + b[i]) & 3u;
  for (int i = 7; i <= 17; ++i) g[i] = a[i] ^ b[i];
  const auto A = [&](int i) { return a.o(i); };
  const auto B = [&](int i) { return b.o(i); };
  g[7] ^= A(2) & B(1);
  g[8] ^= A(3) & B(1);
  g[9] ^= A(3) & B(2);
  g[10] ^= A(5) & B(4);
  g[11] ^= A(6) & B(4);
  g[12] ^= A(6) & B(5);
  g[13] ^= (A(4) & B(2)) ^ (A(5) & B(1));
  g[14] ^= (A(4) & B(3)) ^ (A(6) & B(1));
  g[15] ^= (A(5) & B(3)) ^ (A(6) & B(2));
  g[16] ^= (a[13] & B(3)) ^ (a[14] & B(2)) ^ (a[15] & B(1)) ^ (A(4) & B(2) & B(3)) ^
           (A(5) & B(1) & B(3)) ^ (A(6) & B(1) & B(2));
  g[17] ^= (a[13] & B(6)) ^ (a[14] & B(5)) ^ (a[15] & B(4)) ^ (A(4) & A(5) & B(3)) ^
           (A(4) & A(6) & B(2)) ^ (A(5) & A(6) & B(1)) ^ (A(4) & ((B(2) & B(6)) ^ (B(5) & B(3)))) ^
           (A(5) & ((B(1) & B(6)) ^ (B(4) & B(3)))) ^ (A(6) & ((B(1) & B(5)) ^ (B(4) & B(2))));
  return pack(g);
}

/// The printed closed form of the inverse.
inline Code inv(Code ca) {
  const Coords a = unpack(ca);
  const auto o = [&](int i) { return a.o(i); };
  Coords b;
  for (int i = 1; i <= 6; ++i) b[i] = (4u - a[i]) & 3u;
  b[7] = a[7] ^ (o(1) & o(2));
  b[8] = a[8] ^ (o(1) & o(3));
  b[9] = a[9] ^ (o(2) & o(3));
  b[10] = a[10] ^ (o(4) & o(5));
  b[11] = a[11] ^ (o(4) & o(6));
  b[12] = a[12] ^ (o(5) & o(6));
  b[13] = a[13] ^ (o(4) & o(2)) ^ (o(5) & o(1));
  b[14] = a[14] ^ (o(4) & o(3)) ^ (o(6) & o(1));
  b[15] = a[15] ^ (o(5) & o(3)) ^ (o(6) & o(2));
  b[16] = a[16] ^ (a[13] & o(3)) ^ (a[14] & o(2)) ^ (a[15] & o(1)) ^ (o(4) & o(2) & o(3)) ^
          (o(5) & o(1) & o(3)) ^ (o(6) & o(1) & o(2));
  b[17] = a[17] ^ (a[13] & o(6)) ^ (a[14] & o(5)) ^ (a[15] & o(4)) ^ (o(4) & o(5) & o(3)) ^
          (o(4) & o(6) & o(2)) ^ (o(5) & o(6) & o(1)) ^ (o(4) & ((o(2) & o(6)) ^ (o(5) & o(3)))) ^
          (o(5) & ((o(1) & o(6)) ^ (o(4) & o(3)))) ^ (o(6) & ((o(1) & o(5)) ^ (o(4) & o(2))));
  return pack(b);
}

inline Code sigma(Code ca) {
  const Coords a = unpack(ca);
  const auto o = [&](int i) { return a.o(i); };
  Coords s;
  for (int i = 1; i <= 3; ++i) {
    s[i] = a[i + 3];
    s[i + 3] = a[i];
  }
  for (int i = 7; i <= 9; ++i) {
    s[i] = a[i + 3];
    s[i + 3] = a[i];
  }
  s[13] = a[13] ^ (o(1) & o(5)) ^ (o(2) & o(4));
  s[14] = a[14] ^ (o(1) & o(6)) ^ (o(3) & o(4));
  s[15] = a[15] ^ (o(2) & o(6)) ^ (o(3) & o(5));
  s[16] = a[17] ^ (o(1) & o(5) & o(6)) ^ (o(2) & o(4) & o(6)) ^ (o(3) & o(4) & o(5));
  s[17] = a[16] ^ (o(1) & o(2) & o(6)) ^ (o(1) & o(3) & o(5)) ^ (o(2) & o(3) & o(4));
  return pack(s);
}

inline Code tau(Code ca) {
  const Coords a = unpack(ca);
  const auto o = [&](int i) { return a.o(i); };
  Coords t = a;
  for (int i = 1; i <= 3; ++i) {
    t[i] = (a[i] - a[i + 3]) & 3u;
    t[i + 3] = (4u - a[i + 3]) & 3u;
  }
  t[7] = a[7] ^ a[10] ^ a[13] ^ (o(2) & o(4));
  t[8] = a[8] ^ a[11] ^ a[14] ^ (o(3) & o(4));
  t[9] = a[9] ^ a[12] ^ a[15] ^ (o(3) & o(5));
  t[13] = a[13] ^ (o(4) & o(5));
  t[14] = a[14] ^ (o(4) & o(6));
  t[15] = a[15] ^ (o(5) & o(6));
  t[16] = a[16] ^ a[17] ^ (o(4) & o(5) & o(6));
  return pack(t);
}

/// rho = sigma o tau: tau is applied first.
inline Code rho(Code c) { return sigma(tau(c)); }

inline Code from_element(const Element& x) {
  if (x.n() != 3 || !x.ctx().finite())
    throw std::invalid_argument("packed form needs a rank-3 element in the z4 mode");
  Code c = 0;
  for (std::size_t k = 0; k < 6; ++k) c |= static_cast<Code>(x.z(k)) << (2 * k);
  for (std::size_t l = 0; l < 11; ++l) c |= static_cast<Code>(x.f(l)) << (12 + l);
  return c;
}

inline Element to_element(Code c) {
  const CtxPtr& ctx = g3_ctx(Mode::FiniteZ4);
  Element e(ctx);
  for (std::size_t k = 0; k < 6; ++k) e.mutable_z()[k] = (c >> (2 * k)) & 3u;
  for (std::size_t l = 0; l < 11; ++l) e.mutable_f()[l] = static_cast<std::uint8_t>((c >> (12 + l)) & 1u);
  return e;
}

}  // namespace triality::g3
