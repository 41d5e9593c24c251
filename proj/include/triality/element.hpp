#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "group_ctx.hpp"

namespace triality {

using Integer = boost::multiprecision::cpp_int;

inline bool is_odd(const Integer& v) { return boost::multiprecision::bit_test(v, 0); }

inline void reduce_mod4(Integer& v) {
  v %= 4;
  if (v < 0) v += 4;
}

/// An element of the group in normal form: 2n integer exponents for
/// a_1..a_n, b_1..b_n followed by m bits in the layout of GroupCtx.
class Element {
 public:
  Element() = default;

  explicit Element(CtxPtr ctx)
      : ctx_(std::move(ctx)), z_(ctx_->zsize()), f_(ctx_->m(), 0) {}

  Element(CtxPtr ctx, std::vector<Integer> z, std::vector<std::uint8_t> f)
      : ctx_(std::move(ctx)), z_(std::move(z)), f_(std::move(f)) {
    if (z_.size() != ctx_->zsize())
      throw std::invalid_argument("zpart must have " + std::to_string(ctx_->zsize()) + " entries");
    if (f_.size() != ctx_->m())
      throw std::invalid_argument("fpart must have " + std::to_string(ctx_->m()) + " bits");
    for (auto& b : f_) {
      if (b > 1) throw std::invalid_argument("fpart entries must be 0 or 1");
    }
    normalize();
  }

  const GroupCtx& ctx() const { return *ctx_; }
  const CtxPtr& ctx_ptr() const { return ctx_; }
  int n() const { return ctx_->n(); }

  std::span<const Integer> zpart() const { return z_; }
  std::span<const std::uint8_t> fpart() const { return f_; }
  const Integer& z(std::size_t k) const { return z_[k]; }
  std::uint8_t f(std::size_t k) const { return f_[k]; }

  /// Value of a symbol's coordinate, 1-based indices.
  Integer coord(Gen g, const std::vector<int>& idx) const {
    std::size_t pos = ctx_->position(g, idx);
    if (g == Gen::a || g == Gen::b) return z_[pos];
    return Integer(f_[pos]);
  }

  bool is_identity() const {
    for (auto& v : z_)
      if (v != 0) return false;
    for (auto b : f_)
      if (b) return false;
    return true;
  }

  /// Parities of the zpart entries.
  std::vector<std::uint8_t> parities() const {
    std::vector<std::uint8_t> out(z_.size());
    for (std::size_t k = 0; k < z_.size(); ++k) out[k] = is_odd(z_[k]) ? 1 : 0;
    return out;
  }

  friend bool operator==(const Element& x, const Element& y) {
    return x.ctx_->same_as(*y.ctx_) && x.z_ == y.z_ && x.f_ == y.f_;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

  /// Normal-form word such as "a1^3 b2 u12 p13"; "e" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << ' ';
      first = false;
    };
    const int n = ctx_->n();
    for (std::size_t k = 0; k < z_.size(); ++k) {
      if (z_[k] == 0) continue;
      sep();
      os << (k < static_cast<std::size_t>(n) ? 'a' : 'b') << (k % n) + 1;
      if (z_[k] != 1) os << '^' << z_[k];
    }
    for (std::size_t k = 0; k < f_.size(); ++k) {
      if (!f_[k]) continue;
      sep();
      os << ctx_->fsymbol(k);
    }
    if (first) os << 'e';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

  // Mutable access for the algorithms in this library.
  std::vector<Integer>& mutable_z() { return z_; }
  std::vector<std::uint8_t>& mutable_f() { return f_; }

  void normalize() {
    if (ctx_->finite())
      for (auto& v : z_) reduce_mod4(v);
  }

 private:
  CtxPtr ctx_;
  std::vector<Integer> z_;
  std::vector<std::uint8_t> f_;
};

inline Element identity(const CtxPtr& ctx) { return Element(ctx); }

inline Element generator(const CtxPtr& ctx, Gen g, const std::vector<int>& idx) {
  Element e(ctx);
  std::size_t pos = ctx->position(g, idx);
  if (g == Gen::a || g == Gen::b)
    e.mutable_z()[pos] = 1;
  else
    e.mutable_f()[pos] = 1;
  return e;
}

inline void require_same_ctx(const Element& x, const Element& y) {
  if (!x.ctx().same_as(y.ctx()))
    throw std::invalid_argument("elements belong to different groups");
}

namespace detail {

// XORs the correction term of the product x*y into out.  A and B are the
// zpart parities of x and y; pa is the p-block of x.  Nothing else of
// either factor enters the correction.
inline void add_correction(const GroupCtx& ctx, const std::uint8_t* A, const std::uint8_t* B,
                           const std::uint8_t* pa, std::uint8_t* out) {
  const int n = ctx.n();
  const std::size_t vo = ctx.v_offset(), po = ctx.p_offset();
  std::size_t r = 0;
  for (const auto& [i, j] : ctx.pairs()) {
    out[r] ^= A[j] & B[i];
    out[vo + r] ^= A[j + n] & B[i + n];
    out[po + r] ^= (A[i + n] & B[j]) ^ (A[j + n] & B[i]);
    ++r;
  }
  const std::size_t zo = ctx.z_offset(), to = ctx.t_offset();
  std::size_t q = 0;
  for (const auto& [i, j, k] : ctx.triples()) {
    const std::uint8_t pij = pa[ctx.pair_rank(i, j)];
    const std::uint8_t pik = pa[ctx.pair_rank(i, k)];
    const std::uint8_t pjk = pa[ctx.pair_rank(j, k)];
    const std::uint8_t ai = A[i + n], aj = A[j + n], ak = A[k + n];
    const std::uint8_t bi = B[i], bj = B[j], bk = B[k];
    const std::uint8_t ci = B[i + n], cj = B[j + n], ck = B[k + n];
    out[zo + q] ^= (pij & bk) ^ (pik & bj) ^ (pjk & bi) ^ (ai & bj & bk) ^ (aj & bi & bk) ^
                   (ak & bi & bj);
    out[to + q] ^= (pij & ck) ^ (pik & cj) ^ (pjk & ci) ^ (ai & aj & bk) ^ (ai & ak & bj) ^
                   (aj & ak & bi) ^ (ai & ((bj & ck) ^ (cj & bk))) ^
                   (aj & ((bi & ck) ^ (ci & bk))) ^ (ak & ((bi & cj) ^ (ci & bj)));
    ++q;
  }
}

}  // namespace detail

inline Element multiply(const Element& x, const Element& y) {
  require_same_ctx(x, y);
  const GroupCtx& ctx = x.ctx();
  Element r(x.ctx_ptr());
  auto& rz = r.mutable_z();
  for (std::size_t k = 0; k < rz.size(); ++k) rz[k] = x.z(k) + y.z(k);
  auto& rf = r.mutable_f();
  for (std::size_t k = 0; k < rf.size(); ++k) rf[k] = x.f(k) ^ y.f(k);
  const auto A = x.parities();
  const auto B = y.parities();
  detail::add_correction(ctx, A.data(), B.data(), x.fpart().data() + ctx.p_offset(), rf.data());
  r.normalize();
  return r;
}

inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

/// Inverse by the triangular solve of x*y = e.  The zpart of y is -zpart(x);
/// since the correction of x*y only reads zparts and the p-block of x, every
/// bit of y follows from a single correction evaluation.
inline Element inverse(const Element& x) {
  const GroupCtx& ctx = x.ctx();
  Element r(x.ctx_ptr());
  auto& rz = r.mutable_z();
  for (std::size_t k = 0; k < rz.size(); ++k) rz[k] = -x.z(k);
  r.normalize();
  auto& rf = r.mutable_f();
  for (std::size_t k = 0; k < rf.size(); ++k) rf[k] = x.f(k);
  const auto A = x.parities();
  detail::add_correction(ctx, A.data(), A.data(), x.fpart().data() + ctx.p_offset(), rf.data());
  return r;
}

inline Element power(const Element& x, Integer k) {
  Element base = k < 0 ? inverse(x) : x;
  if (k < 0) k = -k;
  Element acc(x.ctx_ptr());
  while (k > 0) {
    if (is_odd(k)) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

inline Element power(const Element& x, long long k) { return power(x, Integer(k)); }

/// [x, y] = x^-1 y^-1 x y
inline Element commutator(const Element& x, const Element& y) {
  require_same_ctx(x, y);
  return inverse(x) * inverse(y) * x * y;
}

/// x^g = g^-1 x g
inline Element conjugate(const Element& x, const Element& g) {
  require_same_ctx(x, g);
  return inverse(g) * x * g;
}

inline bool is_central(const Element& x) {
  const CtxPtr& ctx = x.ctx_ptr();
  for (int i = 1; i <= ctx->n(); ++i) {
    if (!commutator(x, generator(ctx, Gen::a, {i})).is_identity()) return false;
    if (!commutator(x, generator(ctx, Gen::b, {i})).is_identity()) return false;
  }
  return true;
}

}  // namespace triality
