#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "rank3_auto.hpp"
#include "s3.hpp"

namespace triality {

/// 1-based index triple (i, j, k) with i < j < k.
using IndexTriple = std::array<int, 3>;

inline std::string triple_key(const IndexTriple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

class TripleSet {
 public:
  explicit TripleSet(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) triples_.push_back({i, j, k});
  }
  int n() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  const std::vector<IndexTriple>& triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  bool contains(const IndexTriple& t) const {
    return t[0] >= 1 && t[0] < t[1] && t[1] < t[2] && t[2] <= n_;
  }

 private:
  int n_;
  std::vector<IndexTriple> triples_;
};

/// Image of an element in the product of rank-3 groups, one factor per
/// triple.  Identity components are not stored.
class ProductElement {
 public:
  explicit ProductElement(CtxPtr ambient) : ctx_(std::move(ambient)) {}

  const CtxPtr& ambient() const { return ctx_; }
  int n() const { return ctx_->n(); }

  Element component(const IndexTriple& t) const {
    auto it = comps_.find(t);
    return it == comps_.end() ? identity(g3_ctx(ctx_->mode())) : it->second;
  }

  void set(const IndexTriple& t, Element e) {
    if (!TripleSet(ctx_->n()).contains(t)) throw std::out_of_range("triple " + triple_key(t) + " is not in T");
    if (e.n() != 3 || e.ctx().mode() != ctx_->mode())
      throw std::invalid_argument("component must be a rank-3 element in the same mode");
    if (e.is_identity())
      comps_.erase(t);
    else
      comps_.insert_or_assign(t, std::move(e));
  }

  /// Non-identity components, keyed by triple in lexicographic order.
  const std::map<IndexTriple, Element>& stored() const { return comps_; }
  bool is_identity() const { return comps_.empty(); }

  friend bool operator==(const ProductElement& x, const ProductElement& y) {
    return x.ctx_->same_as(*y.ctx_) && x.comps_ == y.comps_;
  }

 private:
  CtxPtr ctx_;
  std::map<IndexTriple, Element> comps_;
};

namespace detail {

inline void check_triple(const GroupCtx& ctx, const IndexTriple& t) {
  if (!(t[0] >= 1 && t[0] < t[1] && t[1] < t[2] && t[2] <= ctx.n()))
    throw std::out_of_range("(" + triple_key(t) + ") is not a triple of 1.." + std::to_string(ctx.n()));
}

// For each coordinate of the rank-3 factor at triple t, the position of
// the matching coordinate of the ambient group: zpart first, then layout.
struct ProjectionMap {
  std::array<std::size_t, 6> z;
  std::array<std::size_t, 11> f;
};

inline ProjectionMap projection_map(const GroupCtx& ctx, const IndexTriple& t) {
  const int n = ctx.n();
  ProjectionMap pm{};
  for (int l = 0; l < 3; ++l) {
    pm.z[static_cast<std::size_t>(l)] = static_cast<std::size_t>(t[static_cast<std::size_t>(l)] - 1);
    pm.z[static_cast<std::size_t>(l + 3)] = static_cast<std::size_t>(n + t[static_cast<std::size_t>(l)] - 1);
  }
  const int i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
  const std::array<std::size_t, 3> pr = {ctx.pair_rank(i, j), ctx.pair_rank(i, k), ctx.pair_rank(j, k)};
  for (std::size_t q = 0; q < 3; ++q) {
    pm.f[q] = ctx.u_offset() + pr[q];
    pm.f[3 + q] = ctx.v_offset() + pr[q];
    pm.f[6 + q] = ctx.p_offset() + pr[q];
  }
  pm.f[9] = ctx.z_offset() + ctx.triple_rank(i, j, k);
  pm.f[10] = ctx.t_offset() + ctx.triple_rank(i, j, k);
  return pm;
}

}  // namespace detail

/// Keeps the coordinates whose indices lie inside t, relabelled to 1,2,3.
inline Element project(const Element& x, const IndexTriple& t) {
  const GroupCtx& ctx = x.ctx();
  detail::check_triple(ctx, t);
  const auto pm = detail::projection_map(ctx, t);
  Element r(g3_ctx(ctx.mode()));
  for (std::size_t q = 0; q < 6; ++q) r.mutable_z()[q] = x.z(pm.z[q]);
  for (std::size_t q = 0; q < 11; ++q) r.mutable_f()[q] = x.f(pm.f[q]);
  return r;
}

inline ProductElement embed(const Element& x) {
  ProductElement P(x.ctx_ptr());
  for (const auto& t : TripleSet(x.n())) P.set(t, project(x, t));
  return P;
}

/// Reads every coordinate from the lexicographically smallest triple that
/// contains its indices, then checks that all components agree with the
/// result.  Throws std::domain_error if P is not in the image of embed.
inline Element reconstruct(const ProductElement& P) {
  const CtxPtr& ctx = P.ambient();
  const TripleSet T(ctx->n());
  Element x(ctx);
  std::vector<bool> zdone(ctx->zsize(), false), fdone(ctx->m(), false);
  for (const auto& t : T) {
    const auto pm = detail::projection_map(*ctx, t);
    const Element c = P.component(t);
    for (std::size_t q = 0; q < 6; ++q)
      if (!zdone[pm.z[q]]) {
        x.mutable_z()[pm.z[q]] = c.z(q);
        zdone[pm.z[q]] = true;
      }
    for (std::size_t q = 0; q < 11; ++q)
      if (!fdone[pm.f[q]]) {
        x.mutable_f()[pm.f[q]] = c.f(q);
        fdone[pm.f[q]] = true;
      }
  }
  for (const auto& t : T)
    if (project(x, t) != P.component(t))
      throw std::domain_error("components disagree at triple (" + triple_key(t) +
                              "); the product element is not in the image");
  return x;
}

inline ProductElement operator*(const ProductElement& x, const ProductElement& y) {
  if (!x.ambient()->same_as(*y.ambient())) throw std::invalid_argument("product elements of different groups");
  ProductElement r(x.ambient());
  for (const auto& t : TripleSet(x.n())) r.set(t, x.component(t) * y.component(t));
  return r;
}

inline ProductElement inverse(const ProductElement& x) {
  ProductElement r(x.ambient());
  for (const auto& [t, c] : x.stored()) r.set(t, inverse(c));
  return r;
}

inline ProductElement commutator(const ProductElement& x, const ProductElement& y) {
  return inverse(x) * inverse(y) * x * y;
}

inline ProductElement apply_componentwise(S3Element g, const ProductElement& P) {
  ProductElement r(P.ambient());
  for (const auto& [t, c] : P.stored()) r.set(t, rank3::apply(g, c));
  return r;
}

inline Element apply_auto_via_embedding(S3Element g, const Element& x) {
  return reconstruct(apply_componentwise(g, embed(x)));
}

inline Element apply_auto_via_embedding(const AutoWord& w, const Element& x) {
  return apply_auto_via_embedding(w.reduce(), x);
}

}  // namespace triality
