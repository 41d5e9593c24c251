#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "embedding.hpp"
#include "f2.hpp"
#include "loop.hpp"
#include "m_loop.hpp"

namespace triality {

/// Facts established while building the realization of the free loop of
/// rank n inside the product of copies of M indexed by triples.
struct ClosureAudit {
  std::uint64_t orbit_size = 0;
  /// elements all of whose components are central in M
  std::uint64_t central_part = 0;
  bool central_part_is_subgroup = false;
  std::uint64_t coset_count = 0;
  bool cosets_cover_orbit = false;
  bool rep_products_in_orbit = false;
  /// for each triple, whether every element of M occurs as that component
  std::vector<bool> projection_onto;

  /// The orbit is closed under multiplication, hence a subloop.
  bool closed() const { return central_part_is_subgroup && cosets_cover_orbit && rep_products_in_orbit; }
  bool projections_onto() const {
    return std::all_of(projection_onto.begin(), projection_onto.end(), [](bool b) { return b; });
  }
};

/// The subloop of the product of |T| copies of M generated by the tuples
/// g_i whose component at triple t is x_(position of i in t) if i is in t
/// and the identity otherwise.  Elements are indexed in ascending order of
/// their tuple key (component at the k-th triple in bits 10k..10k+9).
class EmbeddedFreeLoop {
 public:
  static constexpr std::size_t kMaxComponents = 6;
  static constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 22;

  EmbeddedFreeLoop(const MLoop& m, int n) : m_(&m), triples_(n) {
    if (m.table.size() > 1024) throw std::invalid_argument("component loop must have at most 1024 elements");
    if (triples_.size() > kMaxComponents)
      throw std::length_error("embedded free loop supports n <= 4 (at most 6 triples)");
    build();
    audit_closure();
  }

  std::size_t size() const { return keys_.size(); }
  int n() const { return triples_.n(); }
  const TripleSet& triples() const { return triples_; }
  const MLoop& component_loop() const { return *m_; }

  std::size_t component(std::size_t i, std::size_t t) const { return comp(keys_[i], t); }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return index_of(combine(keys_[a], keys_[b], [&](std::size_t x, std::size_t y) { return m_->table.mul(x, y); }));
  }
  std::size_t ldiv(std::size_t a, std::size_t c) const {
    return index_of(combine(keys_[a], keys_[c], [&](std::size_t x, std::size_t y) { return m_->table.ldiv(x, y); }));
  }

  /// indices of the generator tuples g_1..g_n
  const std::vector<std::size_t>& generators() const { return gens_; }
  const ClosureAudit& audit() const { return audit_; }

  /// True when every component of element i is central in M.
  bool componentwise_central(std::size_t i) const {
    for (std::size_t t = 0; t < triples_.size(); ++t)
      if (!m_central_[component(i, t)]) return false;
    return true;
  }

  std::size_t index_of(std::uint64_t k) const {
    auto it = index_.find(k);
    if (it == index_.end()) throw std::logic_error("tuple lies outside the generated subloop");
    return it->second;
  }

 private:
  static std::size_t comp(std::uint64_t k, std::size_t t) { return static_cast<std::size_t>((k >> (10 * t)) & 1023u); }

  template <class Op>
  std::uint64_t combine(std::uint64_t a, std::uint64_t b, Op op) const {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < triples_.size(); ++t)
      r |= static_cast<std::uint64_t>(op(comp(a, t), comp(b, t))) << (10 * t);
    return r;
  }

  std::uint64_t mul_keys(std::uint64_t a, std::uint64_t b) const {
    return combine(a, b, [&](std::size_t x, std::size_t y) { return m_->table.mul(x, y); });
  }

  void build() {
    std::vector<std::uint64_t> gkeys;
    for (int i = 1; i <= triples_.n(); ++i) {
      std::uint64_t k = 0;
      for (std::size_t t = 0; t < triples_.size(); ++t) {
        const auto& tr = triples_.triples()[t];
        for (std::size_t pos = 0; pos < 3; ++pos)
          if (tr[pos] == i) k |= static_cast<std::uint64_t>(m_->x[pos]) << (10 * t);
      }
      gkeys.push_back(k);
    }
    // orbit of the identity under left and right translations by the g_i
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::vector<std::uint64_t> order{0};
    seen.emplace(0, 0);
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (auto g : gkeys) {
        for (auto y : {mul_keys(order[q], g), mul_keys(g, order[q])}) {
          if (seen.emplace(y, 0).second) {
            order.push_back(y);
            if (order.size() > kMaxElements) throw std::length_error("generated subloop exceeds the size guard");
          }
        }
      }
    }
    std::sort(order.begin(), order.end());
    keys_ = std::move(order);
    index_.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], static_cast<std::uint32_t>(i));
    for (auto g : gkeys) gens_.push_back(index_.at(g));
    m_central_.assign(m_->table.size(), false);
    for (auto c : center(m_->table)) m_central_[c] = true;
  }

  // Let C be the componentwise-central elements of the orbit O.  C sits in
  // the centre of the product, an F2-space; if C is a subspace, R is a set
  // of coset representatives with R.C = O, and R.R lies in O, then
  // (r c)(r' c') = (r r')(c c') shows O is closed under multiplication.
  void audit_closure() {
    audit_.orbit_size = keys_.size();
    const std::size_t T = triples_.size();

    // coordinates of central elements of M over an F2 basis of Z(M)
    std::vector<std::size_t> zm;
    for (std::size_t i = 0; i < m_central_.size(); ++i)
      if (m_central_[i]) zm.push_back(i);
    std::vector<std::int64_t> zcoord(m_->table.size(), -1);
    zcoord[0] = 0;
    std::vector<std::size_t> span{0};
    unsigned zdim = 0;
    for (auto c : zm) {
      if (zcoord[c] >= 0) continue;
      const std::size_t cur = span.size();
      for (std::size_t s = 0; s < cur; ++s) {
        const std::size_t e = m_->table.mul(span[s], c);
        if (zcoord[e] >= 0 || !m_central_[e]) throw std::logic_error("centre of M is not elementary abelian");
        zcoord[e] = zcoord[span[s]] | (std::int64_t{1} << zdim);
        span.push_back(e);
      }
      ++zdim;
    }
    if (span.size() != zm.size()) throw std::logic_error("centre of M is not elementary abelian");

    std::vector<std::size_t> C;
    std::vector<std::uint64_t> cvec;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (!componentwise_central(i)) continue;
      std::uint64_t v = 0;
      for (std::size_t t = 0; t < T; ++t) v |= static_cast<std::uint64_t>(zcoord[component(i, t)]) << (zdim * t);
      C.push_back(i);
      cvec.push_back(v);
    }
    audit_.central_part = C.size();
    // a finite subset of an F2-space is a subspace iff it has the size of its span
    F2Subspace span_c(zdim * T);
    for (auto v : cvec) span_c.insert(v);
    const std::size_t rank = span_c.rank();
    audit_.central_part_is_subgroup = rank < 63 && (std::uint64_t{1} << rank) == C.size();

    std::vector<char> mark(keys_.size(), 0);
    std::vector<std::size_t> reps;
    bool inside = true;
    for (std::size_t i = 0; i < keys_.size() && inside; ++i) {
      if (mark[i]) continue;
      reps.push_back(i);
      for (auto c : C) {
        auto it = index_.find(mul_keys(keys_[i], keys_[c]));
        if (it == index_.end()) {
          inside = false;
          break;
        }
        mark[it->second] = 1;
      }
    }
    audit_.coset_count = reps.size();
    audit_.cosets_cover_orbit = inside && reps.size() * C.size() == keys_.size();
    bool rr = true;
    for (auto a : reps)
      for (auto b : reps)
        if (!index_.count(mul_keys(keys_[a], keys_[b]))) rr = false;
    audit_.rep_products_in_orbit = rr;

    audit_.projection_onto.assign(T, false);
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<char> hit(m_->table.size(), 0);
      std::size_t cnt = 0;
      for (auto k : keys_)
        if (!hit[comp(k, t)]) {
          hit[comp(k, t)] = 1;
          ++cnt;
        }
      audit_.projection_onto[t] = cnt == m_->table.size();
    }
  }

  const MLoop* m_;
  TripleSet triples_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::size_t> gens_;
  std::vector<bool> m_central_;
  ClosureAudit audit_;
};

static_assert(FiniteLoop<EmbeddedFreeLoop>);

}  // namespace triality
