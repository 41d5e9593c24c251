#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "g3.hpp"
#include "loop.hpp"
#include "parallel.hpp"
#include "triality.hpp"

namespace triality {

namespace detail {

inline void require_g3_budget(unsigned budget_bits) {
  if (budget_bits < g3::kBits)
    throw std::length_error("rank-3 scans need 2^23 elements, above the budget of 2^" + std::to_string(budget_bits));
}

}  // namespace detail

/// x^-1 x^sigma
inline g3::Code m_of(g3::Code x) { return g3::mul(g3::inv(x), g3::sigma(x)); }

/// m . n = (m^-1)^rho n (m^-1)^(rho^2)
inline g3::Code m_product(g3::Code m, g3::Code n) {
  const g3::Code a = g3::rho(g3::inv(m));
  return g3::mul(g3::mul(a, n), g3::rho(a));
}

/// The loop M of the finite rank-3 group.  Table labels are the packed
/// group elements in ascending order, so index 0 is the identity.
struct MLoop {
  LoopTable table;
  /// witness[i] is the least packed x with x^-1 x^sigma = label(i).
  std::vector<g3::Code> witness;
  /// indices of x_i = a_i^-1 b_i, i = 1, 2, 3
  std::array<std::size_t, 3> x{};
};

inline MLoop extract_m_set(unsigned budget_bits = kDefaultBudgetBits, unsigned jobs = 1) {
  detail::require_g3_budget(budget_bits);
  // first witness per value, found per slice and merged in slice order
  constexpr std::size_t kSlices = 64;
  constexpr g3::Code kSlice = g3::kOrder / kSlices;
  std::vector<std::unordered_map<g3::Code, g3::Code>> found(kSlices);
  parallel_chunks(kSlices, jobs, [&](std::size_t s) {
    auto& mp = found[s];
    const g3::Code lo = static_cast<g3::Code>(s) * kSlice;
    for (g3::Code x = lo; x < lo + kSlice; ++x) mp.try_emplace(m_of(x), x);
  });
  std::unordered_map<g3::Code, g3::Code> first;
  for (auto& mp : found)
    for (auto [m, w] : mp) first.try_emplace(m, w);

  MLoop out;
  std::vector<std::uint64_t> labels;
  labels.reserve(first.size());
  for (auto& kv : first) labels.push_back(kv.first);
  std::sort(labels.begin(), labels.end());
  out.witness.reserve(labels.size());
  for (auto lab : labels) out.witness.push_back(first.at(static_cast<g3::Code>(lab)));

  const std::size_t N = labels.size();
  std::unordered_map<g3::Code, std::uint32_t> index;
  for (std::size_t i = 0; i < N; ++i) index.emplace(static_cast<g3::Code>(labels[i]), static_cast<std::uint32_t>(i));
  std::vector<std::uint32_t> mul(N * N);
  parallel_chunks(N, jobs, [&](std::size_t i) {
    const g3::Code a = g3::rho(g3::inv(static_cast<g3::Code>(labels[i])));
    const g3::Code b = g3::rho(a);
    for (std::size_t j = 0; j < N; ++j) {
      const g3::Code p = g3::mul(g3::mul(a, static_cast<g3::Code>(labels[j])), b);
      auto it = index.find(p);
      if (it == index.end()) throw std::logic_error("M is not closed under its product");
      mul[i * N + j] = it->second;
    }
  });
  std::vector<std::size_t> gens;
  for (int i = 1; i <= 3; ++i) {
    const g3::Code ai = g3::from_element(generator(g3_ctx(Mode::FiniteZ4), Gen::a, {i}));
    const g3::Code xi = m_of(ai);
    gens.push_back(index.at(xi));
    out.x[static_cast<std::size_t>(i - 1)] = index.at(xi);
  }
  out.table = LoopTable(N, std::move(mul), std::move(labels), std::move(gens));
  return out;
}

struct NamedCode {
  std::string name;
  g3::Code code;
};

/// a_i b_i, (a_i b_i)^2, p_ij, u_ij v_ij, t z.
inline std::vector<NamedCode> h_generators() {
  const CtxPtr& c = g3_ctx(Mode::FiniteZ4);
  auto P = [&](const Element& e) { return g3::from_element(e); };
  std::vector<NamedCode> out;
  for (int i = 1; i <= 3; ++i) {
    Element ab = generator(c, Gen::a, {i}) * generator(c, Gen::b, {i});
    std::string s = std::to_string(i);
    out.push_back({"a" + s + "b" + s, P(ab)});
    out.push_back({"(a" + s + "b" + s + ")^2", P(ab * ab)});
  }
  for (auto [i, j] : std::array<std::pair<int, int>, 3>{{{1, 2}, {1, 3}, {2, 3}}}) {
    std::string s = std::to_string(i) + std::to_string(j);
    out.push_back({"p" + s, P(generator(c, Gen::p, {i, j}))});
  }
  for (auto [i, j] : std::array<std::pair<int, int>, 3>{{{1, 2}, {1, 3}, {2, 3}}}) {
    std::string s = std::to_string(i) + std::to_string(j);
    out.push_back({"u" + s + "v" + s, P(generator(c, Gen::u, {i, j}) * generator(c, Gen::v, {i, j}))});
  }
  out.push_back({"t123z123", P(generator(c, Gen::t, {1, 2, 3}) * generator(c, Gen::z, {1, 2, 3}))});
  return out;
}

struct HSubgroupReport {
  std::uint64_t fixed_count = 0;
  std::vector<std::pair<std::string, bool>> generator_fixed;
  std::uint64_t closure_size = 0;
  bool all_generators_fixed() const {
    return std::all_of(generator_fixed.begin(), generator_fixed.end(), [](auto& p) { return p.second; });
  }
};

inline HSubgroupReport h_subgroup(unsigned budget_bits = kDefaultBudgetBits, unsigned jobs = 1) {
  detail::require_g3_budget(budget_bits);
  HSubgroupReport rep;
  constexpr std::size_t kSlices = 64;
  constexpr g3::Code kSlice = g3::kOrder / kSlices;
  std::vector<std::uint64_t> counts(kSlices, 0);
  parallel_chunks(kSlices, jobs, [&](std::size_t s) {
    const g3::Code lo = static_cast<g3::Code>(s) * kSlice;
    std::uint64_t c = 0;
    for (g3::Code x = lo; x < lo + kSlice; ++x) c += g3::sigma(x) == x;
    counts[s] = c;
  });
  for (auto c : counts) rep.fixed_count += c;

  const auto gens = h_generators();
  for (const auto& g : gens) rep.generator_fixed.emplace_back(g.name, g3::sigma(g.code) == g.code);

  // closure: orbit of e under right multiplication by the generators
  std::vector<bool> seen(g3::kOrder, false);
  std::vector<g3::Code> queue{g3::kIdentity};
  seen[g3::kIdentity] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      const g3::Code y = g3::mul(queue[k], g.code);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  rep.closure_size = queue.size();
  return rep;
}

/// Doro's loop on M^(rho^2): x * y = z where xy = hz with h fixed by sigma.
///
/// Element k is label(k)^(rho^2) for the M-loop index k.  The factor z is
/// located through phi(g) = g^-1 g^sigma, which is constant on each coset
/// Hg and separates the cosets; the returned h is then checked to be fixed.
class DoroLoop {
 public:
  explicit DoroLoop(const MLoop& m) {
    const auto& labels = m.table.labels();
    elems_.reserve(labels.size());
    for (auto lab : labels) {
      const g3::Code z = g3::rho(g3::rho(static_cast<g3::Code>(lab)));
      elems_.push_back(z);
      if (!by_phi_.emplace(m_of(z), static_cast<std::uint32_t>(elems_.size() - 1)).second)
        throw std::logic_error("two elements of M^(rho^2) lie in the same coset of H");
    }
  }

  std::size_t size() const { return elems_.size(); }
  g3::Code element(std::size_t k) const { return elems_[k]; }

  std::size_t star(std::size_t i, std::size_t j) const {
    const g3::Code xy = g3::mul(elems_[i], elems_[j]);
    auto it = by_phi_.find(m_of(xy));
    if (it == by_phi_.end()) throw std::logic_error("product has no factor in M^(rho^2)");
    const g3::Code h = g3::mul(xy, g3::inv(elems_[it->second]));
    if (g3::sigma(h) != h) throw std::logic_error("cofactor of a Doro product is not fixed by sigma");
    return it->second;
  }

 private:
  std::vector<g3::Code> elems_;
  std::unordered_map<g3::Code, std::uint32_t> by_phi_;
};

struct DoroReport {
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

/// Compares star on M^(rho^2) with the M-loop product under m -> m^(rho^2).
inline DoroReport doro_isomorphism(const MLoop& m, unsigned jobs = 1) {
  const DoroLoop d(m);
  const std::size_t N = m.table.size();
  std::vector<std::uint64_t> bad(N, 0);
  std::vector<std::size_t> first(N, SIZE_MAX);
  parallel_chunks(N, jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < N; ++j)
      if (d.star(i, j) != m.table.mul(i, j)) {
        if (!bad[i]) first[i] = j;
        ++bad[i];
      }
  });
  DoroReport r;
  r.pairs = static_cast<std::uint64_t>(N) * N;
  for (std::size_t i = 0; i < N; ++i) {
    r.mismatches += bad[i];
    if (bad[i] && !r.first_mismatch) r.first_mismatch = std::make_pair(i, first[i]);
  }
  return r;
}

}  // namespace triality
