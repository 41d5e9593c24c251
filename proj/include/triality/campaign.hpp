#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "g3.hpp"
#include "identities.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "sample.hpp"
#include "triality.hpp"

namespace triality {

/// Outcome of checking one law over group elements.
struct ElementReport {
  std::string name;
  int arity = 0;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::optional<std::vector<Element>> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

inline constexpr std::uint64_t kElementChunk = std::uint64_t{1} << 14;

namespace detail {

/// Runs test(chunk, begin, end) -> optional failure offset over all chunks
/// and returns the first failure in chunk order.
template <class Tuple, class ChunkFn>
std::optional<std::pair<std::uint64_t, Tuple>> first_failure(std::uint64_t total, unsigned jobs, ChunkFn fn) {
  const std::uint64_t chunks = (total + kElementChunk - 1) / kElementChunk;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> fail_at(chunks, kNone);
  std::vector<Tuple> fail_tuple(chunks);
  std::atomic<std::uint64_t> first_bad{kNone};
  parallel_chunks(chunks, jobs, [&](std::size_t c) {
    if (c > first_bad.load(std::memory_order_relaxed)) return;
    const std::uint64_t begin = c * kElementChunk;
    const std::uint64_t end = std::min(total, begin + kElementChunk);
    if (auto bad = fn(c, begin, end)) {
      fail_at[c] = bad->first;
      fail_tuple[c] = std::move(bad->second);
      std::uint64_t cur = first_bad.load();
      while (c < cur && !first_bad.compare_exchange_weak(cur, c)) {
      }
    }
  });
  for (std::size_t c = 0; c < chunks; ++c)
    if (fail_at[c] != kNone) return std::make_pair(fail_at[c], std::move(fail_tuple[c]));
  return std::nullopt;
}

inline std::uint64_t tuple_space(std::size_t bits, int arity, unsigned budget_bits) {
  const std::size_t total_bits = bits * static_cast<std::size_t>(arity);
  if (total_bits > budget_bits)
    throw std::length_error("exhaustive scope needs 2^" + std::to_string(total_bits) + " tuples, above the budget of 2^" +
                            std::to_string(budget_bits));
  return std::uint64_t{1} << total_bits;
}

}  // namespace detail

/// Checks pred on tuples of group elements.  Exhaustive runs walk the
/// enumeration ranks in order; sampled runs draw chunk c from
/// SplitMix64::stream(seed, c).
template <class Pred>
ElementReport check_elements(const CtxPtr& ctx, std::string name, int arity, Pred pred, Scope scope,
                             std::uint64_t seed = 0, unsigned jobs = 1, unsigned budget_bits = kDefaultBudgetBits) {
  ElementReport rep{std::move(name), arity, scope.exhaustive, 0, std::nullopt};
  const auto ua = static_cast<std::size_t>(arity);
  using Tuple = std::vector<Element>;
  std::uint64_t total;
  std::function<Tuple(std::size_t, std::uint64_t, SplitMix64&)> draw;
  if (scope.exhaustive) {
    if (!ctx->finite()) throw std::invalid_argument("exhaustive scope requires the finite Z4 mode");
    total = detail::tuple_space(ctx->order_bits(), arity, budget_bits);
    const ElementRange range(ctx, static_cast<unsigned>(ctx->order_bits()));
    const unsigned bits = static_cast<unsigned>(ctx->order_bits());
    draw = [range, bits, ua](std::size_t, std::uint64_t r, SplitMix64&) {
      Tuple t;
      for (std::size_t k = 0; k < ua; ++k) t.push_back(range.at((r >> (bits * (ua - 1 - k))) & ((std::uint64_t{1} << bits) - 1)));
      return t;
    };
  } else {
    if (scope.samples == 0) throw std::invalid_argument("a sampled check needs at least one sample");
    total = scope.samples;
    draw = [ctx, ua](std::size_t, std::uint64_t, SplitMix64& g) {
      Tuple t;
      for (std::size_t k = 0; k < ua; ++k) t.push_back(random_element(ctx, g));
      return t;
    };
  }
  auto bad = detail::first_failure<Tuple>(total, jobs, [&](std::size_t c, std::uint64_t begin, std::uint64_t end)
                                                             -> std::optional<std::pair<std::uint64_t, Tuple>> {
    SplitMix64 g = SplitMix64::stream(seed, c);
    for (std::uint64_t r = begin; r < end; ++r) {
      Tuple t = draw(c, r, g);
      if (!pred(t)) return std::make_pair(r, std::move(t));
    }
    return std::nullopt;
  });
  rep.checked = total;
  if (bad) {
    rep.checked = bad->first + 1;
    rep.counterexample = std::move(bad->second);
  }
  return rep;
}

/// Rank-3 finite variant over packed codes; counterexamples are unpacked.
template <class Pred>
ElementReport check_codes(std::string name, int arity, Pred pred, Scope scope, std::uint64_t seed = 0, unsigned jobs = 1,
                          unsigned budget_bits = kDefaultBudgetBits) {
  ElementReport rep{std::move(name), arity, scope.exhaustive, 0, std::nullopt};
  const auto ua = static_cast<std::size_t>(arity);
  using Codes = std::array<g3::Code, 3>;
  if (ua > 3) throw std::invalid_argument("packed checks take at most three arguments");
  std::uint64_t total;
  if (scope.exhaustive) {
    total = detail::tuple_space(g3::kBits, arity, budget_bits);
  } else {
    if (scope.samples == 0) throw std::invalid_argument("a sampled check needs at least one sample");
    total = scope.samples;
  }
  auto bad = detail::first_failure<Codes>(total, jobs, [&](std::size_t c, std::uint64_t begin, std::uint64_t end)
                                                             -> std::optional<std::pair<std::uint64_t, Codes>> {
    SplitMix64 g = SplitMix64::stream(seed, c);
    Codes t{};
    for (std::uint64_t r = begin; r < end; ++r) {
      for (std::size_t k = 0; k < ua; ++k)
        t[k] = scope.exhaustive ? static_cast<g3::Code>((r >> (g3::kBits * (ua - 1 - k))) & (g3::kOrder - 1))
                                : static_cast<g3::Code>(g.below(g3::kOrder));
      if (!pred(t)) return std::make_pair(r, t);
    }
    return std::nullopt;
  });
  rep.checked = total;
  if (bad) {
    rep.checked = bad->first + 1;
    std::vector<Element> ce;
    for (std::size_t k = 0; k < ua; ++k) ce.push_back(g3::to_element(bad->second[k]));
    rep.counterexample = std::move(ce);
  }
  return rep;
}

enum class Target { group_axioms, triality, s3_orders, automorphism };

inline const char* target_name(Target t) {
  switch (t) {
    case Target::group_axioms:
      return "group-axioms";
    case Target::triality:
      return "triality";
    case Target::s3_orders:
      return "s3-orders";
    case Target::automorphism:
      return "automorphism";
  }
  return "?";
}

struct CampaignOptions {
  Scope scope = Scope::sampled(100'000);
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  unsigned budget_bits = kDefaultBudgetBits;
};

namespace detail {

inline bool packed_path(const CtxPtr& ctx) { return ctx->n() == 3 && ctx->finite(); }

}  // namespace detail

/// Element-level verification campaign.  Rank-3 finite groups run on
/// packed codes; everything else uses generic elements, with sigma and
/// rho realised through the rank-3 projections when n > 3.
inline std::vector<ElementReport> run_element_campaign(const CtxPtr& ctx, Target target, const CampaignOptions& o) {
  std::vector<ElementReport> out;
  const bool fast = detail::packed_path(ctx);
  const bool rank3 = ctx->n() == 3;
  using T = const std::vector<Element>&;
  using C = const std::array<g3::Code, 3>&;
  auto run = [&](std::string name, int arity, auto slow, auto packed, std::uint64_t salt) {
    if (fast)
      out.push_back(check_codes(std::move(name), arity, packed, o.scope, o.seed + salt, o.jobs, o.budget_bits));
    else
      out.push_back(check_elements(ctx, std::move(name), arity, slow, o.scope, o.seed + salt, o.jobs, o.budget_bits));
  };

  switch (target) {
    case Target::triality:
      run("triality", 1, [](T x) { return check_triality(x[0]); }, [](C x) { return g3::check_triality(x[0]); }, 0);
      break;

    case Target::s3_orders:
      run("sigma^2 = 1", 1, [](T x) { return apply_sigma(apply_sigma(x[0])) == x[0]; },
          [](C x) { return g3::sigma(g3::sigma(x[0])) == x[0]; }, 0);
      if (rank3)
        run("tau^2 = 1", 1, [](T x) { return apply_tau(apply_tau(x[0])) == x[0]; },
            [](C x) { return g3::tau(g3::tau(x[0])) == x[0]; }, 1);
      run("rho^3 = 1", 1, [](T x) { return apply_rho(apply_rho(apply_rho(x[0]))) == x[0]; },
          [](C x) { return g3::rho(g3::rho(g3::rho(x[0]))) == x[0]; }, 2);
      run("(sigma rho)^2 = 1", 1,
          [](T x) { return apply_rho(apply_sigma(apply_rho(apply_sigma(x[0])))) == x[0]; },
          [](C x) { return g3::rho(g3::sigma(g3::rho(g3::sigma(x[0])))) == x[0]; }, 3);
      break;

    case Target::automorphism:
      run("sigma(xy) = sigma(x)sigma(y)", 2,
          [](T x) { return apply_sigma(x[0] * x[1]) == apply_sigma(x[0]) * apply_sigma(x[1]); },
          [](C x) { return g3::sigma(g3::mul(x[0], x[1])) == g3::mul(g3::sigma(x[0]), g3::sigma(x[1])); }, 0);
      if (rank3)
        run("tau(xy) = tau(x)tau(y)", 2,
            [](T x) { return apply_tau(x[0] * x[1]) == apply_tau(x[0]) * apply_tau(x[1]); },
            [](C x) { return g3::tau(g3::mul(x[0], x[1])) == g3::mul(g3::tau(x[0]), g3::tau(x[1])); }, 1);
      run("rho(xy) = rho(x)rho(y)", 2,
          [](T x) { return apply_rho(x[0] * x[1]) == apply_rho(x[0]) * apply_rho(x[1]); },
          [](C x) { return g3::rho(g3::mul(x[0], x[1])) == g3::mul(g3::rho(x[0]), g3::rho(x[1])); }, 2);
      break;

    case Target::group_axioms:
      run("ex = xe = x", 1,
          [](T x) {
            const Element e = identity(x[0].ctx_ptr());
            return e * x[0] == x[0] && x[0] * e == x[0];
          },
          [](C x) { return g3::mul(g3::kIdentity, x[0]) == x[0] && g3::mul(x[0], g3::kIdentity) == x[0]; }, 0);
      run("x x^-1 = x^-1 x = e", 1,
          [](T x) { return (x[0] * inverse(x[0])).is_identity() && (inverse(x[0]) * x[0]).is_identity(); },
          [](C x) { return g3::mul(x[0], g3::inv(x[0])) == g3::kIdentity && g3::mul(g3::inv(x[0]), x[0]) == g3::kIdentity; },
          1);
      run("(xy)z = x(yz)", 3, [](T x) { return (x[0] * x[1]) * x[2] == x[0] * (x[1] * x[2]); },
          [](C x) { return g3::mul(g3::mul(x[0], x[1]), x[2]) == g3::mul(x[0], g3::mul(x[1], x[2])); }, 2);
      break;
  }
  return out;
}

}  // namespace triality
