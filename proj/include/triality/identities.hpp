#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loop.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace triality {

struct Scope {
  bool exhaustive = false;
  std::uint64_t samples = 0;

  static Scope all() { return {true, 0}; }
  static Scope sampled(std::uint64_t k) { return {false, k}; }
};

struct IdentityReport {
  std::string name;
  int arity = 0;
  bool exhaustive = false;
  /// Tuples examined, up to and including the counterexample if any.
  std::uint64_t checked = 0;
  std::optional<std::vector<std::size_t>> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

using Args = std::array<std::size_t, 5>;

inline constexpr std::uint64_t kSampleChunk = std::uint64_t{1} << 18;

/// Checks pred(loop, args) on argument tuples of the given arity.
///
/// Exhaustive runs walk tuples in lexicographic order split by the first
/// argument; sampled runs draw chunk c of kSampleChunk tuples from
/// SplitMix64::stream(seed, c).  Either way the reported counterexample
/// is the first one in that fixed order, so reports do not depend on the
/// number of workers.
template <FiniteLoop L, class Pred>
IdentityReport check_identity(const L& loop, std::string name, int arity, Pred pred, Scope scope,
                              std::uint64_t seed = 0, unsigned jobs = 1) {
  if (arity < 1 || arity > 5) throw std::invalid_argument("identity arity must be 1..5");
  IdentityReport rep;
  rep.name = std::move(name);
  rep.arity = arity;
  rep.exhaustive = scope.exhaustive;
  const std::uint64_t N = loop.size();
  const auto ua = static_cast<std::size_t>(arity);

  std::uint64_t chunks, per_chunk, total;
  if (scope.exhaustive) {
    long double t = 1;
    for (int k = 0; k < arity; ++k) t *= static_cast<long double>(N);
    if (t > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2))
      throw std::length_error("exhaustive tuple space too large");
    total = static_cast<std::uint64_t>(t);
    chunks = N;
    per_chunk = total / N;
  } else {
    if (scope.samples == 0) throw std::invalid_argument("a sampled check needs at least one sample");
    total = scope.samples;
    per_chunk = kSampleChunk;
    chunks = (total + per_chunk - 1) / per_chunk;
  }

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> fail_at(chunks, kNone);
  std::vector<Args> fail_args(chunks);
  std::atomic<std::uint64_t> first_bad{kNone};

  parallel_chunks(chunks, jobs, [&](std::size_t c) {
    if (c > first_bad.load(std::memory_order_relaxed)) return;
    Args a{};
    const std::uint64_t begin = c * per_chunk;
    const std::uint64_t end = std::min(total, begin + per_chunk);
    if (scope.exhaustive) {
      a[0] = c;
      for (std::uint64_t r = 0; r < end - begin; ++r) {
        if (!pred(loop, a)) {
          fail_at[c] = begin + r;
          fail_args[c] = a;
          break;
        }
        for (std::size_t k = ua; k-- > 1;) {
          if (++a[k] < N) break;
          a[k] = 0;
        }
      }
    } else {
      SplitMix64 g = SplitMix64::stream(seed, c);
      for (std::uint64_t r = begin; r < end; ++r) {
        for (std::size_t k = 0; k < ua; ++k) a[k] = static_cast<std::size_t>(g.below(N));
        if (!pred(loop, a)) {
          fail_at[c] = r;
          fail_args[c] = a;
          break;
        }
      }
    }
    if (fail_at[c] != kNone) {
      std::uint64_t cur = first_bad.load();
      while (c < cur && !first_bad.compare_exchange_weak(cur, c)) {
      }
    }
  });

  rep.checked = total;
  for (std::size_t c = 0; c < chunks; ++c)
    if (fail_at[c] != kNone) {
      rep.checked = fail_at[c] + 1;
      rep.counterexample = std::vector<std::size_t>(fail_args[c].begin(), fail_args[c].begin() + arity);
      break;
    }
  return rep;
}

enum class MoufangIdentity { left, right, middle };

inline const char* moufang_name(MoufangIdentity w) {
  switch (w) {
    case MoufangIdentity::left:
      return "left";
    case MoufangIdentity::right:
      return "right";
    case MoufangIdentity::middle:
      return "middle";
  }
  return "?";
}

inline MoufangIdentity parse_moufang(const std::string& s) {
  if (s == "left") return MoufangIdentity::left;
  if (s == "right") return MoufangIdentity::right;
  if (s == "middle") return MoufangIdentity::middle;
  throw std::invalid_argument("unknown Moufang identity '" + s + "'");
}

/// left:   ((xy)x)z = x(y(xz))
/// right:  ((xy)z)y = x(y(zy))
/// middle: (xy)(zx) = (x(yz))x
template <FiniteLoop L>
IdentityReport check_moufang(const L& l, MoufangIdentity which, Scope scope, std::uint64_t seed = 0,
                             unsigned jobs = 1) {
  std::string name = std::string("moufang-") + moufang_name(which);
  switch (which) {
    case MoufangIdentity::left:
      return check_identity(
          l, name, 3,
          [](const L& q, const Args& a) {
            auto x = a[0], y = a[1], z = a[2];
            return q.mul(q.mul(q.mul(x, y), x), z) == q.mul(x, q.mul(y, q.mul(x, z)));
          },
          scope, seed, jobs);
    case MoufangIdentity::right:
      return check_identity(
          l, name, 3,
          [](const L& q, const Args& a) {
            auto x = a[0], y = a[1], z = a[2];
            return q.mul(q.mul(q.mul(x, y), z), y) == q.mul(x, q.mul(y, q.mul(z, y)));
          },
          scope, seed, jobs);
    case MoufangIdentity::middle:
      return check_identity(
          l, name, 3,
          [](const L& q, const Args& a) {
            auto x = a[0], y = a[1], z = a[2];
            return q.mul(q.mul(x, y), q.mul(z, x)) == q.mul(q.mul(x, q.mul(y, z)), x);
          },
          scope, seed, jobs);
  }
  throw std::logic_error("unreachable");
}

/// Identities of arity up to exhaustive_arity are checked on every
/// tuple, the rest on `samples` seeded tuples.
struct VarietyScope {
  int exhaustive_arity = 2;
  std::uint64_t samples = 10'000'000;

  Scope for_arity(int arity) const { return arity <= exhaustive_arity ? Scope::all() : Scope::sampled(samples); }
};

/// The nine defining identities of the variety generated by code loops.
template <FiniteLoop L>
std::vector<IdentityReport> check_variety_E(const L& l, VarietyScope vs = {}, std::uint64_t seed = 0,
                                            unsigned jobs = 1) {
  std::vector<IdentityReport> out;
  using A = const Args&;
  out.push_back(check_identity(
      l, "x^4 = 1", 1, [](const L& q, A a) { return power(q, a[0], 4) == 0; }, vs.for_arity(1), seed, jobs));
  out.push_back(check_identity(
      l, "[x,y]^2 = 1", 2,
      [](const L& q, A a) { return square(q, commutator(q, a[0], a[1])) == 0; }, vs.for_arity(2), seed + 1, jobs));
  out.push_back(check_identity(
      l, "(x,y,z)^2 = 1", 3,
      [](const L& q, A a) { return square(q, associator(q, a[0], a[1], a[2])) == 0; }, vs.for_arity(3), seed + 2, jobs));
  out.push_back(check_identity(
      l, "[x^2,y] = 1", 2, [](const L& q, A a) { return commutator(q, square(q, a[0]), a[1]) == 0; }, vs.for_arity(2),
      seed + 3, jobs));
  out.push_back(check_identity(
      l, "[[x,y],t] = 1", 3,
      [](const L& q, A a) { return commutator(q, commutator(q, a[0], a[1]), a[2]) == 0; }, vs.for_arity(3), seed + 4,
      jobs));
  out.push_back(check_identity(
      l, "[(x,y,z),t] = 1", 4,
      [](const L& q, A a) { return commutator(q, associator(q, a[0], a[1], a[2]), a[3]) == 0; }, vs.for_arity(4),
      seed + 5, jobs));
  out.push_back(check_identity(
      l, "(x^2,y,z) = 1", 3,
      [](const L& q, A a) { return associator(q, square(q, a[0]), a[1], a[2]) == 0; }, vs.for_arity(3), seed + 6, jobs));
  out.push_back(check_identity(
      l, "([x,y],z,t) = 1", 4,
      [](const L& q, A a) { return associator(q, commutator(q, a[0], a[1]), a[2], a[3]) == 0; }, vs.for_arity(4),
      seed + 7, jobs));
  out.push_back(check_identity(
      l, "((x,y,z),t,s) = 1", 5,
      [](const L& q, A a) { return associator(q, associator(q, a[0], a[1], a[2]), a[3], a[4]) == 0; }, vs.for_arity(5),
      seed + 8, jobs));
  return out;
}

/// The three expansion laws for squares, commutators and associators.
template <FiniteLoop L>
std::vector<IdentityReport> check_expansion_laws(const L& l, VarietyScope vs = {}, std::uint64_t seed = 0,
                                                 unsigned jobs = 1) {
  using A = const Args&;
  std::vector<IdentityReport> out;
  out.push_back(check_identity(
      l, "(xy)^2 = x^2 y^2 [x,y]", 2,
      [](const L& q, A a) {
        auto x = a[0], y = a[1];
        return square(q, q.mul(x, y)) == q.mul(q.mul(square(q, x), square(q, y)), commutator(q, x, y));
      },
      vs.for_arity(2), seed, jobs));
  out.push_back(check_identity(
      l, "[xy,z] = [x,z][y,z](x,y,z)", 3,
      [](const L& q, A a) {
        auto x = a[0], y = a[1], z = a[2];
        return commutator(q, q.mul(x, y), z) ==
               q.mul(q.mul(commutator(q, x, z), commutator(q, y, z)), associator(q, x, y, z));
      },
      vs.for_arity(3), seed + 1, jobs));
  out.push_back(check_identity(
      l, "(wx,y,z) = (w,y,z)(x,y,z)", 4,
      [](const L& q, A a) {
        auto w = a[0], x = a[1], y = a[2], z = a[3];
        return associator(q, q.mul(w, x), y, z) == q.mul(associator(q, w, y, z), associator(q, x, y, z));
      },
      vs.for_arity(4), seed + 2, jobs));
  return out;
}

}  // namespace triality
