#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace triality {

enum class Mode { Infinite, FiniteZ4 };

inline const char* mode_name(Mode m) { return m == Mode::FiniteZ4 ? "z4" : "z"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "z4" || s == "Z4" || s == "finite") return Mode::FiniteZ4;
  if (s == "z" || s == "Z" || s == "infinite") return Mode::Infinite;
  throw std::invalid_argument("unknown coefficient mode '" + s + "' (expected z4 or z)");
}

constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of F2 coordinates of an element of rank n.
constexpr std::size_t fpart_size(std::size_t n) {
  return static_cast<std::size_t>(3 * binomial(n, 2) + 2 * binomial(n, 3));
}

using Pair = std::array<int, 2>;
using Triple = std::array<int, 3>;

/// Symbol kinds. a and b live in the integer part, the rest are F2 bits.
enum class Gen { a, b, u, v, p, z, t };

inline char gen_char(Gen g) { return "abuvpzt"[static_cast<int>(g)]; }

/// Rank, coefficient mode and coordinate layout of one group.
///
/// Indices in the public interface are 1-based like the symbols
/// a_1..a_n.  Layout positions are 0-based.  The F2 layout is
/// u-block, v-block, p-block (pairs in lexicographic order), then the
/// z-block and t-block (triples in lexicographic order).
class GroupCtx {
 public:
  static std::shared_ptr<const GroupCtx> create(int n, Mode mode) {
    return std::shared_ptr<const GroupCtx>(new GroupCtx(n, mode));
  }

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  bool finite() const { return mode_ == Mode::FiniteZ4; }
  std::size_t m() const { return m_; }
  std::size_t zsize() const { return 2 * static_cast<std::size_t>(n_); }
  std::size_t num_pairs() const { return pairs_.size(); }
  std::size_t num_triples() const { return triples_.size(); }
  /// log2 of the order in finite mode.
  std::size_t order_bits() const { return 4 * static_cast<std::size_t>(n_) + m_; }

  const std::vector<Pair>& pairs() const { return pairs_; }
  const std::vector<Triple>& triples() const { return triples_; }

  std::size_t u_offset() const { return 0; }
  std::size_t v_offset() const { return pairs_.size(); }
  std::size_t p_offset() const { return 2 * pairs_.size(); }
  std::size_t z_offset() const { return 3 * pairs_.size(); }
  std::size_t t_offset() const { return 3 * pairs_.size() + triples_.size(); }

  /// Rank of the 0-based pair (i, j), i < j.
  std::size_t pair_rank(int i, int j) const {
    return pair_rank_[static_cast<std::size_t>(i * n_ + j)];
  }
  /// Rank of the 0-based triple (i, j, k), i < j < k.
  std::size_t triple_rank(int i, int j, int k) const {
    return triple_rank_[static_cast<std::size_t>((i * n_ + j) * n_ + k)];
  }

  /// Layout position of an F2 symbol given 1-based indices.
  std::size_t position(Gen g, const std::vector<int>& idx) const {
    check_indices(g, idx);
    switch (g) {
      case Gen::a:
        return static_cast<std::size_t>(idx[0] - 1);
      case Gen::b:
        return static_cast<std::size_t>(n_ + idx[0] - 1);
      case Gen::u:
        return u_offset() + pair_rank(idx[0] - 1, idx[1] - 1);
      case Gen::v:
        return v_offset() + pair_rank(idx[0] - 1, idx[1] - 1);
      case Gen::p:
        return p_offset() + pair_rank(idx[0] - 1, idx[1] - 1);
      case Gen::z:
        return z_offset() + triple_rank(idx[0] - 1, idx[1] - 1, idx[2] - 1);
      case Gen::t:
        return t_offset() + triple_rank(idx[0] - 1, idx[1] - 1, idx[2] - 1);
    }
    throw std::logic_error("unreachable");
  }

  void check_indices(Gen g, const std::vector<int>& idx) const {
    std::size_t want = (g == Gen::a || g == Gen::b) ? 1 : (g == Gen::z || g == Gen::t) ? 3 : 2;
    if (idx.size() != want)
      throw std::invalid_argument(std::string("symbol ") + gen_char(g) + " takes " +
                                  std::to_string(want) + " indices");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1 || idx[k] > n_)
        throw std::out_of_range("index " + std::to_string(idx[k]) + " outside 1.." +
                                std::to_string(n_));
      if (k > 0 && idx[k] <= idx[k - 1])
        throw std::invalid_argument("pair/triple indices must be strictly increasing");
    }
  }

  /// Human-readable name of an F2 layout position, e.g. "p13".
  std::string fsymbol(std::size_t pos) const {
    const std::size_t P = pairs_.size();
    auto pstr = [](const Pair& q) { return std::to_string(q[0] + 1) + std::to_string(q[1] + 1); };
    auto tstr = [](const Triple& q) {
      return std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1);
    };
    if (pos < P) return "u" + pstr(pairs_[pos]);
    if (pos < 2 * P) return "v" + pstr(pairs_[pos - P]);
    if (pos < 3 * P) return "p" + pstr(pairs_[pos - 2 * P]);
    pos -= 3 * P;
    if (pos < triples_.size()) return "z" + tstr(triples_[pos]);
    pos -= triples_.size();
    if (pos < triples_.size()) return "t" + tstr(triples_[pos]);
    throw std::out_of_range("layout position out of range");
  }

  bool same_as(const GroupCtx& o) const { return n_ == o.n_ && mode_ == o.mode_; }

 private:
  GroupCtx(int n, Mode mode) : n_(n), mode_(mode), m_(0) {
    if (n < 3) throw std::invalid_argument("rank n must be at least 3");
    if (n > 64) throw std::invalid_argument("rank n above 64 is not supported");
    const auto un = static_cast<std::size_t>(n);
    pair_rank_.assign(un * un, SIZE_MAX);
    triple_rank_.assign(un * un * un, SIZE_MAX);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        pair_rank_[static_cast<std::size_t>(i * n + j)] = pairs_.size();
        pairs_.push_back({i, j});
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          triple_rank_[static_cast<std::size_t>((i * n + j) * n + k)] = triples_.size();
          triples_.push_back({i, j, k});
        }
    m_ = 3 * pairs_.size() + 2 * triples_.size();
  }

  int n_;
  Mode mode_;
  std::size_t m_;
  std::vector<Pair> pairs_;
  std::vector<Triple> triples_;
  std::vector<std::size_t> pair_rank_;
  std::vector<std::size_t> triple_rank_;
};

using CtxPtr = std::shared_ptr<const GroupCtx>;

/// Shared context for the rank-3 factor groups used by the embedding.
inline const CtxPtr& g3_ctx(Mode mode) {
  static const CtxPtr z4 = GroupCtx::create(3, Mode::FiniteZ4);
  static const CtxPtr zz = GroupCtx::create(3, Mode::Infinite);
  return mode == Mode::FiniteZ4 ? z4 : zz;
}

}  // namespace triality
