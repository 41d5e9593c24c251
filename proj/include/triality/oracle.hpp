#pragma once

// Collection normalizer over the presentation of G_n.  It shares no code
// with the product formula in element.hpp and is meant as a slow,
// independent reference.
//
// The word is expanded into letters a_i, b_i (exponent 1) and p_ij
// symbols, with even powers split off as central squares.  Adjacent
// letters y x that are out of order are exchanged as y x = x y [y,x].
// Sort keys: a_i < b_j < p_kl, indices ascending inside each block.
//
//   y      x      [y,x]
//   a_j    a_i    u_ij                  (i < j)
//   b_j    b_i    v_ij                  (i < j)
//   b_j    a_i    p_ij                  (i != j; since p_ij^2 = 1)
//   b_i    a_i    1
//   p_ij   a_k    z_ijk                 (k not in {i,j})
//   p_ij   b_k    t_ijk                 (k not in {i,j})
//   p_ij   a_i    1    because [p_ij,a_i] = [a_i^2,b_j] and a_i^2 is central
//   p_ij   b_j    1    likewise with b_j^2; the cases a_j, b_i follow from p_ij = p_ji
//   p_ij   p_kl   1    (class 3)
//
// Equal neighbours cancel: a_i a_i and b_i b_i become one more central
// square, p_ij p_ij vanishes.  u, v, z, t are central and collected as
// bits; in the z4 mode a square counted twice is a fourth power and dies.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "rng.hpp"

namespace triality {

struct Letter {
  Gen gen = Gen::a;  // a or b
  int index = 1;     // 1-based
  Integer exponent = 1;
  bool operator==(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_) {
      if (l.gen != Gen::a && l.gen != Gen::b) throw std::invalid_argument("words use the letters a_i and b_i only");
      if (l.index < 1) throw std::out_of_range("letter index must be positive");
      if (l.exponent == 0) throw std::invalid_argument("letter exponents must be nonzero");
    }
  }

  /// Parses "a1 b2^-1 a3^2"; whitespace separated, optional exponent.
  static Word parse(const std::string& text) {
    std::vector<Letter> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      Letter l;
      if (tok[0] == 'a')
        l.gen = Gen::a;
      else if (tok[0] == 'b')
        l.gen = Gen::b;
      else
        throw std::invalid_argument("bad letter '" + tok + "'");
      std::size_t pos = 1;
      std::size_t digits = pos;
      while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
      if (digits == pos) throw std::invalid_argument("missing index in '" + tok + "'");
      l.index = std::stoi(tok.substr(pos, digits - pos));
      if (digits < tok.size()) {
        if (tok[digits] != '^' || digits + 1 == tok.size())
          throw std::invalid_argument("bad exponent in '" + tok + "'");
        std::string e = tok.substr(digits + 1);
        std::size_t k = (e[0] == '-' || e[0] == '+') ? 1 : 0;
        if (k == e.size() || !std::all_of(e.begin() + static_cast<std::ptrdiff_t>(k), e.end(),
                                          [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw std::invalid_argument("bad exponent in '" + tok + "'");
        l.exponent = Integer(e[0] == '+' ? e.substr(1) : e);
      }
      out.push_back(l);
    }
    return Word(std::move(out));
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k) os << ' ';
      os << gen_char(letters_[k].gen) << letters_[k].index;
      if (letters_[k].exponent != 1) os << '^' << letters_[k].exponent;
    }
    return os.str();
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word concat(const Word& o) const {
    std::vector<Letter> l = letters_;
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(l));
  }

  /// The word for the inverse element: reversed, exponents negated.
  Word inverse() const {
    std::vector<Letter> l(letters_.rbegin(), letters_.rend());
    for (auto& x : l) x.exponent = -x.exponent;
    return Word(std::move(l));
  }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Which out-of-order neighbour pair is rewritten first.
enum class CollectionOrder { leftmost, rightmost };

namespace detail {

struct Sym {
  int kind;  // 0 = a, 1 = b, 2 = p
  int i;     // 0-based
  int j;     // second index for p, i < j
  bool operator==(const Sym&) const = default;
};

class Collector {
 public:
  explicit Collector(const CtxPtr& ctx)
      : ctx_(ctx), n_(ctx->n()), squares_(ctx->zsize()), bits_(ctx->m(), 0) {}

  void push(const Letter& l) {
    if (l.index < 1 || l.index > n_)
      throw std::out_of_range("letter index " + std::to_string(l.index) + " outside 1.." + std::to_string(n_));
    // exponent = 2q + r with r in {0,1}
    Integer q = l.exponent / 2, r = l.exponent % 2;
    if (r < 0) {
      r += 2;
      q -= 1;
    }
    const int kind = l.gen == Gen::a ? 0 : 1;
    squares_[static_cast<std::size_t>(kind * n_ + l.index - 1)] += q;
    if (r != 0) seq_.push_back({kind, l.index - 1, 0});
  }

  void collect(CollectionOrder order) {
    for (;;) {
      std::size_t k = find(order);
      if (k == SIZE_MAX) break;
      rewrite(k);
    }
  }

  Element result() const {
    Element e(ctx_);
    auto& z = e.mutable_z();
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = 2 * squares_[k];
    auto f = bits_;
    for (const auto& s : seq_) {
      if (s.kind == 2)
        f[ctx_->p_offset() + ctx_->pair_rank(s.i, s.j)] ^= 1;
      else
        z[static_cast<std::size_t>(s.kind * n_ + s.i)] += 1;
    }
    return Element(ctx_, std::move(z), std::move(f));
  }

 private:
  int key(const Sym& s) const {
    if (s.kind < 2) return s.kind * n_ + s.i;
    return 2 * n_ + static_cast<int>(ctx_->pair_rank(s.i, s.j));
  }

  std::size_t find(CollectionOrder order) const {
    if (seq_.size() < 2) return SIZE_MAX;
    if (order == CollectionOrder::leftmost) {
      for (std::size_t k = 0; k + 1 < seq_.size(); ++k)
        if (key(seq_[k]) >= key(seq_[k + 1])) return k;
    } else {
      for (std::size_t k = seq_.size() - 1; k-- > 0;)
        if (key(seq_[k]) >= key(seq_[k + 1])) return k;
    }
    return SIZE_MAX;
  }

  void flip(Gen g, int i, int j) {
    const std::size_t r = ctx_->pair_rank(std::min(i, j), std::max(i, j));
    bits_[(g == Gen::u ? ctx_->u_offset() : ctx_->v_offset()) + r] ^= 1;
  }

  void flip(Gen g, int i, int j, int k) {
    int t[3] = {i, j, k};
    std::sort(t, t + 3);
    const std::size_t r = ctx_->triple_rank(t[0], t[1], t[2]);
    bits_[(g == Gen::z ? ctx_->z_offset() : ctx_->t_offset()) + r] ^= 1;
  }

  void rewrite(std::size_t k) {
    const Sym y = seq_[k], x = seq_[k + 1];
    auto at = seq_.begin() + static_cast<std::ptrdiff_t>(k);
    if (y == x) {
      if (y.kind < 2) squares_[static_cast<std::size_t>(y.kind * n_ + y.i)] += 1;
      seq_.erase(at, at + 2);
      return;
    }
    seq_[k] = x;
    seq_[k + 1] = y;
    if (y.kind == 0 && x.kind == 0) {
      flip(Gen::u, x.i, y.i);
    } else if (y.kind == 1 && x.kind == 1) {
      flip(Gen::v, x.i, y.i);
    } else if (y.kind == 1 && x.kind == 0) {
      if (x.i != y.i) seq_.insert(at + 2, Sym{2, std::min(x.i, y.i), std::max(x.i, y.i)});
    } else if (y.kind == 2 && x.kind < 2) {
      if (x.i != y.i && x.i != y.j) flip(x.kind == 0 ? Gen::z : Gen::t, y.i, y.j, x.i);
    } else if (y.kind == 2 && x.kind == 2) {
      // p symbols commute
    } else {
      throw std::logic_error("collection met an unexpected pair");
    }
  }

  CtxPtr ctx_;
  int n_;
  std::vector<Sym> seq_;
  std::vector<Integer> squares_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace detail

inline Element normalize(const Word& w, const CtxPtr& ctx,
                         CollectionOrder order = CollectionOrder::leftmost) {
  detail::Collector c(ctx);
  for (const auto& l : w.letters()) c.push(l);
  c.collect(order);
  return c.result();
}

/// Deterministic word of the given length.  Letters are uniform over
/// a_1..a_n, b_1..b_n; exponents uniform over {-3,-2,-1,1,2,3}.
inline Word random_word(const GroupCtx& ctx, std::size_t length, std::uint64_t seed) {
  SplitMix64 g(seed);
  std::vector<Letter> out;
  out.reserve(length);
  static constexpr int exps[6] = {-3, -2, -1, 1, 2, 3};
  for (std::size_t k = 0; k < length; ++k) {
    auto s = static_cast<int>(g.below(2 * static_cast<std::uint64_t>(ctx.n())));
    Letter l;
    l.gen = s < ctx.n() ? Gen::a : Gen::b;
    l.index = s % ctx.n() + 1;
    l.exponent = exps[g.below(6)];
    out.push_back(l);
  }
  return Word(std::move(out));
}

}  // namespace triality
