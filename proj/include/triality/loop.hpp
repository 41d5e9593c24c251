#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace triality {

/// A finite loop on {0, ..., size()-1} with identity 0.  ldiv(a, c) is
/// the unique x with a*x = c.
template <class L>
concept FiniteLoop = requires(const L& l, std::size_t a, std::size_t b) {
  { l.size() } -> std::convertible_to<std::size_t>;
  { l.mul(a, b) } -> std::convertible_to<std::size_t>;
  { l.ldiv(a, b) } -> std::convertible_to<std::size_t>;
};

/// Dense multiplication table.  Elements may carry a 64-bit label (for
/// loops taken from a group, the packed group element) and a list of
/// designated generators.
class LoopTable {
 public:
  enum class Check { validate, none };

  LoopTable() = default;

  LoopTable(std::size_t n, std::vector<std::uint32_t> entries, std::vector<std::uint64_t> labels = {},
            std::vector<std::size_t> gens = {}, Check check = Check::validate)
      : n_(n), mul_(std::move(entries)), labels_(std::move(labels)), gens_(std::move(gens)) {
    if (n_ == 0) throw std::invalid_argument("a loop has at least one element");
    if (n_ > (std::size_t{1} << 16)) throw std::length_error("dense loop tables are limited to 2^16 elements");
    if (mul_.size() != n_ * n_) throw std::invalid_argument("multiplication table must have |L|^2 entries");
    if (!labels_.empty() && labels_.size() != n_) throw std::invalid_argument("label count must equal |L|");
    for (auto g : gens_)
      if (g >= n_) throw std::out_of_range("generator index out of range");
    for (auto v : mul_)
      if (v >= n_) throw std::out_of_range("table entry out of range");
    latin_ = compute_latin();
    if (check == Check::validate) {
      for (std::size_t i = 0; i < n_; ++i)
        if (mul(0, i) != i || mul(i, 0) != i) throw std::invalid_argument("index 0 is not a two-sided identity");
      if (!latin_) throw std::invalid_argument("table is not a Latin square");
    }
    if (latin_) {
      ldiv_.assign(n_ * n_, 0);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t x = 0; x < n_; ++x) ldiv_[a * n_ + mul_[a * n_ + x]] = static_cast<std::uint32_t>(x);
    }
  }

  std::size_t size() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t ldiv(std::size_t a, std::size_t c) const {
    if (!latin_) throw std::logic_error("division needs a Latin-square table");
    return ldiv_[a * n_ + c];
  }
  bool is_latin() const { return latin_; }

  const std::vector<std::uint32_t>& data() const { return mul_; }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  std::uint64_t label(std::size_t i) const { return labels_.empty() ? i : labels_[i]; }
  const std::vector<std::size_t>& generators() const { return gens_; }

  /// Index of a label, assuming labels are sorted ascending.
  std::size_t find_label(std::uint64_t lab) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), lab);
    if (it == labels_.end() || *it != lab) throw std::out_of_range("label not in the loop");
    return static_cast<std::size_t>(it - labels_.begin());
  }
  bool has_label(std::uint64_t lab) const { return std::binary_search(labels_.begin(), labels_.end(), lab); }

  bool operator==(const LoopTable& o) const { return n_ == o.n_ && mul_ == o.mul_; }

 private:
  bool compute_latin() const {
    std::vector<std::uint32_t> seen(n_, 0);
    std::uint32_t stamp = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      ++stamp;
      for (std::size_t b = 0; b < n_; ++b) {
        auto v = mul_[a * n_ + b];
        if (seen[v] == stamp) return false;
        seen[v] = stamp;
      }
    }
    for (std::size_t b = 0; b < n_; ++b) {
      ++stamp;
      for (std::size_t a = 0; a < n_; ++a) {
        auto v = mul_[a * n_ + b];
        if (seen[v] == stamp) return false;
        seen[v] = stamp;
      }
    }
    return true;
  }

  std::size_t n_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> ldiv_;
  std::vector<std::uint64_t> labels_;
  std::vector<std::size_t> gens_;
  bool latin_ = false;
};

static_assert(FiniteLoop<LoopTable>);

/// An element of a particular table.
struct LoopElem {
  const LoopTable* table = nullptr;
  std::size_t index = 0;
  bool operator==(const LoopElem& o) const { return table == o.table && index == o.index; }
};

inline LoopElem loop_mul(const LoopElem& m, const LoopElem& n) {
  if (m.table != n.table || m.table == nullptr) throw std::invalid_argument("loop elements of different tables");
  return {m.table, m.table->mul(m.index, n.index)};
}

inline LoopElem loop_inv(const LoopElem& m) {
  if (m.table == nullptr) throw std::invalid_argument("loop element without a table");
  return {m.table, m.table->ldiv(m.index, 0)};
}

template <FiniteLoop L>
std::size_t inv(const L& l, std::size_t a) {
  return l.ldiv(a, 0);
}

/// (a,b) defined by ab = (ba)(a,b).
template <FiniteLoop L>
std::size_t commutator(const L& l, std::size_t a, std::size_t b) {
  return l.ldiv(l.mul(b, a), l.mul(a, b));
}

/// (a,b,c) defined by (ab)c = (a(bc))(a,b,c).
template <FiniteLoop L>
std::size_t associator(const L& l, std::size_t a, std::size_t b, std::size_t c) {
  return l.ldiv(l.mul(a, l.mul(b, c)), l.mul(l.mul(a, b), c));
}

template <FiniteLoop L>
std::size_t square(const L& l, std::size_t a) {
  return l.mul(a, a);
}

/// Power in a power-associative loop.
template <FiniteLoop L>
std::size_t power(const L& l, std::size_t a, long long k) {
  if (k < 0) {
    a = inv(l, a);
    k = -k;
  }
  std::size_t r = 0;
  for (long long i = 0; i < k; ++i) r = l.mul(r, a);
  return r;
}

inline LoopElem loop_commutator(const LoopElem& a, const LoopElem& b) {
  if (a.table != b.table) throw std::invalid_argument("loop elements of different tables");
  return {a.table, commutator(*a.table, a.index, b.index)};
}

inline LoopElem loop_associator(const LoopElem& a, const LoopElem& b, const LoopElem& c) {
  if (a.table != b.table || a.table != c.table) throw std::invalid_argument("loop elements of different tables");
  return {a.table, associator(*a.table, a.index, b.index, c.index)};
}

/// Smallest subloop containing gens, as a sorted index list.
template <FiniteLoop L>
std::vector<std::size_t> generated_subloop(const L& l, const std::vector<std::size_t>& gens) {
  const std::size_t n = l.size();
  std::vector<char> in(n, 0);
  std::vector<std::size_t> elems;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (auto g : gens) {
    if (g >= n) throw std::out_of_range("generator index out of range");
    add(g);
  }
  // elems[0, done) have been multiplied with everything in elems[0, done).
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t x = elems[done];
    add(inv(l, x));
    for (std::size_t k = 0; k <= done; ++k) {
      const std::size_t y = elems[k];
      add(l.mul(x, y));
      add(l.mul(y, x));
    }
    ++done;
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

template <FiniteLoop L>
bool in_nucleus(const L& l, std::size_t a) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t ax = l.mul(a, x), xa = l.mul(x, a);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = l.mul(x, y);
      if (l.mul(ax, y) != l.mul(a, xy)) return false;
      if (l.mul(xa, y) != l.mul(x, l.mul(a, y))) return false;
      if (l.mul(xy, a) != l.mul(x, l.mul(y, a))) return false;
    }
  }
  return true;
}

template <FiniteLoop L>
std::vector<std::size_t> nucleus(const L& l) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a)
    if (in_nucleus(l, a)) out.push_back(a);
  return out;
}

template <FiniteLoop L>
bool commutes_with_all(const L& l, std::size_t a) {
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.mul(a, x) != l.mul(x, a)) return false;
  return true;
}

template <FiniteLoop L>
std::vector<std::size_t> center(const L& l) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a)
    if (commutes_with_all(l, a) && in_nucleus(l, a)) out.push_back(a);
  return out;
}

template <FiniteLoop L>
std::vector<std::size_t> squares(const L& l) {
  std::vector<char> seen(l.size(), 0);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    auto s = l.mul(a, a);
    if (!seen[s]) {
      seen[s] = 1;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <FiniteLoop L>
bool is_associative(const L& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = l.mul(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (l.mul(ab, c) != l.mul(a, l.mul(b, c))) return false;
    }
  return true;
}

/// Copies any finite loop into a dense table.
template <FiniteLoop L>
LoopTable to_table(const L& l, std::vector<std::size_t> gens = {}) {
  const std::size_t n = l.size();
  std::vector<std::uint32_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = static_cast<std::uint32_t>(l.mul(a, b));
  return LoopTable(n, std::move(m), {}, std::move(gens));
}

/// Cayley table of Z_2^k (bitwise xor), a handy elementary abelian example.
inline LoopTable elementary_abelian(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint32_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = static_cast<std::uint32_t>(a ^ b);
  std::vector<std::size_t> gens;
  for (unsigned i = 0; i < k; ++i) gens.push_back(std::size_t{1} << i);
  return LoopTable(n, std::move(m), {}, std::move(gens));
}

/// Cayley table of Z_n.
inline LoopTable cyclic(std::size_t n) {
  std::vector<std::uint32_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  return LoopTable(n, std::move(m), {}, n > 1 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{});
}

}  // namespace triality
