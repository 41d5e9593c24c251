#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace triality {

/// Subspace of F2^d (d <= 63), kept as a reduced row echelon basis.
/// Vectors are bit masks: bit k is coordinate k.
class F2Subspace {
 public:
  explicit F2Subspace(std::size_t d = 0) : d_(d) {
    if (d > 63) throw std::length_error("F2 vectors are limited to 63 coordinates");
  }

  F2Subspace(std::size_t d, const std::vector<std::uint64_t>& gens) : F2Subspace(d) {
    for (auto v : gens) insert(v);
  }

  /// Adds v to the spanning set; returns false if v was already in the span.
  bool insert(std::uint64_t v) {
    if (d_ < 64 && (v >> d_) != 0) throw std::invalid_argument("vector has bits beyond the dimension");
    v = reduce(v);
    if (!v) return false;
    const int p = lowest(v);
    for (auto& r : rows_)
      if (r >> p & 1) r ^= v;
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(), [](std::uint64_t a, std::uint64_t b) { return lowest(a) < lowest(b); });
    return true;
  }

  std::uint64_t reduce(std::uint64_t v) const {
    for (auto r : rows_)
      if (v >> lowest(r) & 1) v ^= r;
    return v;
  }

  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  bool contains(const F2Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](std::uint64_t r) { return contains(r); });
  }

  std::size_t dim() const { return d_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t codim() const { return d_ - rows_.size(); }
  /// Rows ordered by pivot; each pivot (lowest set bit) is zero in every other row.
  const std::vector<std::uint64_t>& basis() const { return rows_; }

  std::vector<std::uint64_t> elements() const {
    std::vector<std::uint64_t> out{0};
    for (auto r : rows_) {
      const std::size_t cur = out.size();
      for (std::size_t k = 0; k < cur; ++k) out.push_back(out[k] ^ r);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const F2Subspace& o) const { return d_ == o.d_ && rows_ == o.rows_; }

  static std::string bits(std::uint64_t v, std::size_t d) {
    std::string s(d, '0');
    for (std::size_t k = 0; k < d; ++k)
      if (v >> k & 1) s[k] = '1';
    return s;
  }

  static std::uint64_t parse_bits(const std::string& s) {
    if (s.size() > 63) throw std::invalid_argument("bit string too long");
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '1')
        v |= std::uint64_t{1} << k;
      else if (s[k] != '0')
        throw std::invalid_argument("bit strings use only 0 and 1");
    }
    return v;
  }

  /// Rows as bit strings separated by ';'.
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k) s += ';';
      s += bits(rows_[k], d_);
    }
    return s;
  }

 private:
  static int lowest(std::uint64_t v) { return __builtin_ctzll(v); }

  std::size_t d_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace triality
