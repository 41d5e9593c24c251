#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>

#include "element.hpp"

namespace triality {

inline constexpr unsigned kDefaultBudgetBits = 26;

/// All elements of a finite group, in lexicographic coordinate order
/// (a_1 most significant, last t-bit least significant).  Ranks are
/// plain integers so that [begin, end) rank slices can be handed to
/// independent workers.
class ElementRange {
 public:
  ElementRange(CtxPtr ctx, unsigned budget_bits = kDefaultBudgetBits)
      : ctx_(std::move(ctx)), lo_(0), hi_(0) {
    if (!ctx_->finite()) throw std::invalid_argument("enumeration requires the finite Z4 mode");
    if (ctx_->order_bits() > budget_bits)
      throw std::length_error("enumeration of 2^" + std::to_string(ctx_->order_bits()) +
                              " elements exceeds the budget of 2^" + std::to_string(budget_bits));
    if (ctx_->order_bits() >= 64) throw std::length_error("enumeration rank does not fit 64 bits");
    hi_ = std::uint64_t{1} << ctx_->order_bits();
  }

  std::uint64_t size() const { return hi_ - lo_; }
  std::uint64_t total() const { return std::uint64_t{1} << ctx_->order_bits(); }

  ElementRange slice(std::uint64_t lo, std::uint64_t hi) const {
    if (lo > hi || hi > total()) throw std::out_of_range("bad enumeration slice");
    ElementRange r = *this;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }

  Element at(std::uint64_t rank) const {
    Element e(ctx_);
    auto& f = e.mutable_f();
    for (std::size_t k = f.size(); k-- > 0;) {
      f[k] = static_cast<std::uint8_t>(rank & 1);
      rank >>= 1;
    }
    auto& z = e.mutable_z();
    for (std::size_t k = z.size(); k-- > 0;) {
      z[k] = static_cast<unsigned>(rank & 3);
      rank >>= 2;
    }
    return e;
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = const Element&;

    iterator() = default;
    iterator(const ElementRange* r, std::uint64_t rank) : r_(r), rank_(rank) {
      if (r_ && rank_ < r_->hi_) cur_ = r_->at(rank_);
    }
    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }
    iterator& operator++() {
      ++rank_;
      if (rank_ < r_->hi_) advance();
      return *this;
    }
    bool operator==(const iterator& o) const { return rank_ == o.rank_; }
    bool operator!=(const iterator& o) const { return rank_ != o.rank_; }

   private:
    // Odometer step: the last coordinate moves fastest.
    void advance() {
      auto& f = cur_.mutable_f();
      for (std::size_t k = f.size(); k-- > 0;) {
        f[k] ^= 1;
        if (f[k]) return;
      }
      auto& z = cur_.mutable_z();
      for (std::size_t k = z.size(); k-- > 0;) {
        if (z[k] < 3) {
          z[k] += 1;
          return;
        }
        z[k] = 0;
      }
    }
    const ElementRange* r_ = nullptr;
    std::uint64_t rank_ = 0;
    Element cur_;
  };

  iterator begin() const { return iterator(this, lo_); }
  iterator end() const { return iterator(this, hi_); }

 private:
  CtxPtr ctx_;
  std::uint64_t lo_, hi_;
};

inline ElementRange enumerate(const CtxPtr& ctx, unsigned budget_bits = kDefaultBudgetBits) {
  return ElementRange(ctx, budget_bits);
}

}  // namespace triality
