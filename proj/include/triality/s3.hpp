#pragma once

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace triality {

enum class AutoLetter { sigma, tau, rho };

/// One of the six maps sigma^s followed by rho^r (s in {0,1}, r in {0,1,2}).
/// Words are read left to right: the word "sigma rho" applies sigma first.
class S3Element {
 public:
  constexpr S3Element() = default;
  constexpr S3Element(int s, int r) : s_(s & 1), r_(((r % 3) + 3) % 3) {}

  static constexpr S3Element identity() { return {0, 0}; }
  static constexpr S3Element sigma() { return {1, 0}; }
  static constexpr S3Element rho() { return {0, 1}; }
  // tau = sigma^-1 rho as maps; as a left-to-right word it is rho then sigma.
  static constexpr S3Element tau() { return {1, 2}; }

  static constexpr S3Element of(AutoLetter l) {
    return l == AutoLetter::sigma ? sigma() : l == AutoLetter::tau ? tau() : rho();
  }

  constexpr int s() const { return s_; }
  constexpr int r() const { return r_; }

  /// this, then o.
  constexpr S3Element then(S3Element o) const {
    return {s_ + o.s_, (o.s_ ? -r_ : r_) + o.r_};
  }

  constexpr S3Element inverse() const {
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < 3; ++r)
        if (then(S3Element(s, r)) == identity()) return {s, r};
    return identity();
  }

  constexpr bool operator==(const S3Element&) const = default;

  std::string name() const {
    static const std::array<const char*, 6> names = {"id", "rho", "rho^2", "sigma", "sigma rho",
                                                     "sigma rho^2"};
    return names[static_cast<std::size_t>(3 * s_ + r_)];
  }

  static std::array<S3Element, 6> all() {
    return {S3Element(0, 0), S3Element(0, 1), S3Element(0, 2),
            S3Element(1, 0), S3Element(1, 1), S3Element(1, 2)};
  }

 private:
  int s_ = 0;
  int r_ = 0;
};

class AutoWord {
 public:
  AutoWord() = default;
  AutoWord(std::initializer_list<AutoLetter> l) : letters_(l) {}
  explicit AutoWord(std::vector<AutoLetter> l) : letters_(std::move(l)) {}

  /// Accepts Greek letters or s/t/r, optionally with ^k exponents and
  /// whitespace, e.g. "σρσρ", "s r s r", "rho^2 sigma".
  static AutoWord parse(const std::string& text) {
    std::vector<AutoLetter> out;
    std::size_t i = 0;
    auto starts = [&](const char* w) { return text.compare(i, std::char_traits<char>::length(w), w) == 0; };
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ' || c == '\t' || c == '*' || c == ',') {
        ++i;
        continue;
      }
      AutoLetter l;
      if (starts("sigma")) {
        l = AutoLetter::sigma;
        i += 5;
      } else if (starts("tau")) {
        l = AutoLetter::tau;
        i += 3;
      } else if (starts("rho")) {
        l = AutoLetter::rho;
        i += 3;
      } else if (starts("σ")) {
        l = AutoLetter::sigma;
        i += std::char_traits<char>::length("σ");
      } else if (starts("τ")) {
        l = AutoLetter::tau;
        i += std::char_traits<char>::length("τ");
      } else if (starts("ρ")) {
        l = AutoLetter::rho;
        i += std::char_traits<char>::length("ρ");
      } else if (c == 's') {
        l = AutoLetter::sigma;
        ++i;
      } else if (c == 't') {
        l = AutoLetter::tau;
        ++i;
      } else if (c == 'r') {
        l = AutoLetter::rho;
        ++i;
      } else {
        throw std::invalid_argument("bad automorphism word '" + text + "'");
      }
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing exponent in '" + text + "'");
        e = std::stoi(text.substr(i, j - i));
        i = j;
      }
      for (int k = 0; k < e; ++k) out.push_back(l);
    }
    return AutoWord(std::move(out));
  }

  const std::vector<AutoLetter>& letters() const { return letters_; }

  S3Element reduce() const {
    S3Element acc;
    for (auto l : letters_) acc = acc.then(S3Element::of(l));
    return acc;
  }

 private:
  std::vector<AutoLetter> letters_;
};

}  // namespace triality
