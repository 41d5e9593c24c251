#include <catch2/catch_amalgamated.hpp>

#include <triality/oracle.hpp>
#include <triality/sample.hpp>

using namespace triality;

namespace {

Element nf(const std::string& w, const CtxPtr& c, CollectionOrder o = CollectionOrder::leftmost) {
  return normalize(Word::parse(w), c, o);
}

}  // namespace

TEST_CASE("word syntax", "[oracle]") {
  const Word w = Word::parse("a1 b2^-1 a3^2");
  REQUIRE(w.size() == 3);
  CHECK(w.letters()[1].gen == Gen::b);
  CHECK(w.letters()[1].index == 2);
  CHECK(w.letters()[1].exponent == -1);
  CHECK(w.letters()[2].exponent == 2);
  CHECK(w.to_string() == "a1 b2^-1 a3^2");
  CHECK(Word::parse("  a1^+3   b12 ").to_string() == "a1^3 b12");
  CHECK(w.inverse().to_string() == "a3^-2 b2 a1^-1");
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("c1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a1^"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a1^x"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a1^0"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("a0"), std::out_of_range);
  CHECK_THROWS(nf("a4", GroupCtx::create(3, Mode::FiniteZ4)));
}

TEST_CASE("normal forms of short words", "[oracle]") {
  for (Mode md : {Mode::FiniteZ4, Mode::Infinite}) {
    auto c = GroupCtx::create(3, md);
    const Element a1 = generator(c, Gen::a, {1}), a2 = generator(c, Gen::a, {2}), b1 = generator(c, Gen::b, {1});
    CHECK(nf("a2 a1", c) == a1 * a2 * generator(c, Gen::u, {1, 2}));
    CHECK(nf("a2 a1", c).to_string() == "a1 a2 u12");
    CHECK(nf("a1 b1", c) == a1 * b1);
    CHECK(nf("a1 b1", c).to_string() == "a1 b1");
    CHECK(nf("b1 a1", c) == a1 * b1);
    CHECK(nf("b2 a1", c).to_string() == "a1 b2 p12");
    CHECK(nf("b2 b1", c).to_string() == "b1 b2 v12");
    CHECK(nf("", c).is_identity());
    CHECK(nf("a1 a1^-1", c).is_identity());
  }
  auto c = GroupCtx::create(3, Mode::FiniteZ4);
  CHECK(nf("a1^-1 b1^-1", c).to_string() == "a1^3 b1^3");
  CHECK(nf("a1^4", c).is_identity());
  // [p12, a3] = z123: p12^-1 a3^-1 p12 a3 with p12 = [a1, b2]
  CHECK(nf("a1^-1 b2^-1 a1 b2 a3^-1 a1^-1 b2^-1 a1 b2 a3", c) == generator(c, Gen::z, {1, 2, 3}));
  CHECK(nf("a1^-1 b2^-1 a1 b2 b3^-1 a1^-1 b2^-1 a1 b2 b3", c) == generator(c, Gen::t, {1, 2, 3}));
}

TEST_CASE("random words are reproducible", "[oracle]") {
  auto c = GroupCtx::create(3, Mode::FiniteZ4);
  CHECK(random_word(*c, 0, 9).empty());
  const Word w = random_word(*c, 5, 1);
  CHECK(w.size() == 5);
  CHECK(w == random_word(*c, 5, 1));
  CHECK_FALSE(w == random_word(*c, 5, 2));
  for (const auto& l : random_word(*c, 200, 4).letters()) {
    CHECK(l.index >= 1);
    CHECK(l.index <= 3);
    CHECK(l.exponent != 0);
    CHECK(abs(l.exponent) <= 3);
  }
}

TEST_CASE("collection agrees with the product formula", "[oracle][property]") {
  for (int n : {3, 4, 5})
    for (Mode md : {Mode::FiniteZ4, Mode::Infinite}) {
      auto c = GroupCtx::create(n, md);
      for (std::uint64_t s = 0; s < 400; ++s) {
        const Word w1 = random_word(*c, s % 11, 2 * s + 1), w2 = random_word(*c, (7 * s) % 13, 2 * s + 2);
        const Element x = normalize(w1, c), y = normalize(w2, c);
        const Word w = w1.concat(w2);
        REQUIRE(normalize(w, c) == x * y);
        REQUIRE(normalize(w, c, CollectionOrder::rightmost) == x * y);
        REQUIRE(normalize(w1.inverse(), c) == inverse(x));
      }
    }
}

TEST_CASE("collection of normal-form words is the identity map", "[oracle][property]") {
  // reading an element's normal form back as a word returns the element
  for (int n : {3, 4}) {
    auto c = GroupCtx::create(n, Mode::Infinite);
    SplitMix64 g(static_cast<std::uint64_t>(n));
    for (int r = 0; r < 200; ++r) {
      Element x(c);
      for (auto& v : x.mutable_z()) v = static_cast<long long>(g.below(9)) - 4;
      std::string w;
      for (int i = 1; i <= n; ++i)
        if (x.z(static_cast<std::size_t>(i - 1)) != 0)
          w += " a" + std::to_string(i) + "^" + x.z(static_cast<std::size_t>(i - 1)).str();
      for (int i = 1; i <= n; ++i)
        if (x.z(static_cast<std::size_t>(n + i - 1)) != 0)
          w += " b" + std::to_string(i) + "^" + x.z(static_cast<std::size_t>(n + i - 1)).str();
      REQUIRE(nf(w, c) == x);
    }
  }
}
