#include <catch2/catch_amalgamated.hpp>

#include <triality/embedding.hpp>
#include <triality/sample.hpp>
#include <triality/triality.hpp>

using namespace triality;

namespace {

CtxPtr z4(int n) { return GroupCtx::create(n, Mode::FiniteZ4); }

}  // namespace

TEST_CASE("triple sets", "[embedding]") {
  const TripleSet t4(4);
  CHECK(t4.size() == 4);
  CHECK(t4.triples().front() == IndexTriple{1, 2, 3});
  CHECK(t4.triples().back() == IndexTriple{2, 3, 4});
  CHECK(t4.contains({1, 2, 4}));
  CHECK_FALSE(t4.contains({1, 2, 5}));
  CHECK_FALSE(t4.contains({2, 1, 3}));
  CHECK(TripleSet(5).size() == 10);
  CHECK(TripleSet(7).size() == 35);
}

TEST_CASE("projections onto triples", "[embedding]") {
  auto c = z4(4);
  auto c3 = g3_ctx(Mode::FiniteZ4);
  CHECK(project(generator(c, Gen::a, {4}), {1, 2, 3}).is_identity());
  CHECK(project(generator(c, Gen::a, {4}), {1, 2, 4}) == generator(c3, Gen::a, {3}));
  CHECK(project(generator(c, Gen::p, {1, 2}), {1, 2, 4}) == generator(c3, Gen::p, {1, 2}));
  CHECK(project(generator(c, Gen::p, {1, 2}), {1, 3, 4}).is_identity());
  CHECK(project(generator(c, Gen::u, {2, 4}), {1, 2, 4}) == generator(c3, Gen::u, {2, 3}));
  CHECK(project(generator(c, Gen::z, {2, 3, 4}), {2, 3, 4}) == generator(c3, Gen::z, {1, 2, 3}));
  CHECK(project(generator(c, Gen::t, {1, 3, 4}), {1, 3, 4}) == generator(c3, Gen::t, {1, 2, 3}));
  CHECK(project(generator(c, Gen::z, {2, 3, 4}), {1, 2, 3}).is_identity());
  CHECK_THROWS_AS(project(identity(c), {1, 2, 5}), std::out_of_range);
  CHECK_THROWS_AS(project(identity(c), {2, 1, 3}), std::out_of_range);
}

TEST_CASE("embedding is an injective homomorphism", "[embedding][property]") {
  for (int n : {4, 5})
    for (Mode md : {Mode::FiniteZ4, Mode::Infinite}) {
      auto c = GroupCtx::create(n, md);
      CHECK(embed(identity(c)).is_identity());
      CHECK(reconstruct(ProductElement(c)).is_identity());
      SplitMix64 g(static_cast<std::uint64_t>(40 + n));
      for (int r = 0; r < 300; ++r) {
        const Element x = random_element(c, g), y = random_element(c, g);
        const ProductElement X = embed(x), Y = embed(y);
        REQUIRE(reconstruct(X) == x);
        REQUIRE(X * Y == embed(x * y));
        REQUIRE(inverse(X) == embed(inverse(x)));
        REQUIRE(commutator(X, Y) == embed(commutator(x, y)));
        for (const auto& [t, comp] : X.stored()) REQUIRE(comp == project(x, t));
      }
    }
}

TEST_CASE("product elements outside the image are rejected", "[embedding]") {
  auto c = z4(4);
  auto c3 = g3_ctx(Mode::FiniteZ4);
  ProductElement P(c);
  P.set({1, 2, 3}, generator(c3, Gen::a, {1}));
  CHECK_THROWS_AS(reconstruct(P), std::domain_error);
  P.set({1, 2, 4}, generator(c3, Gen::a, {1}));
  P.set({1, 3, 4}, generator(c3, Gen::a, {1}));
  CHECK(reconstruct(P) == generator(c, Gen::a, {1}));
  P.set({1, 2, 3}, identity(c3));
  CHECK(P.stored().size() == 2);
  CHECK_THROWS_AS(P.set({1, 2, 5}, identity(c3)), std::out_of_range);
  CHECK_THROWS_AS(P.set({1, 2, 3}, identity(c)), std::invalid_argument);
  CHECK_THROWS_AS(P.set({1, 2, 3}, identity(g3_ctx(Mode::Infinite))), std::invalid_argument);
}

TEST_CASE("automorphisms through the embedding", "[embedding][property]") {
  for (int n : {4, 5}) {
    auto c = z4(n);
    const Element a1 = generator(c, Gen::a, {1});
    CHECK(apply_auto_via_embedding(S3Element::sigma(), a1) == generator(c, Gen::b, {1}));
    CHECK(apply_auto_via_embedding(AutoWord::parse("rho^3"), a1) == a1);
    SplitMix64 g(static_cast<std::uint64_t>(n));
    for (int r = 0; r < 200; ++r) {
      const Element x = random_element(c, g);
      const ProductElement X = embed(x);
      for (auto s : S3Element::all()) {
        const Element y = apply_auto_via_embedding(s, x);
        REQUIRE(embed(y) == apply_componentwise(s, X));
        for (const auto& t : TripleSet(n)) REQUIRE(project(y, t) == rank3::apply(s, project(x, t)));
      }
    }
  }
}
