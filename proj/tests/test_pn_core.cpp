#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <triality/element.hpp>
#include <triality/enumerate.hpp>
#include <triality/g3.hpp>
#include <triality/oracle.hpp>
#include <triality/sample.hpp>

using namespace triality;

namespace {

CtxPtr z4(int n) { return GroupCtx::create(n, Mode::FiniteZ4); }
CtxPtr zz(int n) { return GroupCtx::create(n, Mode::Infinite); }

Element gen(const CtxPtr& c, Gen g, std::vector<int> idx) { return generator(c, g, idx); }

std::vector<int> zvec(const Element& x) {
  std::vector<int> v;
  for (const auto& z : x.zpart()) v.push_back(static_cast<int>(z));
  return v;
}

std::vector<std::size_t> fbits(const Element& x) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < x.fpart().size(); ++k)
    if (x.f(k)) v.push_back(k);
  return v;
}

}  // namespace

TEST_CASE("fpart size follows the binomial formula", "[ctx]") {
  CHECK(fpart_size(3) == 11);
  CHECK(fpart_size(4) == 26);
  CHECK(fpart_size(5) == 50);
  for (std::size_t n = 3; n <= 12; ++n) {
    // count the symbols directly
    std::size_t pairs = 0, triples = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ++pairs;
        for (std::size_t k = j + 1; k < n; ++k) ++triples;
      }
    CHECK(fpart_size(n) == 3 * pairs + 2 * triples);
  }
  CHECK(z4(4)->order_bits() == 42);
  CHECK(z4(5)->order_bits() == 70);
}

TEST_CASE("layout is a bijection in block order", "[ctx]") {
  for (int n : {3, 4, 5, 6}) {
    auto c = z4(n);
    std::set<std::size_t> seen;
    std::size_t expect = 0;
    for (Gen g : {Gen::u, Gen::v, Gen::p})
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto pos = c->position(g, {i, j});
          CHECK(pos == expect++);
          seen.insert(pos);
        }
    for (Gen g : {Gen::z, Gen::t})
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            auto pos = c->position(g, {i, j, k});
            CHECK(pos == expect++);
            seen.insert(pos);
          }
    CHECK(seen.size() == c->m());
  }
  auto c3 = z4(3);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < c3->m(); ++k) names.push_back(c3->fsymbol(k));
  CHECK(names == std::vector<std::string>{"u12", "u13", "u23", "v12", "v13", "v23", "p12", "p13", "p23", "z123", "t123"});
}

TEST_CASE("contexts reject bad ranks and indices", "[ctx]") {
  CHECK_THROWS_AS(GroupCtx::create(2, Mode::FiniteZ4), std::invalid_argument);
  auto c = z4(3);
  CHECK_THROWS_AS(generator(c, Gen::a, {4}), std::out_of_range);
  CHECK_THROWS_AS(generator(c, Gen::a, {0}), std::out_of_range);
  CHECK_THROWS_AS(generator(c, Gen::p, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generator(c, Gen::z, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(generator(c, Gen::u, {1}), std::invalid_argument);
  CHECK_THROWS(multiply(gen(z4(3), Gen::a, {1}), gen(z4(4), Gen::a, {1})));
}

TEST_CASE("identity and generators", "[pn]") {
  auto c = z4(3);
  const Element e = identity(c);
  CHECK(zvec(e) == std::vector<int>(6, 0));
  CHECK(fbits(e).empty());
  CHECK(e.is_identity());
  const Element a1 = gen(c, Gen::a, {1});
  CHECK(zvec(a1) == std::vector<int>{1, 0, 0, 0, 0, 0});
  CHECK(fbits(a1).empty());
  CHECK(e * a1 == a1);
  CHECK(a1 * e == a1);
  CHECK(inverse(e) == e);
  // p12 is x13 of the 17-tuple, i.e. fpart position 13 - 7
  CHECK(fbits(gen(c, Gen::p, {1, 2})) == std::vector<std::size_t>{6});
  CHECK(fbits(gen(z4(4), Gen::t, {2, 3, 4})) == std::vector<std::size_t>{25});
}

TEST_CASE("products of generators", "[pn]") {
  for (auto c : {z4(3), zz(3)}) {
    const Element a1 = gen(c, Gen::a, {1}), a2 = gen(c, Gen::a, {2}), b1 = gen(c, Gen::b, {1}),
                  b2 = gen(c, Gen::b, {2});
    const Element a2a1 = a2 * a1;
    CHECK(zvec(a2a1) == std::vector<int>{1, 1, 0, 0, 0, 0});
    CHECK(fbits(a2a1) == std::vector<std::size_t>{c->position(Gen::u, {1, 2})});
    const Element b2a1 = b2 * a1;
    CHECK(zvec(b2a1) == std::vector<int>{1, 0, 0, 0, 1, 0});
    CHECK(fbits(b2a1) == std::vector<std::size_t>{c->position(Gen::p, {1, 2})});
    const Element a1b1 = a1 * b1;
    CHECK(zvec(a1b1) == std::vector<int>{1, 0, 0, 1, 0, 0});
    CHECK(fbits(a1b1).empty());
  }
}

TEST_CASE("inverse, power, commutator", "[pn]") {
  auto c = z4(3);
  const Element a1 = gen(c, Gen::a, {1});
  CHECK(zvec(inverse(a1)) == std::vector<int>{3, 0, 0, 0, 0, 0});
  CHECK(fbits(inverse(a1)).empty());
  CHECK(inverse(gen(c, Gen::p, {1, 2})) == gen(c, Gen::p, {1, 2}));
  CHECK(commutator(a1, gen(c, Gen::b, {2})) == gen(c, Gen::p, {1, 2}));
  CHECK(commutator(gen(c, Gen::p, {1, 2}), gen(c, Gen::a, {3})) == gen(c, Gen::z, {1, 2, 3}));
  CHECK(power(a1, 4).is_identity());
  CHECK(power(gen(c, Gen::b, {2}), 4).is_identity());

  auto ci = zz(3);
  const Element a1i = gen(ci, Gen::a, {1});
  CHECK(zvec(power(a1i, 4)) == std::vector<int>{4, 0, 0, 0, 0, 0});
  CHECK(zvec(inverse(a1i)) == std::vector<int>{-1, 0, 0, 0, 0, 0});
  CHECK(power(a1i, -3) == inverse(power(a1i, 3)));
}

TEST_CASE("centrality", "[pn]") {
  auto c = z4(3);
  CHECK(is_central(gen(c, Gen::u, {1, 2})));
  CHECK(is_central(gen(c, Gen::v, {1, 3})));
  CHECK_FALSE(is_central(gen(c, Gen::p, {1, 2})));
  CHECK(is_central(gen(c, Gen::z, {1, 2, 3})));
  CHECK(is_central(gen(c, Gen::t, {1, 2, 3})));
  CHECK_FALSE(is_central(gen(c, Gen::a, {1})));
  // the product only sees exponent parities, so even powers are central
  CHECK(is_central(power(gen(c, Gen::a, {1}), 2)));
  CHECK(is_central(power(gen(zz(3), Gen::b, {2}), 6)));
  CHECK_FALSE(is_central(power(gen(zz(3), Gen::a, {1}), 3)));
}

TEST_CASE("group laws on random elements", "[pn][property]") {
  for (int n : {3, 4, 5})
    for (Mode md : {Mode::FiniteZ4, Mode::Infinite}) {
      auto c = GroupCtx::create(n, md);
      SplitMix64 g(static_cast<std::uint64_t>(100 * n + static_cast<int>(md)));
      for (int r = 0; r < 300; ++r) {
        const Element x = random_element(c, g), y = random_element(c, g), z = random_element(c, g);
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE((x * inverse(x)).is_identity());
        REQUIRE((inverse(x) * x).is_identity());
        REQUIRE(inverse(x * y) == inverse(y) * inverse(x));
        REQUIRE(conjugate(x, y) == inverse(y) * x * y);
        REQUIRE(commutator(x, y) == inverse(x) * inverse(y) * x * y);
        REQUIRE(power(x, 3) == x * x * x);
      }
    }
}

TEST_CASE("class 3: commutators of weight four vanish", "[pn][property]") {
  auto c = zz(4);
  SplitMix64 g(5);
  for (int r = 0; r < 200; ++r) {
    const Element x = random_element(c, g), y = random_element(c, g), z = random_element(c, g),
                  w = random_element(c, g);
    REQUIRE(commutator(commutator(commutator(x, y), z), w).is_identity());
  }
}

TEST_CASE("finite mode is the quotient of infinite mode", "[pn][property]") {
  auto ci = zz(4), cf = z4(4);
  SplitMix64 g(17);
  auto reduce = [&](const Element& x) {
    Element r(cf);
    for (std::size_t k = 0; k < x.zpart().size(); ++k) {
      Integer v = x.z(k);
      reduce_mod4(v);
      r.mutable_z()[k] = v;
    }
    for (std::size_t k = 0; k < x.fpart().size(); ++k) r.mutable_f()[k] = x.f(k);
    return r;
  };
  for (int r = 0; r < 300; ++r) {
    const Element x = random_element(ci, g, 1000), y = random_element(ci, g, 1000);
    REQUIRE(reduce(x * y) == reduce(x) * reduce(y));
  }
}

TEST_CASE("infinite mode handles large exponents", "[pn]") {
  auto c = zz(3);
  Element x = gen(c, Gen::a, {1}) * gen(c, Gen::b, {2});
  const Integer big = Integer(1) << 80;
  const Element p = power(x, big);
  CHECK(p.z(0) == big);
  CHECK(p.z(4) == big);
  CHECK((power(x, big + 1)) == p * x);
}

TEST_CASE("enumeration", "[enumerate]") {
  auto c = z4(3);
  const ElementRange r = enumerate(c);
  CHECK(r.size() == (std::uint64_t{1} << 23));
  CHECK(r.begin() != r.end());
  CHECK((*r.begin()).is_identity());
  // ranks and packed codes are both bijections onto the group
  std::set<g3::Code> codes;
  for (std::uint64_t k = 0; k < 5000; ++k) codes.insert(g3::from_element(r.at(k * 1677 % r.total())));
  CHECK(codes.size() == 5000);
  std::uint64_t count = 0;
  for (const auto& e : r.slice(1000, 1100)) {
    CHECK(e == r.at(1000 + count));
    ++count;
  }
  CHECK(count == 100);
  CHECK_THROWS_AS(enumerate(z4(4)), std::length_error);
  CHECK_THROWS_AS(enumerate(zz(3)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(c, 20), std::length_error);
}
