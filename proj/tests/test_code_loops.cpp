#include <catch2/catch_amalgamated.hpp>

#include <triality/code_loops.hpp>
#include <triality/m_loop.hpp>

#include "octonions.hpp"

using namespace triality;

namespace {

const MLoop& M() {
  static const MLoop m = extract_m_set(kDefaultBudgetBits, default_jobs());
  return m;
}

const CenterBasis& basis() {
  static const CenterBasis b = center_basis(M().table, {M().x[0], M().x[1], M().x[2]});
  return b;
}

std::vector<std::size_t> gens() { return {M().x[0], M().x[1], M().x[2]}; }

}  // namespace

TEST_CASE("F2 subspaces", "[f2]") {
  F2Subspace s(5);
  CHECK(s.rank() == 0);
  CHECK(s.codim() == 5);
  CHECK(s.insert(0b00110));
  CHECK(s.insert(0b00011));
  CHECK_FALSE(s.insert(0b00101));
  CHECK(s.rank() == 2);
  CHECK(s.contains(0b00101));
  CHECK_FALSE(s.contains(0b00001));
  CHECK(s.elements() == std::vector<std::uint64_t>{0, 0b00011, 0b00101, 0b00110});
  for (std::size_t i = 0; i < s.basis().size(); ++i)
    for (std::size_t j = 0; j < s.basis().size(); ++j)
      if (i != j) CHECK((s.basis()[j] >> __builtin_ctzll(s.basis()[i]) & 1) == 0);
  CHECK(s == F2Subspace(5, {0b00101, 0b00110}));
  CHECK(F2Subspace(5, {0b11111}).contains(F2Subspace(5)));
  CHECK(s.contains(F2Subspace(5, {0b00101})));
  CHECK_FALSE(F2Subspace(5, {0b00101}).contains(s));
  CHECK_THROWS_AS(s.insert(0b100000), std::invalid_argument);
  CHECK_THROWS_AS(F2Subspace(64), std::length_error);
  CHECK(F2Subspace::bits(0b101, 4) == "1010");
  CHECK(F2Subspace::parse_bits("1010") == 0b101);
  CHECK_THROWS_AS(F2Subspace::parse_bits("10a"), std::invalid_argument);
}

TEST_CASE("characteristic vectors", "[code_loops]") {
  CHECK(center_dim(3) == 7);
  CHECK(center_dim(4) == 14);
  CHECK(center_dim(5) == 25);
  const auto lam = CharacteristicVector::parse("0000001");
  CHECK(lam.n() == 3);
  CHECK(lam.lambda(1, 2, 3));
  CHECK_FALSE(lam.lambda(1));
  CHECK(lam.to_string() == "0000001");
  const auto l4 = CharacteristicVector::parse("10000100000001");
  CHECK(l4.n() == 4);
  CHECK(l4.lambda(1));
  CHECK(l4.lambda(1, 3));
  CHECK(l4.lambda(2, 3, 4));
  CHECK_FALSE(l4.lambda(1, 2, 4));
  CHECK_THROWS_AS(CharacteristicVector::parse("000000"), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicVector::parse("00000x1"), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicVector(3, 128), std::invalid_argument);
}

TEST_CASE("hyperplanes and functionals", "[code_loops][property]") {
  CHECK_THROWS_AS(hyperplane(CharacteristicVector(3, 0)), std::invalid_argument);
  for (std::uint64_t l = 1; l < 128; ++l) {
    const CharacteristicVector lam(3, l);
    const auto T = hyperplane(lam);
    REQUIRE(T.codim() == 1);
    for (auto v : T.elements()) REQUIRE(__builtin_popcountll(v & l) % 2 == 0);
    REQUIRE(functional_of(T, 3) == lam);
  }
  for (std::uint64_t l : {1ull, 0x2A5ull, 0x3FFFull, 0x2000ull}) {
    const CharacteristicVector lam(4, l);
    REQUIRE(functional_of(hyperplane(lam), 4) == lam);
  }
  CHECK_THROWS_AS(functional_of(F2Subspace(7), 3), std::invalid_argument);
}

TEST_CASE("code loops as quotients of M", "[code_loops]") {
  const auto& t = M().table;
  const auto lam = CharacteristicVector::parse("0000001");
  const CodeLoop q = pi_lambda(t, basis(), gens(), lam);
  CHECK(q.size() == 16);
  CHECK(q.reps.size() == 16);
  CHECK(q.well_defined);
  CHECK(q.checked_pairs == 1024u * 1024u);
  CHECK_FALSE(is_associative(q.table));
  CHECK(is_code_loop(q.table));
  CHECK(characteristic_vector(q) == lam);
  CHECK(q.table.generators().size() == 3);
  // the quotient map is a homomorphism onto the table
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) REQUIRE(q(t.mul(x, y)) == q.table.mul(q(x), q(y)));
  for (std::size_t k = 0; k < q.reps.size(); ++k) CHECK(q(q.reps[k]) == k);

  // lambda_123 = 0 puts the associators in the kernel
  const CodeLoop g = pi_lambda(t, basis(), gens(), CharacteristicVector::parse("1000000"));
  CHECK(g.size() == 16);
  CHECK(is_associative(g.table));
  CHECK(characteristic_vector(g) == CharacteristicVector::parse("1000000"));

  const CodeLoop s = pi_lambda(t, basis(), gens(), lam, QuotientOptions{5000, 9});
  CHECK(s.well_defined);
  CHECK(s.checked_pairs == 5000);
  CHECK(s.table == q.table);

  CHECK_THROWS_AS(pi_lambda(t, basis(), gens(), CharacteristicVector::parse("10000100000001")),
                  std::invalid_argument);
  CHECK_THROWS_AS(quotient(t, basis(), F2Subspace(7), gens()), std::invalid_argument);
  QuotientOptions small;
  small.max_base_size = 512;
  CHECK_THROWS_AS(pi_lambda(t, basis(), gens(), lam, small), std::length_error);
}

TEST_CASE("associator subloop of M", "[code_loops]") {
  const auto U = associator_subloop(M().table, default_jobs());
  CHECK(U == std::vector<std::size_t>{0, 512});
}

TEST_CASE("characteristic vectors of known loops", "[code_loops][oracle]") {
  const LoopTable o = testing_support::octonion_units();
  CHECK(is_code_loop(o));
  CHECK(characteristic_vector(o, o.generators()).to_string() == "1111111");
  const LoopTable e3 = elementary_abelian(3);
  CHECK(is_code_loop(e3));
  CHECK(characteristic_vector(e3, e3.generators()).is_zero());
  CHECK_THROWS_AS(characteristic_vector(o, {1, 2}), std::invalid_argument);
  CHECK_FALSE(is_code_loop(cyclic(8)));
  const LoopTable z4 = cyclic(4);
  CHECK(characteristic_vector(z4, {1}).to_string() == "1");
}
