#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <triality/identities.hpp>
#include <triality/loop.hpp>
#include <triality/table_io.hpp>

#include "octonions.hpp"

using namespace triality;
using testing_support::octonion_units;

namespace {

// a non-associative loop of order 5 (every Moufang loop of order 5 is a group)
LoopTable order5() {
  return LoopTable(5, {0, 1, 2, 3, 4,  //
                       1, 0, 3, 4, 2,  //
                       2, 4, 0, 1, 3,  //
                       3, 2, 4, 0, 1,  //
                       4, 3, 1, 2, 0});
}

LoopTable swap_rows(const LoopTable& t, std::size_t a, std::size_t b) {
  auto d = t.data();
  const std::size_t n = t.size();
  for (std::size_t k = 0; k < n; ++k) std::swap(d[a * n + k], d[b * n + k]);
  return LoopTable(n, std::move(d), {}, {}, LoopTable::Check::none);
}

bool left_moufang(const LoopTable& l, std::size_t x, std::size_t y, std::size_t z) {
  return l.mul(l.mul(l.mul(x, y), x), z) == l.mul(x, l.mul(y, l.mul(x, z)));
}

}  // namespace

TEST_CASE("table validation", "[loop]") {
  CHECK_THROWS_AS(LoopTable(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(LoopTable(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LoopTable(2, {0, 1, 1, 2}), std::out_of_range);
  CHECK_THROWS_AS(LoopTable(2, {1, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LoopTable(3, {0, 1, 2, 1, 1, 0, 2, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LoopTable(2, {0, 1, 1, 0}, {7}), std::invalid_argument);
  CHECK_THROWS_AS(LoopTable(2, {0, 1, 1, 0}, {}, {2}), std::out_of_range);
  const LoopTable loose(2, {1, 0, 0, 1}, {}, {}, LoopTable::Check::none);
  CHECK(loose.is_latin());
  const LoopTable broken(2, {0, 1, 0, 1}, {}, {}, LoopTable::Check::none);
  CHECK_FALSE(broken.is_latin());
  CHECK_THROWS_AS(broken.ldiv(0, 0), std::logic_error);
}

TEST_CASE("small groups", "[loop]") {
  const LoopTable z8 = cyclic(8);
  CHECK(z8.size() == 8);
  CHECK(z8.mul(5, 6) == 3);
  CHECK(z8.ldiv(5, 3) == 6);
  CHECK(inv(z8, 3) == 5);
  CHECK(power(z8, 3, 3) == 1);
  CHECK(power(z8, 3, -1) == 5);
  CHECK(is_associative(z8));
  CHECK(center(z8).size() == 8);
  CHECK(generated_subloop(z8, {2}) == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(squares(z8) == std::vector<std::size_t>{0, 2, 4, 6});

  const LoopTable e3 = elementary_abelian(3);
  CHECK(e3.size() == 8);
  CHECK(e3.generators() == std::vector<std::size_t>{1, 2, 4});
  CHECK(squares(e3) == std::vector<std::size_t>{0});
  CHECK(generated_subloop(e3, {1, 2}).size() == 4);
  CHECK(commutator(e3, 3, 5) == 0);
  CHECK(associator(e3, 3, 5, 6) == 0);
  for (auto w : {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle}) {
    CHECK(check_moufang(e3, w, Scope::all()).passed());
    CHECK(check_moufang(z8, w, Scope::all()).passed());
  }
}

TEST_CASE("octonion units form a Moufang loop", "[loop][oracle]") {
  const LoopTable o = octonion_units();
  CHECK(o.size() == 16);
  CHECK_FALSE(is_associative(o));
  CHECK(o.mul(1, 2) == 4);
  CHECK(o.mul(2, 1) == 12);
  CHECK(o.mul(3, 3) == 8);
  for (auto w : {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle}) {
    const auto r = check_moufang(o, w, Scope::all());
    CHECK(r.passed());
    CHECK(r.checked == 4096);
    CHECK(r.exhaustive);
  }
  CHECK(center(o) == std::vector<std::size_t>{0, 8});
  CHECK(nucleus(o) == std::vector<std::size_t>{0, 8});
  CHECK(squares(o) == std::vector<std::size_t>{0, 8});
  CHECK(commutator(o, 1, 2) == 8);
  CHECK(associator(o, 1, 2, 3) == 8);
  CHECK(associator(o, 1, 2, 4) == 0);
  // e1, e2 generate the quaternion group
  const auto q = generated_subloop(o, {1, 2});
  CHECK(q == std::vector<std::size_t>{0, 1, 2, 4, 8, 9, 10, 12});
  CHECK(generated_subloop(o, {1, 2, 4}).size() == 8);
  CHECK(generated_subloop(o, {1, 2, 3}).size() == 16);
  CHECK_THROWS_AS(generated_subloop(o, {16}), std::out_of_range);
  for (std::size_t a = 0; a < 16; ++a) CHECK(o.mul(a, inv(o, a)) == 0);

  const LoopTable t = to_table(o, {1, 2, 3});
  CHECK(t == o);
  CHECK(t.generators() == o.generators());
}

TEST_CASE("loop elements", "[loop]") {
  const LoopTable o = octonion_units();
  const LoopElem e1{&o, 1}, e2{&o, 2}, e3{&o, 3};
  CHECK(loop_mul(e1, e2) == LoopElem{&o, 4});
  CHECK(loop_inv(e1) == LoopElem{&o, 9});
  CHECK(loop_commutator(e1, e2) == LoopElem{&o, 8});
  CHECK(loop_associator(e1, e2, e3) == LoopElem{&o, 8});
  const LoopTable z4 = cyclic(4);
  CHECK_THROWS_AS(loop_mul(e1, LoopElem{&z4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(loop_inv(LoopElem{}), std::invalid_argument);
}

TEST_CASE("non-Moufang loops are caught", "[loop][identities]") {
  const LoopTable l5 = order5();
  CHECK_FALSE(is_associative(l5));
  const auto r = check_moufang(l5, MoufangIdentity::left, Scope::all());
  REQUIRE_FALSE(r.passed());
  const auto& ce = *r.counterexample;
  CHECK_FALSE(left_moufang(l5, ce[0], ce[1], ce[2]));
  // the reported tuple is the lexicographically first failure
  std::uint64_t rank = 0;
  bool found = false;
  for (std::size_t x = 0; x < 5 && !found; ++x)
    for (std::size_t y = 0; y < 5 && !found; ++y)
      for (std::size_t z = 0; z < 5 && !found; ++z, ++rank)
        if (!left_moufang(l5, x, y, z)) {
          found = true;
          CHECK(ce == std::vector<std::size_t>{x, y, z});
          CHECK(r.checked == rank + 1);
        }

  const LoopTable bad = swap_rows(octonion_units(), 3, 5);
  CHECK_THROWS_AS(LoopTable(16, bad.data()), std::invalid_argument);
  const auto one = check_moufang(bad, MoufangIdentity::left, Scope::sampled(300000), 7, 1);
  REQUIRE_FALSE(one.passed());
  const auto& c = *one.counterexample;
  CHECK_FALSE(left_moufang(bad, c[0], c[1], c[2]));
  for (unsigned jobs : {2u, 5u}) {
    const auto many = check_moufang(bad, MoufangIdentity::left, Scope::sampled(300000), 7, jobs);
    CHECK(many.checked == one.checked);
    CHECK(many.counterexample == one.counterexample);
  }
  CHECK_THROWS_AS(check_moufang(bad, MoufangIdentity::left, Scope::sampled(0)), std::invalid_argument);
  CHECK(parse_moufang("middle") == MoufangIdentity::middle);
  CHECK_THROWS(parse_moufang("upper"));
}

TEST_CASE("code-loop laws on the octonion units", "[identities][oracle]") {
  const LoopTable o = octonion_units();
  for (const auto& r : check_variety_E(o, VarietyScope{5, 0})) {
    INFO(r.name);
    CHECK(r.passed());
    CHECK(r.exhaustive);
  }
  for (const auto& r : check_expansion_laws(o, VarietyScope{5, 0})) {
    INFO(r.name);
    CHECK(r.passed());
  }
  // Z8 has exponent 8, so x^4 = 1 fails first at x = 1
  const LoopTable z8 = cyclic(8);
  const auto ve = check_variety_E(z8, VarietyScope{5, 0});
  CHECK_FALSE(ve[0].passed());
  CHECK(*ve[0].counterexample == std::vector<std::size_t>{1});
}

TEST_CASE("table files round trip", "[table_io]") {
  const LoopTable o = octonion_units();
  std::stringstream csv;
  write_csv(csv, o);
  CHECK(csv.str().substr(0, 37) == "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15");
  CHECK(read_csv(csv) == o);

  std::stringstream bin;
  write_binary(bin, o);
  CHECK(bin.str().size() == 12 + 256);
  CHECK(bin.str().substr(0, 4) == "MLTB");
  CHECK(read_binary(bin) == o);

  std::vector<std::uint32_t> big(300 * 300);
  for (std::size_t a = 0; a < 300; ++a)
    for (std::size_t b = 0; b < 300; ++b) big[a * 300 + b] = static_cast<std::uint32_t>((a + b) % 300);
  const LoopTable z300(300, big);
  CHECK(index_width(300) == 2);
  std::stringstream bin2;
  write_binary(bin2, z300);
  CHECK(bin2.str().size() == 12 + 2 * 90000);
  CHECK(read_binary(bin2) == z300);

  std::stringstream nomagic("XXXX0000");
  CHECK_THROWS(read_binary(nomagic));
  std::stringstream trunc(bin.str().substr(0, 100));
  CHECK_THROWS(read_binary(trunc));
  std::stringstream ragged("0,1\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), std::invalid_argument);
  std::stringstream junk("0,1\n1,x\n");
  CHECK_THROWS(read_csv(junk));
  std::stringstream crlf("0,1\r\n1,0\r\n");
  CHECK(read_csv(crlf) == cyclic(2));

  const LoopTable bad = swap_rows(o, 3, 5);
  std::stringstream s1, s2;
  write_csv(s1, bad);
  CHECK_THROWS_AS(read_csv(s1), std::invalid_argument);
  write_csv(s2, bad);
  CHECK(read_csv(s2, LoopTable::Check::none) == bad);
}
