#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <triality/codec.hpp>
#include <triality/enumerate.hpp>
#include <triality/g3.hpp>
#include <triality/sample.hpp>

using namespace triality;

TEST_CASE("JSON encoding of known elements", "[codec]") {
  auto c = GroupCtx::create(3, Mode::FiniteZ4);
  const Element x = generator(c, Gen::p, {1, 2}) * generator(c, Gen::a, {1});
  CHECK(to_json(x).dump() == R"({"f":"040","mode":"z4","n":3,"z":[1,0,0,0,0,0]})");
  CHECK(fpart_hex(generator(c, Gen::u, {1, 2})) == "001");
  CHECK(fpart_hex(generator(c, Gen::t, {1, 2, 3})) == "400");
  CHECK(fpart_hex(generator(GroupCtx::create(4, Mode::FiniteZ4), Gen::t, {2, 3, 4})) == "2000000");
  CHECK(to_json(identity(GroupCtx::create(5, Mode::Infinite)))["f"] == "0000000000000");
}

TEST_CASE("JSON round trip", "[codec][property]") {
  for (int n : {3, 4, 5})
    for (Mode md : {Mode::FiniteZ4, Mode::Infinite}) {
      auto c = GroupCtx::create(n, md);
      SplitMix64 g(static_cast<std::uint64_t>(n));
      for (int r = 0; r < 200; ++r) {
        const Element x = random_element(c, g);
        REQUIRE(element_from_json(to_json(x).dump()) == x);
        REQUIRE(element_from_json(to_json(x), c) == x);
      }
    }
}

TEST_CASE("JSON carries big integers as strings", "[codec]") {
  auto c = GroupCtx::create(3, Mode::Infinite);
  const Element x = power(generator(c, Gen::b, {3}), Integer(1) << 70);
  const auto j = to_json(x);
  CHECK(j["z"][5] == "1180591620717411303424");
  CHECK(element_from_json(j) == x);
  CHECK(element_from_json(std::string(R"({"n":3,"mode":"z","z":[18446744073709551615,0,0,0,0,-4],"f":"0"})"))
            .z(0) == Integer("18446744073709551615"));
}

TEST_CASE("JSON validation", "[codec]") {
  auto bad = [](const char* s) { return element_from_json(std::string(s)); };
  CHECK_THROWS_AS(bad(R"({"n":3,"mode":"z4","z":[4,0,0,0,0,0],"f":"0"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"n":3,"mode":"z4","z":[0,0,0,0,0],"f":"0"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"n":3,"mode":"z4","z":[0,0,0,0,0,0],"f":"800"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"n":3,"mode":"z4","z":[0,0,0,0,0,0],"f":"0g"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"n":3,"mode":"q","z":[0,0,0,0,0,0],"f":"0"})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"([1,2])"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json(std::string(R"({"n":4,"mode":"z4","z":[0,0,0,0,0,0,0,0],"f":"0"})"),
                                    GroupCtx::create(3, Mode::FiniteZ4)),
                  std::invalid_argument);
}

TEST_CASE("dump records", "[codec]") {
  auto c3 = GroupCtx::create(3, Mode::FiniteZ4);
  CHECK(dump_record_bytes(*c3) == 3);
  CHECK(dump_record_bytes(*GroupCtx::create(4, Mode::FiniteZ4)) == 6);
  CHECK(dump_record_bytes(*GroupCtx::create(5, Mode::FiniteZ4)) == 9);

  // a1^3 b3 p12: bits 0,1 (a1 = 3), bit 10 (b3 = 1), bit 12 + 6 (p12)
  const Element x = power(generator(c3, Gen::a, {1}), 3) * generator(c3, Gen::b, {3}) * generator(c3, Gen::p, {1, 2});
  const auto rec = dump_record(x);
  const std::uint32_t word = rec[0] | rec[1] << 8 | rec[2] << 16;
  CHECK(word == (0x3u | 1u << 10 | 1u << 18));
  // the rank-3 record is the packed code
  SplitMix64 g(3);
  for (int r = 0; r < 500; ++r) {
    const Element y = random_element(c3, g);
    const auto b = dump_record(y);
    REQUIRE(static_cast<g3::Code>(b[0] | b[1] << 8 | b[2] << 16) == g3::from_element(y));
  }

  auto c5 = GroupCtx::create(5, Mode::FiniteZ4);
  std::stringstream ss;
  std::vector<Element> xs;
  for (int r = 0; r < 50; ++r) {
    xs.push_back(random_element(c5, g));
    write_record(ss, xs.back());
  }
  CHECK(ss.str().size() == 50 * 9);
  CHECK(read_records(ss, c5) == xs);

  std::vector<std::uint8_t> padded(9, 0);
  padded[8] = 0x80;
  CHECK_THROWS_AS(element_from_record(c5, padded.data()), std::invalid_argument);
  CHECK_THROWS_AS(dump_record(identity(GroupCtx::create(3, Mode::Infinite))), std::invalid_argument);
  std::stringstream trunc(std::string(4, '\0'));
  CHECK_THROWS(read_records(trunc, c3));
}

TEST_CASE("dump of an enumeration prefix", "[codec]") {
  auto c = GroupCtx::create(3, Mode::FiniteZ4);
  std::stringstream ss;
  for (const auto& e : enumerate(c).slice(0, 64)) write_record(ss, e);
  const auto back = read_records(ss, c);
  REQUIRE(back.size() == 64);
  CHECK(back[0].is_identity());
  for (std::size_t k = 0; k < 64; ++k) CHECK(back[k] == enumerate(c).at(k));
}
