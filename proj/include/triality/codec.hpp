#pragma once

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "element.hpp"

namespace triality {

// JSON form: {"n":3,"mode":"z4","z":[...],"f":"<hex>"}.  The hex string is
// the integer sum f_k 2^k written most significant digit first, padded to
// ceil(m/4) digits, so the first layout position is the lowest bit.

inline std::string fpart_hex(const Element& x) {
  const std::size_t m = x.ctx().m();
  const std::size_t digits = (m + 3) / 4;
  std::string s(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      std::size_t k = 4 * d + b;
      if (k < m && x.f(k)) v |= 1u << b;
    }
    s[digits - 1 - d] = "0123456789abcdef"[v];
  }
  return s;
}

inline std::vector<std::uint8_t> parse_fpart_hex(const std::string& hex, std::size_t m) {
  std::vector<std::uint8_t> f(m, 0);
  const std::size_t len = hex.size();
  for (std::size_t d = 0; d < len; ++d) {
    char c = hex[len - 1 - d];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = static_cast<unsigned>(c - 'A' + 10);
    else
      throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
    for (std::size_t b = 0; b < 4; ++b) {
      if (!(v >> b & 1)) continue;
      std::size_t k = 4 * d + b;
      if (k >= m) throw std::invalid_argument("fpart hex has bits beyond m");
      f[k] = 1;
    }
  }
  return f;
}

inline nlohmann::json to_json(const Element& x) {
  nlohmann::json j;
  j["n"] = x.n();
  j["mode"] = mode_name(x.ctx().mode());
  auto z = nlohmann::json::array();
  for (const auto& v : x.zpart()) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      z.push_back(static_cast<std::int64_t>(v));
    else
      z.push_back(v.str());
  }
  j["z"] = z;
  j["f"] = fpart_hex(x);
  return j;
}

/// Parses an element.  If ctx is given it must match the n/mode fields.
inline Element element_from_json(const nlohmann::json& j, CtxPtr ctx = nullptr) {
  if (!j.is_object()) throw std::invalid_argument("element JSON must be an object");
  int n = j.at("n").get<int>();
  Mode mode = parse_mode(j.value("mode", std::string("z4")));
  if (!ctx)
    ctx = GroupCtx::create(n, mode);
  else if (ctx->n() != n || ctx->mode() != mode)
    throw std::invalid_argument("element JSON does not match the requested group");
  const auto& zj = j.at("z");
  if (!zj.is_array() || zj.size() != ctx->zsize())
    throw std::invalid_argument("z must be an array of " + std::to_string(ctx->zsize()) + " integers");
  std::vector<Integer> z;
  for (const auto& v : zj) {
    if (v.is_number_unsigned())
      z.emplace_back(v.get<std::uint64_t>());
    else if (v.is_number_integer())
      z.emplace_back(v.get<std::int64_t>());
    else if (v.is_string())
      z.emplace_back(v.get<std::string>());
    else
      throw std::invalid_argument("z entries must be integers");
  }
  if (ctx->finite())
    for (const auto& v : z)
      if (v < 0 || v > 3) throw std::invalid_argument("z4 mode requires zpart entries in 0..3");
  return Element(ctx, std::move(z), parse_fpart_hex(j.at("f").get<std::string>(), ctx->m()));
}

inline Element element_from_json(const std::string& text, CtxPtr ctx = nullptr) {
  return element_from_json(nlohmann::json::parse(text), std::move(ctx));
}

// Dump records: little-endian, ceil((4n+m)/8) bytes.  Bits 2k,2k+1 hold
// zpart entry k; bit 4n+k holds layout position k.

inline std::size_t dump_record_bytes(const GroupCtx& ctx) { return (ctx.order_bits() + 7) / 8; }

inline std::vector<std::uint8_t> dump_record(const Element& x) {
  const GroupCtx& ctx = x.ctx();
  if (!ctx.finite()) throw std::invalid_argument("dump records exist only in the z4 mode");
  std::vector<std::uint8_t> out(dump_record_bytes(ctx), 0);
  auto set = [&](std::size_t bit) { out[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8)); };
  for (std::size_t k = 0; k < ctx.zsize(); ++k) {
    unsigned v = static_cast<unsigned>(x.z(k));
    if (v & 1) set(2 * k);
    if (v & 2) set(2 * k + 1);
  }
  for (std::size_t k = 0; k < ctx.m(); ++k)
    if (x.f(k)) set(4 * static_cast<std::size_t>(ctx.n()) + k);
  return out;
}

inline Element element_from_record(const CtxPtr& ctx, const std::uint8_t* rec) {
  auto get = [&](std::size_t bit) -> unsigned { return rec[bit / 8] >> (bit % 8) & 1u; };
  const std::size_t used = ctx->order_bits();
  for (std::size_t bit = used; bit < 8 * dump_record_bytes(*ctx); ++bit)
    if (get(bit)) throw std::invalid_argument("dump record has padding bits set");
  Element e(ctx);
  for (std::size_t k = 0; k < ctx->zsize(); ++k) e.mutable_z()[k] = get(2 * k) | get(2 * k + 1) << 1;
  for (std::size_t k = 0; k < ctx->m(); ++k)
    e.mutable_f()[k] = static_cast<std::uint8_t>(get(4 * static_cast<std::size_t>(ctx->n()) + k));
  return e;
}

inline void write_record(std::ostream& os, const Element& x) {
  auto r = dump_record(x);
  os.write(reinterpret_cast<const char*>(r.data()), static_cast<std::streamsize>(r.size()));
}

inline std::vector<Element> read_records(std::istream& is, const CtxPtr& ctx) {
  const std::size_t w = dump_record_bytes(*ctx);
  std::vector<std::uint8_t> buf(w);
  std::vector<Element> out;
  while (is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(w)))
    out.push_back(element_from_record(ctx, buf.data()));
  if (is.gcount() != 0) throw std::runtime_error("truncated dump record");
  return out;
}

}  // namespace triality
