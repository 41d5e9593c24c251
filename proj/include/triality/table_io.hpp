#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loop.hpp"

namespace triality {

// CSV: |L| lines of |L| comma-separated indices, row a holding a*b.
//
// Binary: "MLTB", uint32 |L|, uint8 index width (1, 2 or 4 bytes), three
// zero bytes, then |L|^2 row-major indices.  All integers little-endian.

inline void write_csv(std::ostream& os, const LoopTable& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) os << ',';
      os << t.mul(a, b);
    }
    os << '\n';
  }
}

inline LoopTable read_csv(std::istream& is, LoopTable::Check check = LoopTable::Check::validate) {
  std::vector<std::uint32_t> data;
  std::string line;
  std::size_t rows = 0, width = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      unsigned long v = std::stoul(cell, &used);
      if (used != cell.size()) throw std::invalid_argument("bad CSV cell '" + cell + "'");
      data.push_back(static_cast<std::uint32_t>(v));
      ++cols;
    }
    if (rows == 0) width = cols;
    if (cols != width) throw std::invalid_argument("CSV rows have different lengths");
    ++rows;
  }
  if (rows != width) throw std::invalid_argument("CSV table is not square");
  return LoopTable(rows, std::move(data), {}, {}, check);
}

inline unsigned index_width(std::size_t n) { return n <= 256 ? 1 : n <= 65536 ? 2 : 4; }

inline void write_binary(std::ostream& os, const LoopTable& t) {
  const std::size_t n = t.size();
  const unsigned w = index_width(n);
  auto put = [&](std::uint64_t v, unsigned bytes) {
    for (unsigned k = 0; k < bytes; ++k) os.put(static_cast<char>((v >> (8 * k)) & 0xFF));
  };
  os.write("MLTB", 4);
  put(n, 4);
  put(w, 1);
  put(0, 3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) put(t.mul(a, b), w);
}

inline LoopTable read_binary(std::istream& is, LoopTable::Check check = LoopTable::Check::validate) {
  auto get = [&](unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned k = 0; k < bytes; ++k) {
      int c = is.get();
      if (c == EOF) throw std::runtime_error("truncated loop table");
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * k);
    }
    return v;
  };
  char magic[4];
  if (!is.read(magic, 4) || std::string(magic, 4) != "MLTB") throw std::runtime_error("not a binary loop table");
  const std::size_t n = get(4);
  const unsigned w = static_cast<unsigned>(get(1));
  if (w != 1 && w != 2 && w != 4) throw std::runtime_error("bad index width");
  get(3);
  if (n == 0 || n > (std::size_t{1} << 16)) throw std::runtime_error("bad loop order");
  std::vector<std::uint32_t> data(n * n);
  for (auto& v : data) v = static_cast<std::uint32_t>(get(w));
  return LoopTable(n, std::move(data), {}, {}, check);
}

}  // namespace triality
