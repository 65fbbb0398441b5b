#include "cdv/graph6.hpp"

#include <vector>

#include "cdv/errors.hpp"

namespace cdv {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_data_byte(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }
  int bits = 0;
  int value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6 8-byte size form is beyond capacity", base + 1);
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_data_byte(text[k])) throw ParseError("invalid graph6 size byte", base + k);
      n = (n << 6) | (text[k] - kOffset);
    }
    pos = 4;
  } else {
    if (!is_data_byte(text[0])) throw ParseError("invalid graph6 size byte", base);
    n = text[0] - kOffset;
    pos = 1;
  }
  if (n == 0) throw ParseError("graph6 string encodes the null graph", base);
  if (n > kMaxVertices)
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds capacity", base);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes)
    throw ParseError("graph6 string too short for " + std::to_string(n) + " vertices",
                     base + text.size());
  if (text.size() - pos > nbytes)
    throw ParseError("trailing bytes after graph6 data", base + pos + nbytes);

  std::vector<VertexSet> rows(n);
  std::size_t bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const char c = text[pos + k];
    if (!is_data_byte(c)) throw ParseError("invalid graph6 data byte", base + pos + k);
    const int value = c - kOffset;
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("nonzero graph6 padding bits", base + pos + k);
        continue;
      }
      if (!set) continue;
      // Invert bit index -> (i, j) in column order.
      int j = 1;
      std::size_t start = 0;
      while (start + j <= bit) {
        start += j;
        ++j;
      }
      const int i = static_cast<int>(bit - start);
      rows[i].insert(j);
      rows[j].insert(i);
    }
  }
  return Graph::from_adjacency(n, rows);
}

}  // namespace cdv
