#include "bookfree/graph6.hpp"

#include <cstdint>

#include "bookfree/errors.hpp"

namespace bookfree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::int64_t kMaxEncodable = 258047;

void append_order(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMaxEncodable) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  const std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  out.reserve(out.size() + static_cast<std::size_t>((bits + 5) / 6));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("truncated graph6 string", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", at);
    return c - 63;
  };

  std::int64_t n = 0;
  const std::size_t order_start = pos;
  if (sextet(pos) < 63) {
    n = sextet(pos);
    pos += 1;
  } else if (sextet(pos + 1) < 63) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | sextet(pos + k);
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | sextet(pos + k);
    pos += 8;
  }
  if (n > Graph::kMaxOrder) {
    throw ParseError("graph order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(Graph::kMaxOrder),
                     order_start);
  }

  Graph g(static_cast<int>(n));
  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (data_bytes > 0) {
    std::size_t at = pos;
    int value = sextet(at);
    int bit = 5;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (bit < 0) {
          value = sextet(++at);
          bit = 5;
        }
        if ((value >> bit) & 1) g.add_edge(i, j);
        --bit;
      }
    }
    if (bit >= 0 && (value & ((1 << (bit + 1)) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 string", at);
    }
  }
  const std::size_t end = pos + data_bytes;
  if (end < text.size()) throw ParseError("trailing bytes after graph6 data", end);
  return g;
}

}  // namespace bookfree
