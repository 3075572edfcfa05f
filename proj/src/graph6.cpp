#include <cstddef>

#include "oddwheel/errors.hpp"
#include "oddwheel/graph.hpp"

// graph6 format: a size header followed by the upper triangle of the
// adjacency matrix in column order, x(0,1), x(0,2), x(1,2), x(0,3), ...,
// packed big-endian into 6-bit groups, each group printed as byte+63.

namespace oddwheel {

namespace {

constexpr int kMaxN = 258047;  // largest size the 4-byte header can carry

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxN) throw Graph6Error("graph6: graph too large to encode");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(const std::string& s) {
  std::size_t pos = 0;
  auto need = [&](const char* what) -> int {
    if (pos >= s.size())
      throw Graph6Error(std::string("graph6: truncated ") + what);
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte out of range");
    return c - 63;
  };
  long long n;
  int first = need("header");
  if (first < 63) {
    n = first;
  } else {
    // 126 ('~') opens the 3-byte size form; a second 126 would open the
    // 8-byte form, which is beyond this codec's capacity.
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
      throw Graph6Error("graph6: header size form not supported");
    long long a = need("header"), b = need("header"), c = need("header");
    n = (a << 12) | (b << 6) | c;
    if (n <= 62) throw Graph6Error("graph6: non-minimal header");
  }
  if (n > kMaxN) throw Graph6Error("graph6: header size out of range");
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = need("bit stream");
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) g.add_edge(i, j);
      --nbits;
    }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw Graph6Error("graph6: nonzero padding");
  if (pos != s.size()) throw Graph6Error("graph6: trailing data");
  return g;
}

}  // namespace oddwheel
