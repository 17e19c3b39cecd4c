#include "alphax/graph6.hpp"

#include "alphax/errors.hpp"

namespace alphax {
namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t body_length(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw DomainError("graph6 encoding supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  for (std::size_t i = 0; i < text.size(); ++i) {
    int byte = static_cast<unsigned char>(text[i]);
    if (byte < kBias || byte > kMaxByte)
      throw ParseError("graph6 byte out of range 63-126", i);
  }
  int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kGraph6MaxOrder) throw ParseError("multi-byte graph6 order header not supported", 0);

  std::size_t expected = 1 + body_length(n);
  if (text.size() != expected)
    throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " +
                         std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                     std::min(text.size(), expected));

  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits in the last byte must be zero.
  if (bit % 6 != 0) {
    int byte = static_cast<unsigned char>(text.back()) - kBias;
    if (byte & ((1 << (6 - bit % 6)) - 1))
      throw ParseError("nonzero graph6 padding bits", text.size() - 1);
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.detail(), e.offset());
    }
  }
  return out;
}

}  // namespace alphax
