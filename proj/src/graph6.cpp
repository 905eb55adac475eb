#include "asigma/graph6.hpp"

#include <stdexcept>

namespace asigma {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1U);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6 byte out of range");
  }
  std::size_t pos = 0;
  int n;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw std::invalid_argument("unsupported graph6 size field");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6 vertex count outside [1, 64]");
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes) {
    throw std::invalid_argument("graph6 length does not match vertex count");
  }
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (nbits % 6 != 0) {
    int last = text.back() - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw std::invalid_argument("graph6 padding bits set");
  }
  return Graph::from_rows(n, std::move(rows));
}

std::optional<Graph> Graph6Reader::next() {
  std::string s;
  while (std::getline(in_, s)) {
    ++line_;
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      return from_graph6(s);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace asigma
