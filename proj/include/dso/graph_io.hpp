#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

/// Malformed textual graph input. offset() is the byte (graph6) or line
/// (edge list, graph6 stream) where decoding stopped.
class ParseError : public std::runtime_error {
public:
  enum class Unit { Byte, Line };

  ParseError(const std::string& reason, std::size_t offset, Unit unit = Unit::Byte)
      : std::runtime_error(reason + (unit == Unit::Byte ? " at byte " : " at line ") + std::to_string(offset)),
        reason_(reason), offset_(offset), unit_(unit) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }
  Unit unit() const noexcept { return unit_; }

private:
  std::string reason_;
  std::size_t offset_;
  Unit unit_;
};

namespace detail {

inline std::string graph6_size_header(std::uint64_t n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  }
  return out;
}

/// Packs bits (MSB first, six per byte, zero padded) into printable bytes.
inline void append_graph6_payload(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    unsigned value = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      value <<= 1;
      if (k + b < bits.size() && bits[k + b]) value |= 1U;
    }
    out.push_back(static_cast<char>(value + 63));
  }
}

/// Upper triangle in graph6 order: x(0,1), x(0,2), x(1,2), x(0,3), ...
inline std::vector<bool> upper_triangle_bits(const Graph& g) {
  const int n = g.order();
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  }
  return bits;
}

} // namespace detail

inline std::string write_graph6(const Graph& g) {
  std::string out = detail::graph6_size_header(static_cast<std::uint64_t>(g.order()));
  detail::append_graph6_payload(out, detail::upper_triangle_bits(g));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> unsigned {
    if (at >= line.size()) throw ParseError("graph6: truncated record", at);
    const auto c = static_cast<unsigned char>(line[at]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside [63,126]", at);
    }
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (pos >= line.size()) throw ParseError("graph6: empty record", pos);
  if (static_cast<unsigned char>(line[pos]) != 126) {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < line.size() && static_cast<unsigned char>(line[pos + 1]) == 126) {
    for (std::size_t k = 0; k < 6; ++k) n = (n << 6) | sextet(pos + 2 + k);
    pos += 8;
  } else {
    for (std::size_t k = 0; k < 3; ++k) n = (n << 6) | sextet(pos + 1 + k);
    pos += 4;
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices)) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxVertices),
                     0);
  }

  const int order = static_cast<int>(n);
  const std::size_t nbits = static_cast<std::size_t>(order) * (order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() - pos < nbytes) throw ParseError("graph6: truncated payload", line.size());
  if (line.size() - pos > nbytes) throw ParseError("graph6: trailing bytes", pos + nbytes);

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order), 0);
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const unsigned value = sextet(pos + k);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = ((value >> b) & 1U) != 0;
      if (bit >= nbits) {
        if (set) throw ParseError("graph6: nonzero padding bits", pos + k);
        continue;
      }
      if (set) {
        rows[static_cast<std::size_t>(i)] |= 1ULL << j;
        rows[static_cast<std::size_t>(j)] |= 1ULL << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

/// Plain edge list: "n m" then m lines "i j" (0-based). Blank lines and
/// lines starting with '#' are skipped.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& why) { return ParseError(why, lineno, ParseError::Unit::Line); };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw bad("edge list: missing header");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) {
      throw bad("edge list: header must be \"n m\"");
    }
    std::string rest;
    if (header >> rest) throw bad("edge list: junk after header");
  }
  if (n > kMaxVertices) throw bad("edge list: n exceeds supported maximum");
  std::vector<Edge> pairs;
  for (long long k = 0; k < m; ++k) {
    if (!next_line()) throw bad("edge list: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!(row >> a >> b) || (row >> rest)) throw bad("edge list: malformed edge line");
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw bad("edge list: invalid edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (next_line()) throw bad("edge list: more lines than announced");
  return from_edge_list(static_cast<int>(n), pairs);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

} // namespace dso
