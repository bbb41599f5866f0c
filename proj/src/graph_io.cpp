//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "btr/graph_io.h"

#include <charconv>
#include <iterator>
#include <sstream>
#include <string_view>

#include "btr/graph.h"

namespace btr {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

void put_order(std::string &out, std::uint64_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty()
         && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'
             || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, long long &out) {
  const auto *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Splits on blanks; returns false unless exactly `count` integer tokens.
bool parse_int_tokens(std::string_view line, std::size_t count,
                      std::vector<long long> &out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    if (i >= line.size())
      break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    long long v;
    if (!parse_int(line.substr(i, j - i), v))
      return false;
    out.push_back(v);
    i = j;
  }
  return out.size() == count;
}

bool significant(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() != '#';
}

}  // namespace

Graph parse_graph6(std::string_view text, int cap) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header))
    pos = kGraph6Header.size();

  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126)
      throw ParseError("byte outside the printable graph6 range", i);
  }
  if (pos >= text.size())
    throw ParseError("missing length prefix", pos);

  const std::size_t prefix_at = pos;
  std::uint64_t n = 0;
  if (text[pos] != 126) {
    n = static_cast<unsigned char>(text[pos]) - kBias;
    pos += 1;
  } else {
    const bool wide = pos + 1 < text.size() && text[pos + 1] == 126;
    const std::size_t digits = wide ? 6 : 3;
    const std::size_t start = pos + (wide ? 2 : 1);
    if (start + digits > text.size())
      throw ParseError("truncated length prefix", prefix_at);
    for (std::size_t i = 0; i < digits; ++i)
      n = (n << 6)
          | static_cast<std::uint64_t>(
              static_cast<unsigned char>(text[start + i]) - kBias);
    if ((!wide && n < 63) || (wide && n < 258048))
      throw ParseError("non-minimal length prefix", prefix_at);
    pos = start + digits;
  }
  if (n > static_cast<std::uint64_t>(cap))
    throw ParseError("order " + std::to_string(n) + " exceeds the cap "
                         + std::to_string(cap),
                     prefix_at);

  const int order = static_cast<int>(n);
  const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos < nbytes)
    throw ParseError("truncated adjacency data: expected "
                         + std::to_string(nbytes) + " bytes",
                     text.size());
  if (text.size() - pos > nbytes)
    throw ParseError("trailing garbage after adjacency data", pos + nbytes);

  const int wpr = words_for(order);
  std::vector<Word> rows(static_cast<std::size_t>(order) * wpr, 0);
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[pos + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[static_cast<std::size_t>(i) * wpr + j / kWordBits] |=
            Word { 1 } << (j % kWordBits);
        rows[static_cast<std::size_t>(j) * wpr + i / kWordBits] |=
            Word { 1 } << (i % kWordBits);
      }
    }
  }
  if (nbits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[pos + nbytes - 1]) - kBias;
    const int pad = static_cast<int>(6 - nbits % 6);
    if ((last & ((1 << pad) - 1)) != 0)
      throw ParseError("nonzero padding bits", pos + nbytes - 1);
  }
  return Graph::from_rows(order, std::move(rows), cap);
}

std::string encode_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  put_order(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream &in, int cap) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  std::vector<long long> tok;

  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (!significant(line))
      continue;
    if (n < 0) {
      if (!parse_int_tokens(line, 2, tok) || tok[0] < 0 || tok[1] < 0)
        throw ParseError("expected header \"n m\"", line_offset, lineno);
      n = tok[0];
      m = tok[1];
      if (n > cap)
        throw ParseError("order " + std::to_string(n) + " exceeds the cap "
                             + std::to_string(cap),
                         line_offset, lineno);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("trailing data after the declared edges", line_offset,
                       lineno);
    if (!parse_int_tokens(line, 2, tok))
      throw ParseError("expected edge \"u v\"", line_offset, lineno);
    if (tok[0] < 0 || tok[0] >= n || tok[1] < 0 || tok[1] >= n)
      throw ParseError("edge endpoint out of range", line_offset, lineno);
    if (tok[0] == tok[1])
      throw ParseError("self-loop", line_offset, lineno);
    edges.push_back(
        { static_cast<int>(tok[0]), static_cast<int>(tok[1]) });
  }
  if (n < 0)
    throw ParseError("empty edge list", offset, lineno);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, found "
                         + std::to_string(edges.size()),
                     offset, lineno);
  return Graph::from_edges(static_cast<int>(n), edges, cap);
}

std::string format_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge &e: g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat detect_format(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> tok;
  while (std::getline(in, line)) {
    if (!significant(line))
      continue;
    return parse_int_tokens(line, 2, tok) ? GraphFormat::kEdgeList
                                          : GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

std::vector<GraphRecord> read_graphs(std::istream &in, int cap) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<GraphRecord> out;
  if (detect_format(text) == GraphFormat::kEdgeList) {
    std::istringstream ss(text);
    std::size_t first = 1;
    for (std::string_view rest = text; !rest.empty(); ++first) {
      const auto nl = rest.find('\n');
      if (significant(rest.substr(0, nl)))
        break;
      rest = nl == std::string_view::npos ? std::string_view()
                                          : rest.substr(nl + 1);
    }
    out.push_back({ parse_edge_list(ss, cap), first });
    return out;
  }

  std::istringstream ss(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (trim(line).empty())
      continue;
    try {
      out.push_back({ parse_graph6(trim(line), cap), lineno });
    } catch (const ParseError &e) {
      throw e.at_line(lineno);
    }
  }
  return out;
}

}  // namespace btr
