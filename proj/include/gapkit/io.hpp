// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_IO_HPP_
#define GAPKIT_IO_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gapkit/builder.hpp"
#include "gapkit/edge_list.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// File formats, selected by extension:
//   .el   plain edge list            .wel  weighted edge list
//   .graph METIS                     .mtx  Matrix Market
//   .sg   serialized binary          .wsg  serialized weighted binary
enum class GraphFileFormat {
  kEdgeList,
  kWeightedEdgeList,
  kMetis,
  kMatrixMarket,
  kSerialized,
  kSerializedWeighted,
};

inline GraphFileFormat FormatFromPath(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".el")
    return GraphFileFormat::kEdgeList;
  if (ext == ".wel")
    return GraphFileFormat::kWeightedEdgeList;
  if (ext == ".graph")
    return GraphFileFormat::kMetis;
  if (ext == ".mtx")
    return GraphFileFormat::kMatrixMarket;
  if (ext == ".sg")
    return GraphFileFormat::kSerialized;
  if (ext == ".wsg")
    return GraphFileFormat::kSerializedWeighted;
  throw ConfigError("unrecognized graph file extension: " + path);
}

namespace detail {

inline std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
      pos++;
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
      pos++;
    if (pos > start)
      tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

inline int64_t ParseInt(std::string_view tok, const std::string& path,
                        int64_t line_no, const char* what) {
  int64_t value = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(path, line_no, std::string("malformed ") + what + " '" +
                                        std::string(tok) + "'");
  return value;
}

inline NodeId ParseNodeId(std::string_view tok, const std::string& path,
                          int64_t line_no) {
  int64_t value = ParseInt(tok, path, line_no, "vertex id");
  if (value < 0)
    throw ParseError(path, line_no, "negative vertex id");
  if (value > 0xFFFFFFFFll)
    throw ParseError(path, line_no, "vertex id does not fit in 32 bits");
  return static_cast<NodeId>(value);
}

inline EdgeWeight ParseWeight(std::string_view tok, const std::string& path,
                              int64_t line_no) {
  int64_t value = ParseInt(tok, path, line_no, "edge weight");
  if (value < std::numeric_limits<EdgeWeight>::min() ||
      value > std::numeric_limits<EdgeWeight>::max())
    throw ParseError(path, line_no, "edge weight does not fit in 32 bits");
  return static_cast<EdgeWeight>(value);
}

inline bool IsCommentOrBlank(const std::string& line) {
  size_t pos = line.find_first_not_of(" \t");
  return pos == std::string::npos || line[pos] == '%' || line[pos] == '#';
}

// getline with CRLF tolerance; returns false at EOF.
inline bool GetLine(std::istream& in, std::string& line) {
  if (!std::getline(in, line))
    return false;
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  return true;
}

inline EdgeList ReadEdgeListText(std::ifstream& in, const std::string& path,
                                 bool weighted) {
  EdgeList el;
  el.weighted = weighted;
  std::string line;
  int64_t line_no = 0;
  while (GetLine(in, line)) {
    line_no++;
    if (IsCommentOrBlank(line))
      continue;
    auto tokens = SplitTokens(line);
    const size_t expected = weighted ? 3 : 2;
    if (tokens.size() != expected)
      throw ParseError(path, line_no,
                       "expected " + std::to_string(expected) +
                           " fields, found " + std::to_string(tokens.size()));
    NodeId src = ParseNodeId(tokens[0], path, line_no);
    NodeId dst = ParseNodeId(tokens[1], path, line_no);
    if (weighted)
      el.Add(src, dst, ParseWeight(tokens[2], path, line_no));
    else
      el.Add(src, dst);
  }
  return el;
}

inline EdgeList ReadMetis(std::ifstream& in, const std::string& path) {
  std::string line;
  int64_t line_no = 0;
  // Header: n m [fmt [ncon]]
  int64_t n = 0, declared_m = 0, fmt = 0, ncon = 0;
  while (true) {
    if (!GetLine(in, line))
      throw ParseError(path, line_no, "missing header line");
    line_no++;
    if (IsCommentOrBlank(line))
      continue;
    auto tokens = SplitTokens(line);
    if (tokens.size() < 2 || tokens.size() > 4)
      throw ParseError(path, line_no, "header must be 'n m [fmt [ncon]]'");
    n = ParseInt(tokens[0], path, line_no, "node count");
    declared_m = ParseInt(tokens[1], path, line_no, "edge count");
    if (tokens.size() >= 3)
      fmt = ParseInt(tokens[2], path, line_no, "format code");
    if (tokens.size() == 4)
      ncon = ParseInt(tokens[3], path, line_no, "constraint count");
    if (n < 0 || declared_m < 0)
      throw ParseError(path, line_no, "negative count in header");
    break;
  }
  const bool has_edge_weights = fmt % 10 != 0;
  const bool has_vertex_weights = (fmt / 10) % 10 != 0;
  const bool has_vertex_sizes = (fmt / 100) % 10 != 0;
  if (has_vertex_weights && ncon == 0)
    ncon = 1;

  EdgeList el;
  el.weighted = has_edge_weights;
  el.node_count = n;
  el.edges.reserve(2 * declared_m);
  int64_t vertex = 0;
  while (vertex < n) {
    if (!GetLine(in, line))
      throw ParseError(path, line_no,
                       "unexpected end of file: adjacency lines for " +
                           std::to_string(n - vertex) + " vertices missing");
    line_no++;
    // % lines are comments; blank lines are valid (vertex with no neighbors).
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '%')
      continue;
    auto tokens = SplitTokens(line);
    size_t idx = 0;
    if (has_vertex_sizes)
      idx++;
    idx += static_cast<size_t>(has_vertex_weights ? ncon : 0);
    if (idx > tokens.size())
      throw ParseError(path, line_no, "missing vertex weight fields");
    size_t remaining = tokens.size() - idx;
    if (has_edge_weights && remaining % 2 != 0)
      throw ParseError(path, line_no, "dangling neighbor without weight");
    while (idx < tokens.size()) {
      int64_t nbr = ParseInt(tokens[idx++], path, line_no, "neighbor id");
      if (nbr < 1 || nbr > n)
        throw ParseError(path, line_no, "neighbor id out of range [1, n]");
      if (has_edge_weights) {
        EdgeWeight w = ParseWeight(tokens[idx++], path, line_no);
        el.Add(static_cast<NodeId>(vertex), static_cast<NodeId>(nbr - 1), w);
      } else {
        el.Add(static_cast<NodeId>(vertex), static_cast<NodeId>(nbr - 1));
      }
    }
    vertex++;
  }
  return el;
}

inline EdgeList ReadMatrixMarket(std::ifstream& in, const std::string& path) {
  std::string line;
  int64_t line_no = 0;
  if (!GetLine(in, line))
    throw ParseError(path, 1, "missing Matrix Market banner");
  line_no++;
  std::string lowered = line;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  auto banner = SplitTokens(lowered);
  if (banner.size() < 5 || banner[0] != "%%matrixmarket" ||
      banner[1] != "matrix")
    throw ParseError(path, line_no, "not a Matrix Market matrix file");
  if (banner[2] != "coordinate")
    throw ParseError(path, line_no,
                     "only coordinate Matrix Market files are supported");
  const std::string field(banner[3]);
  if (field != "pattern" && field != "integer" && field != "real")
    throw ParseError(path, line_no, "unsupported field type '" + field + "'");
  const std::string symmetry(banner[4]);
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError(path, line_no,
                     "unsupported symmetry '" + symmetry + "'");

  int64_t rows = 0, cols = 0, nnz = 0;
  while (true) {
    if (!GetLine(in, line))
      throw ParseError(path, line_no, "missing size line");
    line_no++;
    if (IsCommentOrBlank(line))
      continue;
    auto tokens = SplitTokens(line);
    if (tokens.size() != 3)
      throw ParseError(path, line_no, "size line must be 'rows cols nnz'");
    rows = ParseInt(tokens[0], path, line_no, "row count");
    cols = ParseInt(tokens[1], path, line_no, "column count");
    nnz = ParseInt(tokens[2], path, line_no, "entry count");
    if (rows < 0 || cols < 0 || nnz < 0)
      throw ParseError(path, line_no, "negative count in size line");
    break;
  }

  EdgeList el;
  el.weighted = field != "pattern";
  el.needs_symmetrize = symmetry == "symmetric";
  el.node_count = std::max(rows, cols);
  el.edges.reserve(nnz);
  bool warned_truncation = false;
  int64_t entries = 0;
  while (entries < nnz) {
    if (!GetLine(in, line))
      throw ParseError(path, line_no,
                       "unexpected end of file: " +
                           std::to_string(nnz - entries) + " entries missing");
    line_no++;
    if (IsCommentOrBlank(line))
      continue;
    auto tokens = SplitTokens(line);
    const size_t expected = el.weighted ? 3 : 2;
    if (tokens.size() != expected)
      throw ParseError(path, line_no,
                       "expected " + std::to_string(expected) + " fields");
    int64_t i = ParseInt(tokens[0], path, line_no, "row index");
    int64_t j = ParseInt(tokens[1], path, line_no, "column index");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError(path, line_no, "entry index out of range");
    NodeId src = static_cast<NodeId>(i - 1);
    NodeId dst = static_cast<NodeId>(j - 1);
    if (!el.weighted) {
      el.Add(src, dst);
    } else if (field == "integer") {
      el.Add(src, dst, ParseWeight(tokens[2], path, line_no));
    } else {
      double value = 0;
      auto res = std::from_chars(tokens[2].data(),
                                 tokens[2].data() + tokens[2].size(), value);
      if (res.ec != std::errc() ||
          res.ptr != tokens[2].data() + tokens[2].size())
        throw ParseError(path, line_no, "malformed real value");
      EdgeWeight w = static_cast<EdgeWeight>(value);
      if (!warned_truncation && static_cast<double>(w) != value) {
        std::cerr << path << ": real weights truncated to integers\n";
        warned_truncation = true;
      }
      el.Add(src, dst, w);
    }
    entries++;
  }
  return el;
}

}  // namespace detail

// Parses a text graph file into an edge list, preserving file line order.
// METIS and Matrix Market ids are shifted from 1-based to 0-based; symmetric
// Matrix Market headers mark the list for symmetrization at build time.
inline EdgeList ReadTextGraph(const std::string& path, GraphFileFormat fmt) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open graph file: " + path);
  switch (fmt) {
    case GraphFileFormat::kEdgeList:
      return detail::ReadEdgeListText(in, path, false);
    case GraphFileFormat::kWeightedEdgeList:
      return detail::ReadEdgeListText(in, path, true);
    case GraphFileFormat::kMetis:
      return detail::ReadMetis(in, path);
    case GraphFileFormat::kMatrixMarket:
      return detail::ReadMatrixMarket(in, path);
    default:
      throw ConfigError("not a text graph format");
  }
}

// Serialized binary layout (little-endian):
//   magic "GAPB", u8 version = 1, u8 flags (bit0 directed, bit1 weighted),
//   u64 n, u64 m,
//   out_offsets   (n+1) x u64
//   out_neighbors m x u32
//   out_weights   m x i32     when weighted
//   in_offsets    (n+1) x u64 when directed
//   in_neighbors  m x u32     when directed
//   in_weights    m x i32     when directed and weighted

namespace detail {

inline constexpr char kSerializedMagic[4] = {'G', 'A', 'P', 'B'};
inline constexpr uint8_t kSerializedVersion = 1;

template <typename T>
void WriteRaw(std::ofstream& out, const T* data, size_t count) {
  out.write(reinterpret_cast<const char*>(data), count * sizeof(T));
}

template <typename T>
void ReadRaw(std::ifstream& in, const std::string& path, T* data,
             size_t count) {
  in.read(reinterpret_cast<char*>(data), count * sizeof(T));
  if (static_cast<size_t>(in.gcount()) != count * sizeof(T))
    throw TruncatedError(path + ": truncated array data");
}

template <typename Src, typename Stored>
void WriteArrayAs(std::ofstream& out, const std::vector<Src>& src) {
  std::vector<Stored> tmp(src.begin(), src.end());
  WriteRaw(out, tmp.data(), tmp.size());
}

}  // namespace detail

inline void WriteSerialized(const CsrGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw ConfigError("cannot open file for writing: " + path);
  out.write(detail::kSerializedMagic, 4);
  uint8_t version = detail::kSerializedVersion;
  uint8_t flags = (g.directed() ? 1 : 0) | (g.weighted() ? 2 : 0);
  detail::WriteRaw(out, &version, 1);
  detail::WriteRaw(out, &flags, 1);
  uint64_t n = static_cast<uint64_t>(g.num_nodes());
  uint64_t m = static_cast<uint64_t>(g.num_edges());
  detail::WriteRaw(out, &n, 1);
  detail::WriteRaw(out, &m, 1);
  detail::WriteArrayAs<int64_t, uint64_t>(out, g.out_offsets());
  detail::WriteRaw(out, g.out_neighbors().data(), g.out_neighbors().size());
  if (g.weighted())
    detail::WriteRaw(out, g.out_weights().data(), g.out_weights().size());
  if (g.directed()) {
    detail::WriteArrayAs<int64_t, uint64_t>(out, g.in_offsets());
    detail::WriteRaw(out, g.in_neighbors().data(), g.in_neighbors().size());
    if (g.weighted())
      detail::WriteRaw(out, g.in_weights().data(), g.in_weights().size());
  }
  if (!out)
    throw ConfigError("write failed: " + path);
}

// Loads a graph produced by WriteSerialized without re-running the builder.
inline CsrGraph ReadSerialized(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open graph file: " + path);
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || !std::equal(magic, magic + 4,
                                      detail::kSerializedMagic))
    throw BadMagicError(path + ": not a serialized graph (bad magic)");
  uint8_t version = 0, flags = 0;
  detail::ReadRaw(in, path, &version, 1);
  if (version != detail::kSerializedVersion)
    throw VersionMismatchError(path + ": unsupported version " +
                               std::to_string(version));
  detail::ReadRaw(in, path, &flags, 1);
  if (flags & ~uint8_t{3})
    throw LoadError(path + ": unknown flag bits");
  const bool directed = flags & 1;
  const bool weighted = flags & 2;
  uint64_t n = 0, m = 0;
  detail::ReadRaw(in, path, &n, 1);
  detail::ReadRaw(in, path, &m, 1);

  // Cheap size sanity before allocating anything big.
  const uint64_t sides = directed ? 2 : 1;
  const uint64_t expected =
      4 + 2 + 16 +
      sides * ((n + 1) * 8 + m * 4 + (weighted ? m * 4 : 0));
  const uint64_t actual = std::filesystem::file_size(path);
  if (actual < expected)
    throw TruncatedError(path + ": file shorter than its declared arrays");

  std::vector<uint64_t> out_offsets_u(n + 1);
  detail::ReadRaw(in, path, out_offsets_u.data(), n + 1);
  std::vector<NodeId> out_neighbors(m);
  detail::ReadRaw(in, path, out_neighbors.data(), m);
  std::vector<EdgeWeight> out_weights;
  if (weighted) {
    out_weights.resize(m);
    detail::ReadRaw(in, path, out_weights.data(), m);
  }
  std::vector<int64_t> in_offsets;
  std::vector<NodeId> in_neighbors;
  std::vector<EdgeWeight> in_weights;
  if (directed) {
    std::vector<uint64_t> in_offsets_u(n + 1);
    detail::ReadRaw(in, path, in_offsets_u.data(), n + 1);
    in_offsets.assign(in_offsets_u.begin(), in_offsets_u.end());
    in_neighbors.resize(m);
    detail::ReadRaw(in, path, in_neighbors.data(), m);
    if (weighted) {
      in_weights.resize(m);
      detail::ReadRaw(in, path, in_weights.data(), m);
    }
  }

  CsrGraph g(directed, weighted, static_cast<int64_t>(n),
             std::vector<int64_t>(out_offsets_u.begin(), out_offsets_u.end()),
             std::move(out_neighbors), std::move(out_weights),
             std::move(in_offsets), std::move(in_neighbors),
             std::move(in_weights));
  if (auto msg = g.CheckInvariants())
    throw LoadError(path + ": invalid graph data: " + *msg);
  return g;
}

// Loads any supported format. Text formats run through the builder
// (directed unless symmetrized); serialized graphs load as stored, with an
// untimed symmetrizing rebuild when the caller asks for undirected.
inline CsrGraph LoadGraph(const std::string& path, bool symmetrize = false) {
  GraphFileFormat fmt = FormatFromPath(path);
  if (fmt == GraphFileFormat::kSerialized ||
      fmt == GraphFileFormat::kSerializedWeighted) {
    CsrGraph g = ReadSerialized(path);
    if (symmetrize && g.directed())
      return BuildCsr(FlattenToEdgeList(g), false, true);
    return g;
  }
  EdgeList el = ReadTextGraph(path, fmt);
  bool sym = symmetrize || el.needs_symmetrize;
  return BuildCsr(el, !sym, sym);
}

}  // namespace gapkit

#endif  // GAPKIT_IO_HPP_
