#include "walkmat/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string_view>

#include "walkmat/errors.hpp"

namespace walkmat {

Graph::Graph(std::size_t n) : n_(n) {
  if (n == 0) throw InvalidParameter("graph must have at least one vertex");
}

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + "-" +
                           std::to_string(v));
  if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (!edges_.emplace(u, v).second)
    throw InvalidParameter("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return edges_.contains({u, v});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u - 1];
    ++deg[v - 1];
  }
  return deg;
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells)
    : n_(n), cells_(std::move(cells)), owner_(n, n) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].empty()) throw InvalidParameter("empty cell " + std::to_string(c + 1));
    for (std::size_t v : cells_[c]) {
      if (v < 1 || v > n) throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
      if (owner_[v - 1] != n) throw InvalidParameter("vertex " + std::to_string(v) + " in two cells");
      owner_[v - 1] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (owner_[v] == n) throw InvalidParameter("vertex " + std::to_string(v + 1) + " not covered");
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t v = 1; v <= n; ++v) cells.push_back({v});
  return {n, std::move(cells)};
}

Graph build_dynkin_d(std::size_t n) {
  if (n < 4) throw InvalidParameter("D_n requires n >= 4, got " + std::to_string(n));
  Graph g(n);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  for (std::size_t i = 3; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

BigMatrix adjacency_matrix(const Graph& g) {
  BigMatrix a(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u - 1, v - 1) = 1;
    a(v - 1, u - 1) = 1;
  }
  return a;
}

Partition dynkin_partition(std::size_t n) {
  if (n < 4) throw InvalidParameter("D_n partition requires n >= 4, got " + std::to_string(n));
  std::vector<std::vector<std::size_t>> cells{{1, 2}};
  for (std::size_t v = 3; v <= n; ++v) cells.push_back({v});
  return {n, std::move(cells)};
}

DivisorData divisor_of_partition(const Graph& g, const Partition& p) {
  if (p.order() != g.order())
    throw DimensionError("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                         std::to_string(g.order()));
  const std::size_t n = g.order();
  const std::size_t k = p.cell_count();

  // counts[v][j]: neighbours of v in cell j
  std::vector<std::vector<long>> counts(n, std::vector<long>(k, 0));
  for (const auto& [u, v] : g.edges()) {
    ++counts[u - 1][p.cell_of(v)];
    ++counts[v - 1][p.cell_of(u)];
  }

  DivisorData out{BigMatrix(n, k), BigMatrix(k, k)};
  for (std::size_t v = 1; v <= n; ++v) out.characteristic(v - 1, p.cell_of(v)) = 1;

  for (std::size_t i = 0; i < k; ++i) {
    const auto& cell = p.cells()[i];
    const auto& ref = counts[cell.front() - 1];
    for (std::size_t v : cell) {
      const auto& row = counts[v - 1];
      for (std::size_t j = 0; j < k; ++j) {
        if (row[j] != ref[j])
          throw NotEquitable("partition is not equitable: vertices " +
                                 std::to_string(cell.front()) + " and " + std::to_string(v) +
                                 " of cell " + std::to_string(i + 1) + " have " +
                                 std::to_string(ref[j]) + " vs " + std::to_string(row[j]) +
                                 " neighbours in cell " + std::to_string(j + 1),
                             i + 1, j + 1);
      }
    }
    for (std::size_t j = 0; j < k; ++j) out.divisor(i, j) = ref[j];
  }

  const BigMatrix a = adjacency_matrix(g);
  if (!(mat_mul(a, out.characteristic) == mat_mul(out.characteristic, out.divisor)))
    throw NotEquitable("A*C != C*B", 0, 0);
  return out;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t graph6_byte(char c, std::size_t pos) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw ParseError("graph6 byte outside 63..126", pos);
  return u - 63;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
  std::string_view s(raw);
  std::size_t base = 0;
  if (s.starts_with(">>")) {
    if (!s.starts_with(kGraph6Header)) throw ParseError("malformed graph6 header", 0);
    s.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string", base);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (s[0] == '~') {
    if (s.size() < 4) throw ParseError("truncated graph6 size field", base + s.size());
    if (s[1] == '~') throw ParseError("8-byte graph6 size form is not supported", base + 1);
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_byte(s[i], base + i);
    if (n < 63) throw ParseError("non-canonical graph6 size field", base + 1);
    pos = 4;
  } else {
    n = graph6_byte(s[0], base);
    pos = 1;
  }
  if (n == 0) throw ParseError("graph6 graph has no vertices", base);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     base + std::min(s.size(), pos + need));

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      const std::size_t val = graph6_byte(s[at], base + at);
      if ((val >> (5 - bit % 6)) & 1U) g.add_edge(i + 1, j + 1);
    }
  }
  if (need > 0) {
    const std::size_t at = pos + need - 1;
    const std::size_t pad = need * 6 - bits;
    const std::size_t val = graph6_byte(s[at], base + at);
    if (val & ((1U << pad) - 1U)) throw ParseError("nonzero graph6 padding bits", base + at);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    throw InvalidParameter("graph6 emission supports at most 258047 vertices");
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

// Reads a non-negative decimal starting at pos, skipping leading blanks.
std::size_t read_count(const std::string& s, std::size_t& pos, const char* what) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  const std::size_t start = pos;
  std::size_t v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (v > 100000000) throw ParseError(std::string(what) + " too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError(std::string("expected ") + what, start);
  if (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])))
    throw ParseError(std::string("unexpected character after ") + what, pos);
  return v;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  const std::size_t n = read_count(text, pos, "vertex count");
  if (n == 0) throw ParseError("vertex count must be positive", 0);
  Graph g(n);
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t at = pos;
    const std::size_t u = read_count(text, pos, "edge endpoint");
    const std::size_t v = read_count(text, pos, "edge endpoint");
    try {
      g.add_edge(u, v);
    } catch (const InvalidParameter& e) {
      throw ParseError(e.what(), at);
    }
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Partition parse_partition(std::size_t n, const std::string& text) {
  std::vector<std::vector<std::size_t>> cells(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
    } else if (c == ';') {
      cells.emplace_back();
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t v = 0;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
        if (v > 100000000) throw ParseError("vertex label too large", start);
      }
      cells.back().push_back(v);
    } else {
      throw ParseError("unexpected character in partition", pos);
    }
  }
  try {
    return {n, std::move(cells)};
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace walkmat
