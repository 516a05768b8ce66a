#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/bigmatrix.hpp"

namespace walkmat {

// Unordered edge stored as (u, v) with u < v, 1-based labels.
using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph on the vertex set {1, ..., n}.
class Graph {
 public:
  explicit Graph(std::size_t n = 1);
  // Throws InvalidParameter on loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::set<Edge> edges_;
};

/// Ordered list of disjoint cells covering {1, ..., n}.
class Partition {
 public:
  // Throws InvalidParameter unless the cells are nonempty, disjoint and cover 1..n.
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> cells);

  std::size_t order() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const std::vector<std::vector<std::size_t>>& cells() const noexcept { return cells_; }
  // 0-based index of the cell containing vertex v (1-based).
  std::size_t cell_of(std::size_t v) const { return owner_.at(v - 1); }

  static Partition discrete(std::size_t n);

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> owner_;
};

struct DivisorData {
  BigMatrix characteristic;  // C, n x k, C(v, j) = 1 iff v in cell j
  BigMatrix divisor;         // B, k x k, neighbours in cell j of a vertex of cell i
};

// D_n: twin pendant vertices 1 and 2 attached to vertex 3, path 3-4-...-n.
// The edge list is inferred from the published W(D_5) and from the cell
// {1,2} of the standard equitable partition.
Graph build_dynkin_d(std::size_t n);

BigMatrix adjacency_matrix(const Graph& g);

// [{1,2}, {3}, {4}, ..., {n}]
Partition dynkin_partition(std::size_t n);

// Verifies equitability and A*C == C*B before returning.
DivisorData divisor_of_partition(const Graph& g, const Partition& p);

// graph6, short form for n <= 62 and the 4-byte form up to 258047 vertices.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Edge list: first line n, then one "u v" pair per line.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Partition text: cells separated by ';', vertices by ',' ("1,2;3;4").
Partition parse_partition(std::size_t n, const std::string& text);

}  // namespace walkmat
