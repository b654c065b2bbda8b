#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace gainline {

/// Simple undirected graph on vertices 0..n-1. Edges are stored as ordered
/// pairs (u,v) with u < v; the edge list order is part of the object and is
/// what line-graph vertices and phase columns refer to.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  SimpleGraph() = default;
  explicit SimpleGraph(int vertices);
  static SimpleGraph from_edges(int vertices,
                                const std::vector<std::pair<int, int>>& e);

  int m() const { return static_cast<int>(edges.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }
  /// Index into edges, or -1 when u,v are not adjacent.
  int edge_index(int u, int v) const { return eindex_[idx(u, v)]; }
  int degree(int v) const { return static_cast<int>(nbr_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }

  bool connected() const;
  std::vector<std::vector<int>> components() const;

  bool operator==(const SimpleGraph& o) const {
    return n == o.n && edges == o.edges;
  }

 private:
  size_t idx(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("vertex index out of range");
    return static_cast<size_t>(u) * n + v;
  }
  std::vector<char> adj_;
  std::vector<int> eindex_;
  std::vector<std::vector<int>> nbr_;
};

struct Triangle {
  std::array<int, 3> v;  // sorted ascending
  bool even = false;
};

/// Line graph; vertex k of the result is g.edges[k]. Throws on edgeless input.
SimpleGraph line_graph(const SimpleGraph& g);

/// All triangles with parity: even iff every vertex of g is adjacent to an
/// even number of the triangle's vertices.
std::vector<Triangle> triangles(const SimpleGraph& g);

/// Two triangles are adjacent when they share an edge (= two vertices).
bool triangles_adjacent(const Triangle& a, const Triangle& b);

/// m - n + 1; requires a connected graph.
int circuit_rank(const SimpleGraph& g);

/// Degree-refined backtracking isomorphism search, meant for small graphs.
std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a,
                                                 const SimpleGraph& b);
bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Calls cb for every isomorphism a -> b until cb returns true; returns
/// whether any callback returned true.
bool for_each_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                          const std::function<bool(const std::vector<int>&)>& cb);

/// Canonical form of the upper-triangle adjacency bitmask, minimized over all
/// vertex permutations. Usable up to 11 vertices; intended for n <= 8.
uint64_t canonical_code(const SimpleGraph& g);

/// Bron-Kerbosch with pivoting; each clique is a sorted vertex list.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

}  // namespace gainline
