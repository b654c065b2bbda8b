#include "gainline/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gainline {

SimpleGraph::SimpleGraph(int vertices) : n(vertices) {
  if (vertices < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  eindex_.assign(static_cast<size_t>(n) * n, -1);
  nbr_.assign(n, {});
}

SimpleGraph SimpleGraph::from_edges(int vertices,
                                    const std::vector<std::pair<int, int>>& e) {
  SimpleGraph g(vertices);
  for (auto [u, v] : e) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
  if (u > v) std::swap(u, v);
  int id = m();
  edges.emplace_back(u, v);
  adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
  eindex_[idx(u, v)] = eindex_[idx(v, u)] = id;
  nbr_[u].push_back(v);
  nbr_[v].push_back(u);
}

bool SimpleGraph::connected() const {
  if (n == 0) return false;
  return static_cast<int>(components().size()) == 1;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (int w : nbr_[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

SimpleGraph line_graph(const SimpleGraph& g) {
  if (g.m() == 0)
    throw std::invalid_argument("line graph of an edgeless graph is undefined");
  SimpleGraph L(g.m());
  for (int p = 0; p < g.m(); ++p)
    for (int q = p + 1; q < g.m(); ++q) {
      auto [a, b] = g.edges[p];
      auto [c, d] = g.edges[q];
      if (a == c || a == d || b == c || b == d) L.add_edge(p, q);
    }
  return L;
}

std::vector<Triangle> triangles(const SimpleGraph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < g.n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        Triangle t;
        t.v = {a, b, c};
        t.even = true;
        for (int w = 0; w < g.n && t.even; ++w) {
          int cnt = g.adjacent(a, w) + g.adjacent(b, w) + g.adjacent(c, w);
          if (cnt % 2 == 1) t.even = false;
        }
        out.push_back(t);
      }
    }
  return out;
}

bool triangles_adjacent(const Triangle& a, const Triangle& b) {
  if (a.v == b.v) return false;
  int shared = 0;
  for (int x : a.v)
    for (int y : b.v)
      if (x == y) ++shared;
  return shared == 2;
}

int circuit_rank(const SimpleGraph& g) {
  if (!g.connected())
    throw std::invalid_argument("circuit rank requires a connected graph");
  return g.m() - g.n + 1;
}

namespace {

// Backtracking isomorphism with degree filtering. Vertices of `a` are
// processed in a fixed order that prefers vertices attached to the mapped
// prefix, so adjacency constraints prune early.
struct IsoSearch {
  const SimpleGraph& a;
  const SimpleGraph& b;
  std::vector<int> order;
  std::vector<int> map;      // a-vertex -> b-vertex or -1
  std::vector<char> used;    // b-vertex used
  const std::function<bool(const std::vector<int>&)>& cb;
  bool stopped = false;

  IsoSearch(const SimpleGraph& a_, const SimpleGraph& b_,
            const std::function<bool(const std::vector<int>&)>& cb_)
      : a(a_), b(b_), cb(cb_) {
    map.assign(a.n, -1);
    used.assign(b.n, 0);
    std::vector<char> placed(a.n, 0);
    // order: repeatedly take the unplaced vertex with most placed neighbors,
    // ties broken by higher degree
    for (int step = 0; step < a.n; ++step) {
      int best = -1, bestAnchored = -1, bestDeg = -1;
      for (int v = 0; v < a.n; ++v) {
        if (placed[v]) continue;
        int anchored = 0;
        for (int w : a.neighbors(v)) anchored += placed[w];
        if (anchored > bestAnchored ||
            (anchored == bestAnchored && a.degree(v) > bestDeg)) {
          best = v;
          bestAnchored = anchored;
          bestDeg = a.degree(v);
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
  }

  void run(size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      if (cb(map)) stopped = true;
      return;
    }
    int v = order[depth];
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < a.n && ok; ++u)
        if (map[u] >= 0 && a.adjacent(u, v) != b.adjacent(map[u], w)) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      run(depth + 1);
      map[v] = -1;
      used[w] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

bool for_each_isomorphism(
    const SimpleGraph& a, const SimpleGraph& b,
    const std::function<bool(const std::vector<int>&)>& cb) {
  if (a.n != b.n || a.m() != b.m()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  IsoSearch s(a, b, cb);
  s.run(0);
  return s.stopped;
}

std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a,
                                                 const SimpleGraph& b) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& m) {
    found = m;
    return true;
  });
  return found;
}

bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return find_isomorphism(a, b).has_value();
}

uint64_t canonical_code(const SimpleGraph& g) {
  if (g.n > 11) throw std::invalid_argument("canonical_code supports n <= 11");
  // packed upper-triangle bit positions, C(11,2) = 55 fits in 64 bits
  std::vector<int> rank(static_cast<size_t>(g.n) * g.n, -1);
  int r = 0;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) rank[static_cast<size_t>(a) * g.n + b] = r++;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ULL;
  do {
    uint64_t code = 0;
    for (auto [u, v] : g.edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      code |= 1ULL << rank[static_cast<size_t>(a) * g.n + b];
    }
    if (code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, std::vector<int>& R,
                   std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    std::sort(out.back().begin(), out.back().end());
    return;
  }
  // pivot: vertex of P ∪ X with most neighbors in P
  int pivot = -1, bestCnt = -1;
  for (const auto* set : {&P, &X})
    for (int u : *set) {
      int cnt = 0;
      for (int v : P) cnt += g.adjacent(u, v);
      if (cnt > bestCnt) {
        bestCnt = cnt;
        pivot = u;
      }
    }
  std::vector<int> cand;
  for (int v : P)
    if (pivot < 0 || !g.adjacent(pivot, v)) cand.push_back(v);
  for (int v : cand) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (g.adjacent(v, w)) P2.push_back(w);
    for (int w : X)
      if (g.adjacent(v, w)) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<int> R, P(g.n), X;
  std::iota(P.begin(), P.end(), 0);
  std::vector<std::vector<int>> out;
  bron_kerbosch(g, R, std::move(P), std::move(X), out);
  return out;
}

}  // namespace gainline
