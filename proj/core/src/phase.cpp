#include "gainline/phase.hpp"

#include <stdexcept>

namespace gainline {

GPhase::GPhase(SimpleGraph g, GroupPtr grp)
    : graph(std::move(g)), group(std::move(grp)) {
  entries.assign(static_cast<size_t>(graph.n) * graph.m(), kZero);
}

void GPhase::validate() const {
  for (int v = 0; v < graph.n; ++v)
    for (int e = 0; e < graph.m(); ++e) {
      bool incident = graph.edges[e].first == v || graph.edges[e].second == v;
      Elem x = at(v, e);
      if (incident && (x < 0 || x >= group->order()))
        throw std::invalid_argument("phase has zero at an incidence");
      if (!incident && x != kZero)
        throw std::invalid_argument("phase has a group entry off-incidence");
    }
}

GainGraph phase_to_gain(const GPhase& h, Elem s1) {
  const auto& G = *h.group;
  if (!G.is_central_involution(s1))
    throw std::invalid_argument("s1 must be a central involution");
  GainGraph out(h.graph, h.group);
  for (int k = 0; k < h.graph.m(); ++k) {
    auto [i, j] = h.graph.edges[k];
    out.gains[k] = G.mul(G.mul(s1, h.at(i, k)), G.inverse(h.at(j, k)));
  }
  return out;
}

GainGraph phase_to_line_gain(const GPhase& h, Elem s) {
  const auto& G = *h.group;
  if (!G.is_central_involution(s))
    throw std::invalid_argument("s must be a central involution");
  SimpleGraph L = line_graph(h.graph);
  GainGraph out(L, h.group);
  for (int t = 0; t < L.m(); ++t) {
    auto [p, q] = L.edges[t];
    auto [a, b] = h.graph.edges[p];
    auto [c, d] = h.graph.edges[q];
    int r = (a == c || a == d) ? a : b;  // unique shared endpoint
    out.gains[t] = G.mul(G.mul(s, G.inverse(h.at(r, p))), h.at(r, q));
  }
  return out;
}

GPhase canonical_phase(const GainGraph& g, Elem s1) {
  const auto& G = *g.group;
  if (!G.is_central_involution(s1))
    throw std::invalid_argument("s1 must be a central involution");
  GPhase h(g.graph, g.group);
  for (int k = 0; k < g.graph.m(); ++k) {
    auto [i, j] = g.graph.edges[k];  // i < j
    h.set(i, k, g.gains[k]);
    h.set(j, k, s1);
  }
  return h;
}

GainGraph line_gain_direct(const GainGraph& g, Elem s1, Elem s) {
  const auto& G = *g.group;
  if (!G.is_central_involution(s1) || !G.is_central_involution(s))
    throw std::invalid_argument("s1 and s must be central involutions");
  SimpleGraph L = line_graph(g.graph);
  GainGraph out(L, g.group);
  for (int t = 0; t < L.m(); ++t) {
    auto [p, q] = L.edges[t];
    auto [a, b] = g.graph.edges[p];
    auto [c, d] = g.graph.edges[q];
    int i = (a == c || a == d) ? a : b;       // shared endpoint
    int j = (i == a) ? b : a;                 // other endpoint of e_p
    int k = (i == c) ? d : c;                 // other endpoint of e_q
    Elem val;
    if (j < i && i < k) {
      val = G.mul(G.mul(s1, s), g.gain(i, k));
    } else if (j < i && i > k) {
      val = s;
    } else if (j > i && i < k) {
      // s * psi(v_i,v_j)^{-1} * psi(v_i,v_k)
      val = G.mul(G.mul(s, g.gain(j, i)), g.gain(i, k));
    } else {
      // reverse of the first case read from q to p
      val = G.inverse(G.mul(G.mul(s1, s), g.gain(i, j)));
    }
    out.gains[t] = val;
  }
  return out;
}

namespace {

InducedPhase build_sub_phase(const GPhase& h, const std::vector<int>& verts,
                             const std::vector<int>& cols) {
  InducedPhase out;
  out.vertex_map = verts;
  out.edge_map = cols;
  std::vector<int> inv(h.graph.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) inv[verts[i]] = static_cast<int>(i);
  SimpleGraph sub(static_cast<int>(verts.size()));
  for (int k : cols) {
    auto [u, v] = h.graph.edges[k];
    sub.add_edge(inv[u], inv[v]);
  }
  GPhase hs(sub, h.group);
  for (size_t r = 0; r < verts.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c)
      hs.set(static_cast<int>(r), static_cast<int>(c), h.at(verts[r], cols[c]));
  hs.validate();
  out.phase = std::move(hs);
  return out;
}

}  // namespace

InducedPhase phase_induced_by_vertices(const GPhase& h,
                                       const std::vector<int>& A) {
  std::vector<int> verts = A;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<char> in(h.graph.n, 0);
  for (int v : verts) {
    if (v < 0 || v >= h.graph.n) throw std::out_of_range("vertex subset");
    in[v] = 1;
  }
  std::vector<int> cols;
  for (int k = 0; k < h.graph.m(); ++k) {
    auto [u, v] = h.graph.edges[k];
    if (in[u] && in[v]) cols.push_back(k);
  }
  return build_sub_phase(h, verts, cols);
}

InducedPhase phase_induced_by_edges(const GPhase& h, const std::vector<int>& B) {
  std::vector<int> cols = B;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<int> verts;
  for (int k : cols) {
    if (k < 0 || k >= h.graph.m()) throw std::out_of_range("edge subset");
    verts.push_back(h.graph.edges[k].first);
    verts.push_back(h.graph.edges[k].second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return build_sub_phase(h, verts, cols);
}

OrientedGainTriple::OrientedGainTriple(GainGraph g, GPhase h, Elem s1_)
    : gain(std::move(g)), phase(std::move(h)), s1(s1_) {
  phase.validate();
  GainGraph check = phase_to_gain(phase, s1);
  if (!(check == gain))
    throw std::invalid_argument("phase does not induce the stated gain function");
}

}  // namespace gainline
