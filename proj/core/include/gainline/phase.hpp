#pragma once

#include "gainline/gain_graph.hpp"

namespace gainline {

/// Incidence-shaped |V| x |E| matrix over G ∪ {zero}: entry (v,e) is a group
/// element exactly when v is an endpoint of e. Generalizes an incidence
/// matrix; zero is represented by kZero.
struct GPhase {
  static constexpr Elem kZero = -1;

  SimpleGraph graph;
  GroupPtr group;
  std::vector<Elem> entries;  // row-major, graph.n rows x graph.m() columns

  GPhase() = default;
  GPhase(SimpleGraph g, GroupPtr grp);

  Elem at(int v, int e) const {
    return entries[static_cast<size_t>(v) * graph.m() + e];
  }
  void set(int v, int e, Elem x) {
    entries[static_cast<size_t>(v) * graph.m() + e] = x;
  }

  /// Checks the zero pattern matches incidence (two group entries per column).
  void validate() const;
};

/// Psi(H)(v_i,v_j) = s1 * H[i,k] * H[j,k]^{-1} for e_k = {v_i,v_j}.
GainGraph phase_to_gain(const GPhase& h, Elem s1);

/// Psi_L(H)(e_p,e_q) = s * H[r,p]^{-1} * H[r,q] where v_r is the endpoint
/// shared by e_p and e_q; the result lives on line_graph(h.graph).
GainGraph phase_to_line_gain(const GPhase& h, Elem s);

/// The order-induced phase H_<: column k = {v_i,v_j} with i < j holds
/// psi(v_i,v_j) at row i and s1 at row j. Satisfies phase_to_gain(H_<) == g.
GPhase canonical_phase(const GainGraph& g, Elem s1);

/// Closed-form line gains (three cases on the vertex ordering around the
/// shared endpoint). Equals phase_to_line_gain(canonical_phase(g,s1), s).
GainGraph line_gain_direct(const GainGraph& g, Elem s1, Elem s);

struct InducedPhase {
  GPhase phase;
  std::vector<int> vertex_map;  // new row -> original vertex
  std::vector<int> edge_map;    // new column -> original edge
};

/// Submatrix with rows A and columns E(A).
InducedPhase phase_induced_by_vertices(const GPhase& h, const std::vector<int>& A);
/// Submatrix with rows V(B) and columns B.
InducedPhase phase_induced_by_edges(const GPhase& h, const std::vector<int>& B);

/// (Gamma, psi, H) with Psi(H) = psi for the recorded s1; checked on build.
struct OrientedGainTriple {
  GainGraph gain;
  GPhase phase;
  Elem s1;

  OrientedGainTriple(GainGraph g, GPhase h, Elem s1_);
};

}  // namespace gainline
