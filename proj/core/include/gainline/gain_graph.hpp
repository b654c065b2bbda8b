#pragma once

#include <optional>
#include <vector>

#include "gainline/graph.hpp"
#include "gainline/group.hpp"

namespace gainline {

/// A gain graph: simple graph plus one group element per stored edge (u,v),
/// read as psi(u,v) for u < v; psi(v,u) is its inverse, so the gain map
/// automatically satisfies psi(u,v) = psi(v,u)^{-1}.
struct GainGraph {
  SimpleGraph graph;
  GroupPtr group;
  std::vector<Elem> gains;  // aligned with graph.edges

  GainGraph() = default;
  GainGraph(SimpleGraph g, GroupPtr grp);

  /// psi(u,v); u,v must be adjacent.
  Elem gain(int u, int v) const;
  void set_gain(int u, int v, Elem g);

  /// The constant gain function; c must be an involution so that the
  /// inverse-symmetry requirement holds.
  static GainGraph constant(SimpleGraph g, GroupPtr grp, Elem c);

  bool operator==(const GainGraph& o) const {
    return graph == o.graph && gains == o.gains &&
           group->name() == o.group->name();
  }
};

/// Vertex-indexed group assignment f used in switching.
using SwitchingFunction = std::vector<Elem>;

/// Ordered product of edge gains along a walk (consecutive vertices adjacent).
Elem walk_gain(const GainGraph& g, const std::vector<int>& walk);

struct InducedGainGraph {
  GainGraph graph;
  std::vector<int> vertex_map;  // new vertex -> original vertex
  std::vector<int> edge_map;    // new edge -> original edge
};

/// Subgraph induced by a vertex subset; edge order inherited from g.
InducedGainGraph vertex_induced(const GainGraph& g, const std::vector<int>& A);
/// Subgraph induced by an edge subset (vertices = endpoints of B).
InducedGainGraph edge_induced(const GainGraph& g, const std::vector<int>& B);

/// psi^f(u,v) = f(u)^{-1} psi(u,v) f(v).
GainGraph apply_switching(const GainGraph& g, const SwitchingFunction& f);

/// Witness f with apply_switching(a, f) == b, if the gain functions are
/// switching equivalent. Requires identical underlying graphs and groups;
/// disconnected inputs are handled component-wise.
std::optional<SwitchingFunction> switching_equivalence(const GainGraph& a,
                                                       const GainGraph& b);

/// Witness f with psi^f == constant c. c must be a central involution.
std::optional<SwitchingFunction> equivalent_to_constant(const GainGraph& g,
                                                        Elem c);
bool is_equivalent_to_constant(const GainGraph& g, Elem c);
bool is_balanced(const GainGraph& g);

struct SwitchingIsomorphism {
  std::vector<int> iso;  // vertex map a -> b
  SwitchingFunction f;   // on a's vertices: a^f == b∘iso
};

/// Searches all graph isomorphisms (degree-refined backtracking) and tests
/// switching equivalence per isomorphism. Meant for small graphs.
std::optional<SwitchingIsomorphism> switching_isomorphism(const GainGraph& a,
                                                          const GainGraph& b);

/// Gain of the closed walk around t compared against a central involution s;
/// centrality makes the comparison independent of base vertex and direction.
bool triangle_gain_is(const GainGraph& g, const Triangle& t, Elem s);

/// Gain function scaled edgewise by a central involution (s*psi).
GainGraph scale_by_central_involution(const GainGraph& g, Elem s);

}  // namespace gainline
