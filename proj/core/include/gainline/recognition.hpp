#pragma once

#include <array>
#include <optional>
#include <string>

#include "gainline/phase.hpp"

namespace gainline {

/// Raised when the recognizer reaches a state the underlying theory declares
/// impossible (see the F3 note in krausz_partition).
struct internal_inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace patterns {

/// The nine forbidden subgraphs for classical line graphs, 4..6 vertices.
const std::vector<SimpleGraph>& beineke();
const SimpleGraph& claw();      // = beineke()[0]
const SimpleGraph& paw();
const SimpleGraph& diamond();
const SimpleGraph& k4();
const SimpleGraph& t_p();       // the tree with L(T_P) = paw
SimpleGraph star(int leaves);   // K_{1,n}

/// The three line graphs containing adjacent even triangles. Cells of a
/// Krausz partition on them come from one of two triangle 2-colorings.
struct Exceptional {
  SimpleGraph graph;
  std::array<std::vector<std::array<int, 3>>, 2> colorings;  // triangle families
};
const Exceptional& f1();  // diamond
const Exceptional& f2();  // wheel W4
const Exceptional& f3();  // octahedron K_{2,2,2}

}  // namespace patterns

struct KrauszPartition {
  std::vector<std::vector<int>> cells;       // edge ids of L, disjoint cover
  std::vector<SwitchingFunction> switchers;  // per cell, identity off-cell
};

/// Checks all KrauszPartition invariants against (L, s): cells partition E_L,
/// each cell induces a complete subgraph, every vertex meets at most two
/// cells, and each switcher turns the cell gains into constant s.
bool validate_krausz(const GainGraph& L, const KrauszPartition& p, Elem s);

struct ClawWitness {
  int center;
  std::array<int, 3> leaves;
};

struct TriangleConditionReport {
  bool claw_free = true;
  std::optional<ClawWitness> claw;
  bool odd_gains_ok = true;            // every odd triangle has gain s
  std::optional<Triangle> bad_odd;
  bool odd_pairs_complete = true;      // adjacent odd triangles induce K4
  std::optional<std::pair<Triangle, Triangle>> bad_odd_pair;
  bool even_pairs_ok = true;           // adjacent even triangles: one gain s
  std::optional<std::pair<Triangle, Triangle>> bad_even_pair;

  bool all() const {
    return claw_free && odd_gains_ok && odd_pairs_complete && even_pairs_ok;
  }
};

TriangleConditionReport check_triangle_conditions(const GainGraph& L, Elem s);

struct ForbiddenWitness {
  std::vector<int> vertices;  // subset of V_L inducing the pattern
  std::string pattern;        // "G1".."G9", "paw", "K4", "diamond"
  std::vector<int> iso;       // pattern vertex -> L vertex
};

/// Scans vertex subsets of size <= 6 for members of Y = X^G ∪ F_s.
std::optional<ForbiddenWitness> check_y_free(const GainGraph& L, Elem s);
bool verify_forbidden_witness(const GainGraph& L, const ForbiddenWitness& w,
                              Elem s);

/// Underlying-graph scan against the nine Beineke patterns.
bool is_beineke_free(const SimpleGraph& g);

/// Constructs the Krausz partition whose cells carry gains switching
/// equivalent to constant s, or returns nullopt when none exists. Exceptional
/// underlying graphs (F1, F2, F3) are handled by the two triangle
/// 2-colorings; everything else by maximal cliques of size >= 3 that are not
/// even triangles.
std::optional<KrauszPartition> krausz_partition(const GainGraph& L, Elem s);

struct RootWitness {
  GainGraph root;            // psi = Psi(H, s1)
  GPhase phase;              // rows: cells then single-cell vertices
  Elem s1;
  KrauszPartition partition;
  // root.graph.edges[p] corresponds to L vertex p; line_graph(root.graph)
  // equals L's underlying graph vertex-for-vertex.
};

/// Intersection-graph root plus the phase of Eq-style reconstruction;
/// guarantees phase_to_line_gain(phase, s) == L exactly.
RootWitness root_gain_graph(const GainGraph& L, const KrauszPartition& p,
                            Elem s, Elem s1);

struct Verdict {
  bool is_gain_line = false;
  std::optional<RootWitness> root;
  std::optional<ForbiddenWitness> forbidden;
  std::optional<TriangleConditionReport> triangle;
};

/// Decides whether (L, zeta) is the line graph of some gain graph, with a
/// machine-checkable witness either way. Requires connected input with at
/// least one edge and a central involution s.
Verdict is_gain_line(const GainGraph& L, Elem s);

/// Decision core shared with the harness: no witnesses, never throws
/// internal_inconsistency.
bool is_gain_line_decision(const GainGraph& L, Elem s);

/// Classical line-graph test via the gain-free Krausz construction; returns
/// a root graph with line_graph(root) isomorphic to g.
std::optional<SimpleGraph> is_line_graph_classical(const SimpleGraph& g);

/// True iff every vertex-induced gain subgraph on at most 6 vertices is a
/// gain-line graph (checked per connected component).
bool check_small_subgraphs(const GainGraph& L, Elem s);

}  // namespace gainline
