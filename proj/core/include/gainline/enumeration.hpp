#pragma once

#include <cstdint>
#include <string>

#include "gainline/spectral.hpp"

namespace gainline {

/// One connected graph per isomorphism class, grouped by vertex count.
struct GraphCatalog {
  int n_max = 0;
  std::vector<std::vector<SimpleGraph>> by_n;  // index 0 unused, 1..n_max

  std::vector<const SimpleGraph*> all() const;
  int count(int n) const { return static_cast<int>(by_n[n].size()); }
};

/// Orderly vertex-augmentation with canonical-form dedup; refuses n_max > 7.
GraphCatalog enumerate_connected_graphs(int n_max);

/// Connected graphs with at most max_edges edges (hence up to max_edges + 1
/// vertices), one per isomorphism class. Serves the corollary drivers that
/// need line graphs on more vertices than the catalog bound.
std::vector<SimpleGraph> connected_graphs_with_edges_at_most(int max_edges);

/// One gain graph per switching class: spanning-tree edges carry the
/// identity, cotree assignments are deduplicated under global conjugation.
/// Over t2 this yields exactly 2^(m-n+1) representatives.
std::vector<GainGraph> switching_class_representatives(const SimpleGraph& g,
                                                       const GroupPtr& group);

/// Independent gain-line oracle: enumerates root graphs with |V_L| edges from
/// the catalog, phases in switching-reduced form, and tests switching
/// isomorphism of the induced line gains with L.
bool gain_line_root_search(const GainGraph& L, Elem s,
                           const GraphCatalog& roots);

struct Discrepancy {
  std::string instance;      // serialized instance description
  std::vector<int> verdicts; // per-predicate booleans as 0/1
};

struct VerifyReport {
  long instances = 0;
  std::vector<Discrepancy> items;
  bool ok() const { return items.empty(); }
};

struct GroupTask {
  GroupPtr group;
  std::vector<Elem> involutions;  // central involutions to test; empty = all
};

/// Five-way check of the main characterization over every connected graph
/// with 2..n_max vertices and every switching class. Predicates per instance:
/// root-search oracle, Krausz partition, triangle conditions, Y-freeness,
/// small-subgraph closure.
VerifyReport verify_main_theorem(int n_max, const std::vector<GroupTask>& tasks);

/// Six-way check of the spectral characterization over every connected line
/// graph with <= n_max vertices and every t2 switching class.
VerifyReport verify_spectral_theorem(int n_max);

}  // namespace gainline
