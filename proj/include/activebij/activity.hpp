#pragma once

#include "activebij/digraph.hpp"
#include "activebij/graph.hpp"

namespace activebij {

/// Internally / externally active edges of a spanning tree.
struct TreeActivities {
  EdgeSet internal;  // Int(T)
  EdgeSet external;  // Ext(T)
  friend bool operator==(const TreeActivities &, const TreeActivities &) = default;
};

/// Four-parameter activities of an arbitrary edge subset A, relative to the
/// unique spanning tree T with T \ Int(T) <= A <= T u Ext(T).
struct SubsetActivities {
  EdgeSet int_;  // Int(T) ∩ A
  EdgeSet p;     // Int(T) \ A
  EdgeSet ext;   // Ext(T) \ A
  EdgeSet q;     // Ext(T) ∩ A
  friend bool operator==(const SubsetActivities &, const SubsetActivities &) = default;
};

/// Four-parameter activities of a reorientation A relative to a reference
/// orientation.
struct OrientationActivities {
  EdgeSet theta_star;      // O*(-A G) \ A
  EdgeSet theta_star_bar;  // O*(-A G) ∩ A
  EdgeSet theta;           // O(-A G) \ A
  EdgeSet theta_bar;       // O(-A G) ∩ A
  friend bool operator==(const OrientationActivities &,
                         const OrientationActivities &) = default;
};

// Accepts spanning forests too: restrictions arising as minors may be
// disconnected, and activities behave componentwise.
inline TreeActivities tree_activities(const OrderedGraph &g, EdgeSet T) {
  g.require_subset(T);
  if (T.size() != g.rank(g.live()) || g.components(T) != g.components(g.live()))
    throw std::domain_error("not a spanning tree");
  TreeActivities a;
  for (int b : T)
    if (fundamental_cocycle(g, T, b).support().min() == b)
      a.internal.insert(b);
  for (int e : g.live() - T)
    if (fundamental_cycle(g, T, e).support().min() == e)
      a.external.insert(e);
  return a;
}

/// Boolean interval [T \ Int(T), T u Ext(T)] of a spanning tree.
inline std::pair<EdgeSet, EdgeSet> interval_of(const OrderedGraph &g, EdgeSet T) {
  TreeActivities a = tree_activities(g, T);
  return {T - a.internal, T | a.external};
}

/// The unique spanning tree whose interval contains A.
inline EdgeSet locate_interval(const OrderedGraph &g, EdgeSet A) {
  g.require_subset(A);
  for (EdgeSet T : spanning_trees(g)) {
    auto [lo, hi] = interval_of(g, T);
    if (lo.subset_of(A) && A.subset_of(hi))
      return T;
  }
  throw std::logic_error("interval partition of subsets violated");
}

inline SubsetActivities subset_activities(const OrderedGraph &g, EdgeSet A) {
  EdgeSet T = locate_interval(g, A);
  TreeActivities a = tree_activities(g, T);
  return {a.internal & A, a.internal - A, a.external - A, a.external & A};
}

inline OrientationActivities orientation_activities(const Digraph &ref, EdgeSet A,
                                                    int max_edges = kDefaultEdgeCap) {
  ActivitySets o = activity_sets(ref.reoriented(A), max_edges);
  return {o.dual_active - A, o.dual_active & A, o.active - A, o.active & A};
}

}  // namespace activebij
