#pragma once

#include <vector>

#include "activebij/graph.hpp"

namespace activebij {

/** Directed graph: an ordered graph together with the subset of edges whose
 *  direction is flipped relative to the stored reference direction. */
struct Digraph {
  OrderedGraph g;
  EdgeSet reorient;

  Digraph(OrderedGraph graph, EdgeSet flipped = {})
      : g(std::move(graph)), reorient(flipped) {
    g.require_subset(reorient);
  }

  Digraph reoriented(EdgeSet A) const { return Digraph(g, reorient ^ A); }
  Digraph opposite() const { return reoriented(g.live()); }
  bool flipped(int e) const { return reorient.contains(e); }

  Digraph restrict_to(EdgeSet F) const {
    return Digraph(g.restrict_to(F), reorient & F);
  }
  Digraph contract(EdgeSet F) const {
    return Digraph(g.contract(F), reorient - F);
  }

  /// Effective sign of edge e in a signed set: the stored sign flipped when
  /// the edge is reoriented.
  bool effective_positive(const SignedEdgeSet &s, int e) const {
    return s.sign_positive(e) != flipped(e);
  }

  /// True when the signed cycle/cocycle is all-forward or all-backward under
  /// this orientation.
  bool is_directed(const SignedEdgeSet &s) const {
    EdgeSet eff_pos = (s.positive - reorient) | (s.negative & reorient);
    return eff_pos.empty() || eff_pos == s.support();
  }
};

/// O(G) and O*(G): minima of directed cycles and of directed cocycles.
struct ActivitySets {
  EdgeSet active;       // O
  EdgeSet dual_active;  // O*
  friend bool operator==(const ActivitySets &, const ActivitySets &) = default;
};

namespace detail {

inline std::vector<SignedEdgeSet> signed_cycles(const OrderedGraph &g,
                                                int max_edges = kDefaultEdgeCap) {
  std::vector<SignedEdgeSet> out;
  for (EdgeSet c : all_cycles(g, max_edges)) {
    if (c.size() == 1) {
      out.push_back({c, {}});
      continue;
    }
    // Sign the cycle by routing it through a spanning tree of itself minus
    // one edge.
    int e = c.min();
    out.push_back(fundamental_cycle(g, c - EdgeSet::single(e), e));
  }
  return out;
}

inline std::vector<SignedEdgeSet> signed_cocycles(const OrderedGraph &g,
                                                  int max_edges = kDefaultEdgeCap) {
  std::vector<SignedEdgeSet> out;
  for (EdgeSet d : all_cocycles(g, max_edges)) {
    // Sign the bond from the side containing the tail of its smallest edge.
    int b = d.min();
    const Edge &eb = g.edge(b);
    std::uint32_t side = component_of(g, g.live() - d, eb.u);
    SignedEdgeSet s;
    for (int id : d) {
      const Edge &e = g.edge(id);
      if ((side >> e.u) & 1)
        s.positive.insert(id);
      else
        s.negative.insert(id);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline std::vector<EdgeSet> directed_cycles(const Digraph &dg,
                                            int max_edges = kDefaultEdgeCap) {
  std::vector<EdgeSet> out;
  for (const SignedEdgeSet &c : detail::signed_cycles(dg.g, max_edges))
    if (dg.is_directed(c))
      out.push_back(c.support());
  return out;
}

inline std::vector<EdgeSet> directed_cocycles(const Digraph &dg,
                                              int max_edges = kDefaultEdgeCap) {
  std::vector<EdgeSet> out;
  for (const SignedEdgeSet &d : detail::signed_cocycles(dg.g, max_edges))
    if (dg.is_directed(d))
      out.push_back(d.support());
  return out;
}

inline ActivitySets activity_sets(const Digraph &dg,
                                  int max_edges = kDefaultEdgeCap) {
  ActivitySets a;
  for (EdgeSet c : directed_cycles(dg, max_edges))
    a.active.insert(c.min());
  for (EdgeSet d : directed_cocycles(dg, max_edges))
    a.dual_active.insert(d.min());
  return a;
}

inline bool is_acyclic(const Digraph &dg, int max_edges = kDefaultEdgeCap) {
  return directed_cycles(dg, max_edges).empty();
}

inline bool is_strongly_connected(const Digraph &dg,
                                  int max_edges = kDefaultEdgeCap) {
  return directed_cocycles(dg, max_edges).empty();
}

/// Union of all directed cycles; equals E minus the union of all directed
/// cocycles.
inline EdgeSet cyclic_part(const Digraph &dg, int max_edges = kDefaultEdgeCap) {
  EdgeSet f;
  for (EdgeSet c : directed_cycles(dg, max_edges))
    f |= c;
  return f;
}

/// Acyclic, every edge in a directed cocycle, every directed cocycle
/// contains p.  A single isthmus is bipolar.
inline bool is_bipolar(const Digraph &dg, int p,
                       int max_edges = kDefaultEdgeCap) {
  dg.g.require_subset(EdgeSet::single(p));
  if (!is_acyclic(dg, max_edges))
    return false;
  EdgeSet covered;
  for (EdgeSet d : directed_cocycles(dg, max_edges)) {
    if (!d.contains(p))
      return false;
    covered |= d;
  }
  return covered == dg.g.live();
}

/// Totally cyclic, every directed cycle contains p.  A single loop is
/// cyclic-bipolar.
inline bool is_cyclic_bipolar(const Digraph &dg, int p,
                              int max_edges = kDefaultEdgeCap) {
  dg.g.require_subset(EdgeSet::single(p));
  if (!is_strongly_connected(dg, max_edges))
    return false;
  EdgeSet covered;
  for (EdgeSet c : directed_cycles(dg, max_edges)) {
    if (!c.contains(p))
      return false;
    covered |= c;
  }
  return covered == dg.g.live();
}

}  // namespace activebij
