#pragma once

#include <algorithm>
#include <vector>

#include "activebij/activity.hpp"
#include "activebij/digraph.hpp"
#include "activebij/graph.hpp"

namespace activebij {

/** Nested chain F'_eps = {} c ... c F'_0 = F_c = F_0 c ... c F_iota = E.
 *  `cyclic` stores the chain below the cyclic flat in ascending order
 *  ({} first, F_c last); `acyclic` stores the chain above it in ascending
 *  order (F_c first, E last).  Both always contain the shared F_c. */
struct Filtration {
  std::vector<EdgeSet> cyclic;
  std::vector<EdgeSet> acyclic;

  EdgeSet cyclic_flat() const { return acyclic.front(); }
  int iota() const { return static_cast<int>(acyclic.size()) - 1; }
  int epsilon() const { return static_cast<int>(cyclic.size()) - 1; }
  friend bool operator==(const Filtration &, const Filtration &) = default;
};

struct Part {
  int min_edge;
  EdgeSet edges;
  bool cyclic;
  friend bool operator==(const Part &, const Part &) = default;
};

/// Active partition: the successive differences of a filtration, each tagged
/// with the side of the cyclic flat it comes from.  Parts are kept sorted by
/// their smallest edge.
struct ActivePartition {
  std::vector<Part> parts;

  EdgeSet cyclic_flat() const {
    EdgeSet f;
    for (const Part &p : parts)
      if (p.cyclic)
        f |= p.edges;
    return f;
  }
  EdgeSet ground() const {
    EdgeSet f;
    for (const Part &p : parts)
      f |= p.edges;
    return f;
  }
  friend bool operator==(const ActivePartition &, const ActivePartition &) = default;
};

inline ActivePartition partition_of(const Filtration &f) {
  ActivePartition p;
  for (std::size_t k = 1; k < f.cyclic.size(); ++k) {
    EdgeSet diff = f.cyclic[k] - f.cyclic[k - 1];
    p.parts.push_back({diff.min(), diff, true});
  }
  for (std::size_t k = 1; k < f.acyclic.size(); ++k) {
    EdgeSet diff = f.acyclic[k] - f.acyclic[k - 1];
    p.parts.push_back({diff.min(), diff, false});
  }
  std::sort(p.parts.begin(), p.parts.end(),
            [](const Part &a, const Part &b) { return a.min_edge < b.min_edge; });
  return p;
}

/// Rebuild the filtration from a partition: part minima identify the position
/// of every part in the chain.
inline Filtration filtration_of(const ActivePartition &p) {
  std::vector<Part> cyc, acy;
  for (const Part &pt : p.parts)
    (pt.cyclic ? cyc : acy).push_back(pt);
  // parts are sorted by min already
  Filtration f;
  EdgeSet fc = p.cyclic_flat();
  // Cyclic side: the part with the smallest minimum is the outermost
  // difference F_c \ F'_1.
  EdgeSet cur = fc;
  f.cyclic.push_back(cur);
  for (const Part &pt : cyc) {
    cur = cur - pt.edges;
    f.cyclic.push_back(cur);
  }
  std::reverse(f.cyclic.begin(), f.cyclic.end());
  cur = fc;
  f.acyclic.push_back(cur);
  for (const Part &pt : acy) {
    cur = cur | pt.edges;
    f.acyclic.push_back(cur);
  }
  return f;
}

/// Drop one edge from its part (used by the deletion/contraction recursion on
/// the greatest edge).
inline ActivePartition remove_edge(ActivePartition p, int e) {
  for (auto it = p.parts.begin(); it != p.parts.end(); ++it) {
    if (!it->edges.contains(e))
      continue;
    it->edges.erase(e);
    if (it->edges.empty())
      p.parts.erase(it);
    else
      it->min_edge = it->edges.min();
    return p;
  }
  throw std::invalid_argument("edge not in partition");
}

inline Filtration active_filtration(const Digraph &dg,
                                    int max_edges = kDefaultEdgeCap) {
  std::vector<EdgeSet> dcyc = directed_cycles(dg, max_edges);
  std::vector<EdgeSet> dcoc = directed_cocycles(dg, max_edges);
  EdgeSet E = dg.g.live();
  EdgeSet actives, duals;
  EdgeSet fc;
  for (EdgeSet c : dcyc) {
    actives.insert(c.min());
    fc |= c;
  }
  for (EdgeSet d : dcoc)
    duals.insert(d.min());

  Filtration f;
  f.cyclic.push_back(EdgeSet{});
  std::vector<int> as = actives.to_vector();
  for (std::size_t k = as.size(); k-- > 1;) {
    EdgeSet fk;  // F'_k: union of directed cycles with minimum >= a'_{k+1}
    for (EdgeSet c : dcyc)
      if (c.min() >= as[k])
        fk |= c;
    f.cyclic.push_back(fk);
  }
  if (!as.empty())
    f.cyclic.push_back(fc);
  else if (!fc.empty())
    throw std::logic_error("directed cycles without an active edge");

  f.acyclic.push_back(fc);
  std::vector<int> ds = duals.to_vector();
  for (std::size_t k = 1; k < ds.size(); ++k) {
    EdgeSet cut;  // union of directed cocycles with minimum >= a_{k+1}
    for (EdgeSet d : dcoc)
      if (d.min() >= ds[k])
        cut |= d;
    f.acyclic.push_back(E - cut);
  }
  if (!ds.empty())
    f.acyclic.push_back(E);
  else if (fc != E)
    throw std::logic_error("directed cocycles without a dual-active edge");
  return f;
}

inline ActivePartition active_partition(const Digraph &dg,
                                        int max_edges = kDefaultEdgeCap) {
  return partition_of(active_filtration(dg, max_edges));
}

struct ActiveMinor {
  Digraph minor;
  bool cyclic;
  int min_edge;
};

/// Induced minors of a digraph along its active filtration, each bipolar
/// (acyclic side) or cyclic-bipolar (cyclic side) w.r.t. its smallest edge.
inline std::vector<ActiveMinor> active_minors(const Digraph &dg,
                                              int max_edges = kDefaultEdgeCap) {
  Filtration f = active_filtration(dg, max_edges);
  std::vector<ActiveMinor> out;
  for (std::size_t k = 1; k < f.cyclic.size(); ++k) {
    Digraph m = dg.restrict_to(f.cyclic[k]).contract(f.cyclic[k - 1]);
    int a = (f.cyclic[k] - f.cyclic[k - 1]).min();
    if (!is_cyclic_bipolar(m, a, max_edges))
      throw std::logic_error("cyclic active minor is not cyclic-bipolar");
    out.push_back({std::move(m), true, a});
  }
  for (std::size_t k = 1; k < f.acyclic.size(); ++k) {
    Digraph m = dg.restrict_to(f.acyclic[k]).contract(f.acyclic[k - 1]);
    int a = (f.acyclic[k] - f.acyclic[k - 1]).min();
    if (!is_bipolar(m, a, max_edges))
      throw std::logic_error("acyclic active minor is not bipolar");
    out.push_back({std::move(m), false, a});
  }
  return out;
}

inline bool is_filtration(const OrderedGraph &g, const Filtration &f) {
  if (f.cyclic.empty() || f.acyclic.empty())
    return false;
  if (!f.cyclic.front().empty() || f.acyclic.back() != g.live() ||
      f.cyclic.back() != f.acyclic.front())
    return false;
  for (const EdgeSet &s : f.acyclic)
    if (!s.subset_of(g.live()))
      return false;
  // strict nesting
  for (std::size_t k = 1; k < f.cyclic.size(); ++k)
    if (!f.cyclic[k - 1].subset_of(f.cyclic[k]) || f.cyclic[k - 1] == f.cyclic[k])
      return false;
  for (std::size_t k = 1; k < f.acyclic.size(); ++k)
    if (!f.acyclic[k - 1].subset_of(f.acyclic[k]) || f.acyclic[k - 1] == f.acyclic[k])
      return false;
  // acyclic side: min(F_k \ F_{k-1}) increasing with k
  int prev = 0;
  for (std::size_t k = 1; k < f.acyclic.size(); ++k) {
    int m = (f.acyclic[k] - f.acyclic[k - 1]).min();
    if (m <= prev)
      return false;
    prev = m;
  }
  // cyclic side: min(F'_{k-1} \ F'_k) increasing with k, i.e. decreasing in
  // ascending storage order
  prev = 33;
  for (std::size_t k = 1; k < f.cyclic.size(); ++k) {
    int m = (f.cyclic[k] - f.cyclic[k - 1]).min();
    if (m >= prev)
      return false;
    prev = m;
  }
  return true;
}

namespace detail {

inline bool valid_layer(const OrderedGraph &minor, bool cyclic_side) {
  if (minor.edge_count() == 1) {
    EdgeKind k = minor.classify_edge(minor.edges().front().id);
    return cyclic_side ? k == EdgeKind::loop : k == EdgeKind::isthmus;
  }
  return minor.edge_count() >= 2 && is_2connected_loopless(minor);
}

}  // namespace detail

/// Number of spanning trees with internal activity i and external activity j.
inline long long count_trees_with_activities(const OrderedGraph &g, int i, int j) {
  long long n = 0;
  for (EdgeSet T : spanning_trees(g)) {
    TreeActivities a = tree_activities(g, T);
    if (a.internal.size() == i && a.external.size() == j)
      ++n;
  }
  return n;
}

inline long long beta(const OrderedGraph &g) {
  return count_trees_with_activities(g, 1, 0);
}
inline long long beta_star(const OrderedGraph &g) {
  return count_trees_with_activities(g, 0, 1);
}

inline bool is_connected_filtration(const OrderedGraph &g, const Filtration &f) {
  if (!is_filtration(g, f))
    return false;
  bool structural = true, by_beta = true;
  for (std::size_t k = 1; k < f.cyclic.size(); ++k) {
    OrderedGraph m = g.restrict_to(f.cyclic[k]).contract(f.cyclic[k - 1]);
    structural = structural && detail::valid_layer(m, true);
    by_beta = by_beta && (m.edge_count() == 1 ? beta_star(m) != 0
                                              : beta(m) != 0 && beta_star(m) != 0);
  }
  for (std::size_t k = 1; k < f.acyclic.size(); ++k) {
    OrderedGraph m = g.restrict_to(f.acyclic[k]).contract(f.acyclic[k - 1]);
    structural = structural && detail::valid_layer(m, false);
    by_beta = by_beta && (m.edge_count() == 1 ? beta(m) != 0
                                              : beta(m) != 0 && beta_star(m) != 0);
  }
  if (structural != by_beta)
    throw std::logic_error("connected-filtration criteria disagree");
  return structural;
}

namespace detail {

inline void enumerate_cyclic_chains(const OrderedGraph &g, EdgeSet S, int lower,
                                    std::vector<EdgeSet> &chain,
                                    const std::vector<EdgeSet> &acyclic_chain,
                                    std::vector<Filtration> &out) {
  if (S.empty()) {
    Filtration f;
    f.cyclic = chain;  // built outermost-first: F_c, F'_1, ..., {}
    std::reverse(f.cyclic.begin(), f.cyclic.end());
    f.acyclic = acyclic_chain;
    out.push_back(std::move(f));
    return;
  }
  for_each_subset(S, [&](EdgeSet F) {
    if (F == S)
      return;
    int m = (S - F).min();
    if (m <= lower)
      return;
    OrderedGraph minor = g.restrict_to(S).contract(F);
    if (!valid_layer(minor, true))
      return;
    chain.push_back(F);
    enumerate_cyclic_chains(g, F, m, chain, acyclic_chain, out);
    chain.pop_back();
  });
}

inline void enumerate_acyclic_chains(const OrderedGraph &g, EdgeSet S, int upper,
                                     std::vector<EdgeSet> &chain,
                                     std::vector<Filtration> &out) {
  // Treat S as the cyclic flat and enumerate the chain inside it.
  std::vector<EdgeSet> acyclic(chain.rbegin(), chain.rend());
  std::vector<EdgeSet> cyc = {S};
  enumerate_cyclic_chains(g, S, 0, cyc, acyclic, out);
  for_each_subset(S, [&](EdgeSet F) {
    if (F == S)
      return;
    int m = (S - F).min();
    if (m >= upper)
      return;
    OrderedGraph minor = g.restrict_to(S).contract(F);
    if (!valid_layer(minor, false))
      return;
    chain.push_back(F);
    enumerate_acyclic_chains(g, F, m, chain, out);
    chain.pop_back();
  });
}

}  // namespace detail

/// Every connected filtration of G, once each (desk scale only).
inline std::vector<Filtration> enumerate_connected_filtrations(
    const OrderedGraph &g, int max_edges = 10) {
  if (g.edge_count() > max_edges)
    throw resource_limit_error("filtration enumeration cap exceeded");
  std::vector<Filtration> out;
  std::vector<EdgeSet> chain = {g.live()};
  detail::enumerate_acyclic_chains(g, g.live(), 33, chain, out);
  std::sort(out.begin(), out.end(), [](const Filtration &a, const Filtration &b) {
    return std::make_pair(a.cyclic, a.acyclic) < std::make_pair(b.cyclic, b.acyclic);
  });
  return out;
}

struct ActivityClass {
  EdgeSet representative;         // the defining reorientation subset
  ActivePartition partition;
  std::vector<EdgeSet> members;   // all reorientation subsets in the class,
                                  // relative to the stored edge directions
};

/// Activity class of a digraph: everything reachable by reorienting unions of
/// parts of its active partition.
inline ActivityClass activity_class(const Digraph &dg,
                                    int max_edges = kDefaultEdgeCap) {
  ActivityClass cls;
  cls.representative = dg.reorient;
  cls.partition = active_partition(dg, max_edges);
  std::vector<EdgeSet> parts;
  for (const Part &p : cls.partition.parts)
    parts.push_back(p.edges);
  std::uint32_t n = static_cast<std::uint32_t>(parts.size());
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    EdgeSet u;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((pick >> i) & 1)
        u |= parts[i];
    cls.members.push_back(dg.reorient ^ u);
  }
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

/// The unique member of the class that is active-fixed and dual-active-fixed
/// with respect to the reference orientation; returned as a reorientation
/// subset relative to that reference.
inline EdgeSet class_representative(const Digraph &ref, const ActivityClass &cls,
                                    int max_edges = kDefaultEdgeCap) {
  bool found = false;
  EdgeSet result;
  for (EdgeSet member : cls.members) {
    EdgeSet A = member ^ ref.reorient;
    ActivitySets o = activity_sets(ref.reoriented(A), max_edges);
    if ((o.active & A).empty() && (o.dual_active & A).empty()) {
      if (found)
        throw std::logic_error("activity class representative not unique");
      found = true;
      result = A;
    }
  }
  if (!found)
    throw std::logic_error("activity class has no fixed representative");
  return result;
}

}  // namespace activebij
