#pragma once

#include <array>
#include <utility>
#include <vector>

#include "activebij/activity.hpp"
#include "activebij/digraph.hpp"
#include "activebij/filtration.hpp"
#include "activebij/graph.hpp"

namespace activebij {

namespace detail {

/// Sign criterion characterizing the fully optimal spanning tree of a bipolar
/// (cyclic = false) or cyclic-bipolar (cyclic = true) digraph, where p is the
/// smallest edge.  Every constrained edge must have direction opposite to the
/// smallest edge of its fundamental cocycle (tree edges) or cycle (non-tree
/// edges).
inline bool fully_optimal_check(const Digraph &dg, EdgeSet T, bool cyclic, int p) {
  for (int b : T) {
    if (!cyclic && b == p)
      continue;
    SignedEdgeSet D = fundamental_cocycle(dg.g, T, b);
    int m = D.support().min();
    if (m == b || dg.effective_positive(D, b) == dg.effective_positive(D, m))
      return false;
  }
  for (int e : dg.g.live() - T) {
    if (cyclic && e == p)
      continue;
    SignedEdgeSet C = fundamental_cycle(dg.g, T, e);
    int m = C.support().min();
    if (m == e || dg.effective_positive(C, e) == dg.effective_positive(C, m))
      return false;
  }
  return true;
}

inline EdgeSet unique_fully_optimal(const Digraph &dg, bool cyclic, int p) {
  bool found = false;
  EdgeSet result;
  for (EdgeSet T : spanning_trees(dg.g)) {
    if (!fully_optimal_check(dg, T, cyclic, p))
      continue;
    if (found)
      throw std::logic_error("fully optimal spanning tree is not unique");
    found = true;
    result = T;
  }
  if (!found)
    throw std::logic_error("no fully optimal spanning tree");
  return result;
}

}  // namespace detail

/// Fully optimal spanning tree of a bipolar (cyclic = false) or
/// cyclic-bipolar (cyclic = true) digraph, by exhaustive criterion search.
/// In the cyclic case the active-duality identity
/// alpha(G) = alpha(-p G) \ {p} u {p'} is cross-checked.
inline EdgeSet alpha_uniactive(const Digraph &dg, bool cyclic,
                               int max_edges = kDefaultEdgeCap) {
  int p = dg.g.live().min();
  if (cyclic ? !is_cyclic_bipolar(dg, p, max_edges) : !is_bipolar(dg, p, max_edges))
    throw std::invalid_argument(cyclic ? "digraph is not cyclic-bipolar"
                                       : "digraph is not bipolar");
  EdgeSet T = detail::unique_fully_optimal(dg, cyclic, p);
  if (cyclic && dg.g.edge_count() > 1) {
    EdgeSet Tb = detail::unique_fully_optimal(dg.reoriented(EdgeSet::single(p)),
                                              false, p);
    int p2 = (dg.g.live() - EdgeSet::single(p)).min();
    if (T != ((Tb - EdgeSet::single(p)) | EdgeSet::single(p2)))
      throw std::logic_error("active duality violated");
  }
  return T;
}

/// Canonical active bijection: union of the fully optimal spanning trees of
/// the minors induced by the active filtration.
inline EdgeSet alpha(const Digraph &dg, int max_edges = kDefaultEdgeCap) {
  EdgeSet T;
  for (const ActiveMinor &m : active_minors(dg, max_edges))
    T |= alpha_uniactive(m.minor, m.cyclic, max_edges);
  return T;
}

/// Refined active bijection from reorientations to subsets:
/// alpha_G(A) = alpha(-A G) \ (A ∩ O*(-A G)) u (A ∩ O(-A G)).
inline EdgeSet alpha_refined(const Digraph &ref, EdgeSet A,
                             int max_edges = kDefaultEdgeCap) {
  Digraph d = ref.reoriented(A);
  ActivitySets o = activity_sets(d, max_edges);
  return (alpha(d, max_edges) - (A & o.dual_active)) | (A & o.active);
}

/// Smallest superset A of X (with X externally active) closed under:
/// a non-tree edge of A brings in its whole fundamental cycle, and a
/// non-externally-active non-tree edge whose smaller cycle elements all lie
/// in A joins A.
inline EdgeSet active_closure_external(const OrderedGraph &g, EdgeSet T,
                                       EdgeSet X) {
  TreeActivities act = tree_activities(g, T);
  if (!X.subset_of(act.external))
    throw std::invalid_argument("seed must be externally active");
  EdgeSet A = X;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e : g.live() - T) {
      EdgeSet C = fundamental_cycle(g, T, e).support();
      if (A.contains(e)) {
        if (!C.subset_of(A)) {
          A |= C;
          changed = true;
        }
      } else if (!act.external.contains(e) &&
                 (C & EdgeSet::full(e - 1)).subset_of(A)) {
        A.insert(e);
        changed = true;
      }
    }
  }
  return A;
}

/// Dual closure on the internal side, via fundamental cocycles.
inline EdgeSet active_closure_internal(const OrderedGraph &g, EdgeSet T,
                                       EdgeSet X) {
  TreeActivities act = tree_activities(g, T);
  if (!X.subset_of(act.internal))
    throw std::invalid_argument("seed must be internally active");
  EdgeSet A = X;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b : T) {
      EdgeSet D = fundamental_cocycle(g, T, b).support();
      if (A.contains(b)) {
        if (!D.subset_of(A)) {
          A |= D;
          changed = true;
        }
      } else if (!act.internal.contains(b) &&
                 (D & EdgeSet::full(b - 1)).subset_of(A)) {
        A.insert(b);
        changed = true;
      }
    }
  }
  return A;
}

/// Everything the single pass over the edge set produces for a spanning tree:
/// its active partition, one canonical preimage orientation (all part roots
/// directed as in the reference), and the full preimage class under the
/// canonical bijection.
struct TreeBijectionData {
  ActivePartition partition;
  EdgeSet base_reorient;
  std::vector<EdgeSet> preimages;
};

namespace detail {

/// Single pass computing the active partition of T together with the
/// reorientation whose part roots are flipped exactly on P (internal roots)
/// and Q (external roots).
inline std::pair<ActivePartition, EdgeSet> single_pass(const Digraph &ref,
                                                       EdgeSet T, EdgeSet P,
                                                       EdgeSet Q) {
  const OrderedGraph &g = ref.g;
  std::array<int, 33> part{};
  std::array<bool, 33> cyclic_part{};
  EdgeSet A;
  for (int ek : g.live()) {
    bool in_tree = T.contains(ek);
    SignedEdgeSet s = in_tree ? fundamental_cocycle(g, T, ek)
                              : fundamental_cycle(g, T, ek);
    EdgeSet candidates = s.support() & EdgeSet::full(ek - 1);
    if (candidates.empty()) {  // active: ek starts its own part
      part[ek] = ek;
      cyclic_part[ek] = !in_tree;
      if (in_tree ? P.contains(ek) : Q.contains(ek))
        A.insert(ek);
      continue;
    }
    // Non-tree edges join an internal part when possible (greatest root
    // wins), otherwise the external part with the smallest root; tree edges
    // dually.
    bool preferred = in_tree;
    int chosen = -1;
    for (int c : candidates)
      if (cyclic_part[part[c]] == preferred && part[c] > chosen)
        chosen = part[c];
    if (chosen == -1)
      for (int c : candidates)
        if (chosen == -1 || part[c] < chosen)
          chosen = part[c];
    part[ek] = chosen;
    int a = 0;
    for (int c : candidates)
      if (part[c] == chosen) {
        a = c;
        break;
      }
    // Direct ek opposite to a within the signed cycle/cocycle.
    bool a_eff = s.sign_positive(a) != (ref.flipped(a) != A.contains(a));
    bool ek_ref_eff = s.sign_positive(ek) != ref.flipped(ek);
    if (ek_ref_eff == a_eff)
      A.insert(ek);
  }
  ActivePartition ap;
  for (int root : g.live())
    if (part[root] == root)
      ap.parts.push_back({root, {}, cyclic_part[root]});
  for (int e : g.live())
    for (Part &pt : ap.parts)
      if (pt.min_edge == part[e])
        pt.edges.insert(e);
  return {ap, A};
}

}  // namespace detail

inline TreeBijectionData tree_bijection_data(const Digraph &ref, EdgeSet T) {
  TreeBijectionData data;
  auto [partition, base] = detail::single_pass(ref, T, {}, {});
  data.partition = std::move(partition);
  data.base_reorient = base;
  std::vector<EdgeSet> parts;
  for (const Part &p : data.partition.parts)
    parts.push_back(p.edges);
  std::uint32_t n = static_cast<std::uint32_t>(parts.size());
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    EdgeSet u;
    for (std::uint32_t i = 0; i < n; ++i)
      if ((pick >> i) & 1)
        u |= parts[i];
    data.preimages.push_back(base ^ u);
  }
  std::sort(data.preimages.begin(), data.preimages.end());
  return data;
}

/// Unique reorientation A with alpha_refined(ref, A) == X.
inline EdgeSet refined_preimage(const Digraph &ref, EdgeSet X) {
  EdgeSet T = locate_interval(ref.g, X);
  TreeActivities act = tree_activities(ref.g, T);
  return detail::single_pass(ref, T, act.internal - X, act.external & X).second;
}

/// Active filtration of a spanning tree, computed by three independent
/// routes which are asserted to agree: global closure formulas, inductive
/// peeling of greatest-active closures, and the single pass.
inline Filtration tree_active_filtration(const OrderedGraph &g, EdgeSet T) {
  TreeActivities act = tree_activities(g, T);
  EdgeSet E = g.live();

  // Route 1: global closure formulas.
  EdgeSet fc = active_closure_external(g, T, act.external);
  if (fc != E - active_closure_internal(g, T, act.internal))
    throw std::logic_error("internal/external closures are not complementary");
  Filtration f;
  std::vector<int> ints = act.internal.to_vector();
  std::vector<int> exts = act.external.to_vector();
  f.acyclic.push_back(fc);
  for (std::size_t k = 1; k <= ints.size(); ++k) {
    EdgeSet rest;
    for (std::size_t j = k; j < ints.size(); ++j)
      rest.insert(ints[j]);
    f.acyclic.push_back(E - active_closure_internal(g, T, rest));
  }
  for (std::size_t k = exts.size() + 1; k-- > 1;) {
    EdgeSet rest;
    for (std::size_t j = k; j < exts.size(); ++j)
      rest.insert(exts[j]);
    f.cyclic.push_back(active_closure_external(g, T, rest));
  }
  f.cyclic.push_back(fc);
  if (!is_filtration(g, f))
    throw std::logic_error("closure formulas did not produce a filtration");

  // Route 2: peel off the closure of the greatest active edge and recurse on
  // the corresponding minor.
  ActivePartition route2;
  OrderedGraph cur = g;
  EdgeSet curT = T;
  while (cur.edge_count() > 0) {
    TreeActivities a = tree_activities(cur, curT);
    if (!a.external.empty()) {
      EdgeSet P = active_closure_external(cur, curT,
                                          EdgeSet::single(a.external.max()));
      route2.parts.push_back({P.min(), P, true});
      cur = cur.contract(P);
      curT = curT - P;
    } else {
      EdgeSet P = active_closure_internal(cur, curT,
                                          EdgeSet::single(a.internal.max()));
      route2.parts.push_back({P.min(), P, false});
      cur = cur.restrict_to(cur.live() - P);
      curT = curT - P;
    }
  }
  std::sort(route2.parts.begin(), route2.parts.end(),
            [](const Part &a, const Part &b) { return a.min_edge < b.min_edge; });

  // Route 3: single pass.
  ActivePartition route3 = tree_bijection_data(Digraph(g), T).partition;

  ActivePartition route1 = partition_of(f);
  if (route1 != route2 || route1 != route3)
    throw std::logic_error("active filtration routes disagree");
  return f;
}

/// Fully optimal spanning tree of a bipolar digraph by deletion/contraction
/// on the greatest edge, checking both the cycle and the cocycle
/// formulations of the tie-break against each other.
inline EdgeSet alpha_dc_uniactive(const Digraph &dg,
                                  int max_edges = kDefaultEdgeCap) {
  EdgeSet live = dg.g.live();
  int p = live.min();
  if (dg.g.edge_count() == 1) {
    if (dg.g.classify_edge(p) != EdgeKind::isthmus)
      throw std::invalid_argument("digraph is not bipolar");
    return live;
  }
  int w = live.max();
  EdgeSet sw = EdgeSet::single(w);
  bool w_isthmus = dg.g.classify_edge(w) == EdgeKind::isthmus;
  Digraph con = dg.contract(sw);
  bool con_ok = is_bipolar(con, p, max_edges);
  if (w_isthmus) {
    if (!con_ok)
      throw std::invalid_argument("digraph is not bipolar");
    return alpha_dc_uniactive(con, max_edges) | sw;
  }
  Digraph del = dg.restrict_to(live - sw);
  bool del_ok = is_bipolar(del, p, max_edges);
  if (!del_ok && !con_ok)
    throw std::invalid_argument("digraph is not bipolar");
  if (del_ok && !con_ok)
    return alpha_dc_uniactive(del, max_edges);
  if (con_ok && !del_ok)
    return alpha_dc_uniactive(con, max_edges) | sw;

  EdgeSet Tdel = alpha_dc_uniactive(del, max_edges);
  EdgeSet Tcon = alpha_dc_uniactive(con, max_edges) | sw;
  SignedEdgeSet C = fundamental_cycle(dg.g, Tdel, w);
  bool same_c = dg.effective_positive(C, w) ==
                dg.effective_positive(C, C.support().min());
  SignedEdgeSet D = fundamental_cocycle(dg.g, Tcon, w);
  bool same_d = dg.effective_positive(D, w) ==
                dg.effective_positive(D, D.support().min());
  if (same_c == same_d)
    throw std::logic_error("deletion/contraction tie-breaks disagree");
  return same_c ? Tcon : Tdel;
}

/// Cyclic-bipolar counterpart via active duality.
inline EdgeSet alpha_dc_uniactive_cyclic(const Digraph &dg,
                                         int max_edges = kDefaultEdgeCap) {
  EdgeSet live = dg.g.live();
  if (dg.g.edge_count() == 1)
    return {};
  int p = live.min();
  EdgeSet Tb = alpha_dc_uniactive(dg.reoriented(EdgeSet::single(p)), max_edges);
  int p2 = (live - EdgeSet::single(p)).min();
  return (Tb - EdgeSet::single(p)) | EdgeSet::single(p2);
}

inline EdgeSet alpha_dc(const Digraph &dg, int max_edges);

namespace detail {

/// Choice step shared by the canonical and refined deletion/contraction
/// recursions: decide whether alpha keeps the greatest (ordinary) edge, i.e.
/// whether the contraction branch is taken for the digraph dg.
inline bool dc_choose_contract(const Digraph &dg, int max_edges) {
  EdgeSet live = dg.g.live();
  int w = live.max();
  EdgeSet sw = EdgeSet::single(w);
  Digraph del = dg.restrict_to(live - sw);
  Digraph con = dg.contract(sw);
  ActivePartition pd = active_partition(del, max_edges);
  ActivePartition pc = active_partition(con, max_edges);
  if (pd != pc) {
    // The branch whose partition survives the removal of w is alpha's.
    ActivePartition pr = remove_edge(active_partition(dg, max_edges), w);
    if ((pr == pd) == (pr == pc))
      throw std::logic_error("partition comparison is inconclusive");
    return pr == pc;
  }
  // Tie: decide by full optimality inside the active minor containing w.
  Digraph minor{OrderedGraph(1, {}), {}};
  bool found = false;
  for (ActiveMinor &m : active_minors(dg, max_edges))
    if (m.minor.g.live().contains(w)) {
      minor = std::move(m.minor);
      found = true;
    }
  if (!found)
    throw std::logic_error("no active minor contains the greatest edge");
  EdgeSet Ew = minor.g.live();
  EdgeSet Tp = alpha_dc(del, max_edges) & Ew;
  SignedEdgeSet C = fundamental_cycle(minor.g, Tp, w);
  bool same_c = minor.effective_positive(C, w) ==
                minor.effective_positive(C, C.support().min());
  EdgeSet Tpp = alpha_dc(con, max_edges) & Ew;
  SignedEdgeSet D = fundamental_cocycle(minor.g, Tpp | sw, w);
  bool same_d = minor.effective_positive(D, w) ==
                minor.effective_positive(D, D.support().min());
  if (same_c == same_d)
    throw std::logic_error("full-optimality tie-breaks disagree");
  return same_c;
}

}  // namespace detail

/// Canonical active bijection by deletion/contraction on the greatest edge.
inline EdgeSet alpha_dc(const Digraph &dg, int max_edges) {
  if (dg.g.edge_count() == 0)
    return {};
  int w = dg.g.live().max();
  EdgeSet sw = EdgeSet::single(w);
  switch (dg.g.classify_edge(w)) {
    case EdgeKind::isthmus:
      return alpha_dc(dg.contract(sw), max_edges) | sw;
    case EdgeKind::loop:
      return alpha_dc(dg.restrict_to(dg.g.live() - sw), max_edges);
    case EdgeKind::ordinary:
      break;
  }
  if (detail::dc_choose_contract(dg, max_edges))
    return alpha_dc(dg.contract(sw), max_edges) | sw;
  return alpha_dc(dg.restrict_to(dg.g.live() - sw), max_edges);
}

inline EdgeSet alpha_dc(const Digraph &dg) { return alpha_dc(dg, kDefaultEdgeCap); }

/// Refined active bijection by deletion/contraction: the choice step runs on
/// the reoriented digraph, the recursion keeps the reference.
inline EdgeSet alpha_dc_refined(const Digraph &ref, EdgeSet A,
                                int max_edges = kDefaultEdgeCap) {
  if (ref.g.edge_count() == 0)
    return {};
  int w = ref.g.live().max();
  EdgeSet sw = EdgeSet::single(w);
  EdgeSet A2 = A - sw;
  switch (ref.g.classify_edge(w)) {
    case EdgeKind::isthmus:
      // An isthmus is dual-active in every orientation: it leaves the image
      // exactly when it is reoriented.
      return A.contains(w)
                 ? alpha_dc_refined(ref.contract(sw), A2, max_edges)
                 : alpha_dc_refined(ref.contract(sw), A2, max_edges) | sw;
    case EdgeKind::loop:
      // Dually, a loop enters the image exactly when it is reoriented.
      return A.contains(w)
                 ? alpha_dc_refined(ref.restrict_to(ref.g.live() - sw), A2,
                                    max_edges) | sw
                 : alpha_dc_refined(ref.restrict_to(ref.g.live() - sw), A2,
                                    max_edges);
    case EdgeKind::ordinary:
      break;
  }
  if (detail::dc_choose_contract(ref.reoriented(A), max_edges))
    return alpha_dc_refined(ref.contract(sw), A2, max_edges) | sw;
  return alpha_dc_refined(ref.restrict_to(ref.g.live() - sw), A2, max_edges);
}

}  // namespace activebij
