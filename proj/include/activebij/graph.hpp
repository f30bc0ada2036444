#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "activebij/edge_set.hpp"

namespace activebij {

/// Raised when an enumeration would exceed the configured desk-scale cap.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default cap on the number of live edges for cycle/cocycle enumeration.
inline constexpr int kDefaultEdgeCap = 20;

enum class EdgeKind { loop, isthmus, ordinary };

/// Edge with its rank in the linear order and its reference direction u -> v.
struct Edge {
  int id;
  int u;  // tail
  int v;  // head
  friend bool operator==(const Edge &, const Edge &) = default;
};

/** Connected multigraph on a linearly ordered edge set.  Minors keep the edge
 *  identifiers of the graph they came from, so cycles and cocycles of minors
 *  are subsets of the original ground set. */
class OrderedGraph {
public:
  OrderedGraph(int vertex_count, std::vector<Edge> edges)
      : nv_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge &a, const Edge &b) { return a.id < b.id; });
    for (const Edge &e : edges_) {
      if (e.id < 1 || e.id > 32)
        throw std::invalid_argument("edge id out of range");
      if (e.u < 0 || e.u >= nv_ || e.v < 0 || e.v >= nv_)
        throw std::invalid_argument("edge endpoint out of range");
      if (live_.contains(e.id))
        throw std::invalid_argument("duplicate edge id");
      live_.insert(e.id);
    }
  }

  /// Build from a 0-based endpoint list; edge ids are the 1-based positions.
  static OrderedGraph from_endpoints(int vertex_count,
                                     const std::vector<std::pair<int, int>> &ends) {
    std::vector<Edge> es;
    es.reserve(ends.size());
    int id = 1;
    for (auto [u, v] : ends)
      es.push_back({id++, u, v});
    return OrderedGraph(vertex_count, std::move(es));
  }

  int vertex_count() const { return nv_; }
  const std::vector<Edge> &edges() const { return edges_; }
  EdgeSet live() const { return live_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge &edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge &e, int i) { return e.id < i; });
    if (it == edges_.end() || it->id != id)
      throw std::invalid_argument("unknown edge id");
    return *it;
  }

  /// Restriction G(F): keep the edges of F, drop isolated vertices.
  OrderedGraph restrict_to(EdgeSet F) const {
    require_subset(F);
    if (F == live_)
      return *this;
    std::vector<int> label(nv_, -1);
    int next = 0;
    std::vector<Edge> es;
    for (const Edge &e : edges_) {
      if (!F.contains(e.id))
        continue;
      if (label[e.u] < 0)
        label[e.u] = next++;
      if (label[e.v] < 0)
        label[e.v] = next++;
      es.push_back({e.id, label[e.u], label[e.v]});
    }
    return OrderedGraph(std::max(next, 1), std::move(es));
  }

  /// Contraction G/F: merge the endpoints of F componentwise, keep E \ F.
  OrderedGraph contract(EdgeSet F) const {
    require_subset(F);
    if (F.empty())
      return *this;
    std::vector<int> parent(nv_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge &e : edges_)
      if (F.contains(e.id))
        parent[find(e.u)] = find(e.v);
    std::vector<int> label(nv_, -1);
    int next = 0;
    std::vector<Edge> es;
    for (const Edge &e : edges_) {
      if (F.contains(e.id))
        continue;
      int u = find(e.u), v = find(e.v);
      if (label[u] < 0)
        label[u] = next++;
      if (label[v] < 0)
        label[v] = next++;
      es.push_back({e.id, label[u], label[v]});
    }
    // A contracted component with no remaining incident edge still counts as
    // one merged vertex; when everything was contracted the result is a
    // single vertex.
    if (es.empty())
      return OrderedGraph(1, {});
    return OrderedGraph(next, std::move(es));
  }

  /// Number of connected components induced by the edge subset A on the full
  /// vertex set.
  int components(EdgeSet A) const {
    std::vector<int> parent(nv_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = nv_;
    for (const Edge &e : edges_) {
      if (!A.contains(e.id))
        continue;
      int u = find(e.u), v = find(e.v);
      if (u != v) {
        parent[u] = v;
        --comps;
      }
    }
    return comps;
  }

  bool is_connected() const { return components(live_) == 1; }

  /// Matroid rank of the edge subset A: |V| minus the number of components
  /// spanned by A.
  int rank(EdgeSet A) const {
    require_subset(A);
    return nv_ - components(A);
  }
  int rank() const { return nv_ - 1; }

  EdgeKind classify_edge(int id) const {
    const Edge &e = edge(id);
    if (e.u == e.v)
      return EdgeKind::loop;
    if (components(live_ - EdgeSet::single(id)) > components(live_))
      return EdgeKind::isthmus;
    return EdgeKind::ordinary;
  }

  void require_subset(EdgeSet F) const {
    if (!F.subset_of(live_))
      throw std::invalid_argument("edge subset not contained in the graph");
  }

private:
  int nv_;
  std::vector<Edge> edges_;
  EdgeSet live_;
};

namespace detail {

inline void sort_sets(std::vector<EdgeSet> &v) { std::sort(v.begin(), v.end()); }

}  // namespace detail

/// All inclusion-minimal cycles (circuits), each as an unsigned edge set.
/// A single loop is a cycle; two parallel edges form a cycle.
inline std::vector<EdgeSet> all_cycles(const OrderedGraph &g,
                                       int max_edges = kDefaultEdgeCap) {
  if (g.edge_count() > max_edges)
    throw resource_limit_error("cycle enumeration cap exceeded");
  std::vector<EdgeSet> out;
  int nv = g.vertex_count();
  std::vector<int> deg(nv);
  for_each_subset(g.live(), [&](EdgeSet s) {
    if (s.empty())
      return;
    std::fill(deg.begin(), deg.end(), 0);
    for (int id : s) {
      const Edge &e = g.edge(id);
      deg[e.u] += e.u == e.v ? 2 : 1;
      deg[e.v] += e.u == e.v ? 0 : 1;
    }
    int touched = 0;
    for (int d : deg) {
      if (d != 0 && d != 2)
        return;
      if (d)
        ++touched;
    }
    // Every vertex has degree 0 or 2, so s is a disjoint union of cycles; it
    // is a single cycle exactly when its support vertices form one component.
    if (nv - g.components(s) == touched - 1)
      out.push_back(s);
  });
  detail::sort_sets(out);
  return out;
}

/// All cocycles (bonds / minimal edge cuts), each as an unsigned edge set.
inline std::vector<EdgeSet> all_cocycles(const OrderedGraph &g,
                                         int max_edges = kDefaultEdgeCap) {
  if (g.edge_count() > max_edges)
    throw resource_limit_error("cocycle enumeration cap exceeded");
  if (!g.is_connected())
    throw std::domain_error("cocycles require a connected graph");
  std::vector<EdgeSet> out;
  int nv = g.vertex_count();
  // A bond is the edge set between the two sides of a vertex bipartition
  // whose removal leaves exactly two components.
  for (std::uint32_t side = 1; side < (1u << (nv - 1)); ++side) {
    EdgeSet cut;
    for (const Edge &e : g.edges()) {
      bool su = (side >> e.u) & 1, sv = (side >> e.v) & 1;
      if (su != sv)
        cut.insert(e.id);
    }
    if (cut.empty())
      continue;
    if (g.components(g.live() - cut) == 2)
      out.push_back(cut);
  }
  std::sort(out.begin(), out.end(),
            [](EdgeSet a, EdgeSet b) { return a.bits() < b.bits(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  detail::sort_sets(out);
  return out;
}

/// All spanning trees, as edge sets, in lexicographic order.
inline std::vector<EdgeSet> spanning_trees(const OrderedGraph &g) {
  if (!g.is_connected())
    throw std::domain_error("spanning trees require a connected graph");
  int want = g.rank();
  std::vector<EdgeSet> out;
  for_each_subset(g.live(), [&](EdgeSet s) {
    if (s.size() == want && g.components(s) == 1)
      out.push_back(s);
  });
  detail::sort_sets(out);
  return out;
}

namespace detail {

/// Vertex set (as a bitmask) of the component of `start` in the subgraph on
/// the edges of A.
inline std::uint32_t component_of(const OrderedGraph &g, EdgeSet A, int start) {
  std::uint32_t seen = 1u << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge &e : g.edges()) {
      if (!A.contains(e.id))
        continue;
      bool su = (seen >> e.u) & 1, sv = (seen >> e.v) & 1;
      if (su != sv) {
        seen |= (1u << e.u) | (1u << e.v);
        grew = true;
      }
    }
  }
  return seen;
}

}  // namespace detail

/** Signed fundamental cycle C(T;e) of e relative to the spanning tree T, with
 *  e positive.  An edge is positive when the traversal that takes e from its
 *  tail to its head crosses it tail to head too. */
inline SignedEdgeSet fundamental_cycle(const OrderedGraph &g, EdgeSet T, int e) {
  g.require_subset(T | EdgeSet::single(e));
  if (T.contains(e))
    throw std::domain_error("fundamental cycle needs an edge outside the tree");
  const Edge &ed = g.edge(e);
  SignedEdgeSet c;
  c.positive.insert(e);
  if (ed.u == ed.v)
    return c;  // loop: the cycle is the edge alone
  // Walk the tree path from head(e) back to tail(e).
  int nv = g.vertex_count();
  std::vector<int> via_edge(nv, 0), via_from(nv, -1);
  std::vector<int> stack = {ed.v};
  std::vector<bool> seen(nv, false);
  seen[ed.v] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Edge &t : g.edges()) {
      if (!T.contains(t.id))
        continue;
      int y = t.u == x ? t.v : (t.v == x ? t.u : -1);
      if (y < 0 || seen[y])
        continue;
      seen[y] = true;
      via_edge[y] = t.id;
      via_from[y] = x;
      stack.push_back(y);
    }
  }
  for (int x = ed.u; x != ed.v;) {
    const Edge &t = g.edge(via_edge[x]);
    int prev = via_from[x];
    // The traversal that makes e positive runs tail(e) -> head(e) via e and
    // then back along the tree path; on the path it crosses t from prev to x.
    bool forward = (t.u == prev && t.v == x);
    if (forward)
      c.positive.insert(t.id);
    else
      c.negative.insert(t.id);
    x = prev;
  }
  return c;
}

/** Signed fundamental cocycle C*(T;b) of b in the spanning tree T, with b
 *  positive.  An edge is positive when it crosses from the side containing
 *  tail(b) to the other side. */
inline SignedEdgeSet fundamental_cocycle(const OrderedGraph &g, EdgeSet T, int b) {
  g.require_subset(T);
  if (!T.contains(b))
    throw std::domain_error("fundamental cocycle needs a tree edge");
  const Edge &ed = g.edge(b);
  std::uint32_t side = detail::component_of(g, T - EdgeSet::single(b), ed.u);
  SignedEdgeSet d;
  for (const Edge &e : g.edges()) {
    bool su = (side >> e.u) & 1, sv = (side >> e.v) & 1;
    if (su == sv)
      continue;
    if (su)
      d.positive.insert(e.id);
    else
      d.negative.insert(e.id);
  }
  return d;
}

/// Loopless and 2-vertex-connected; a loopless two-vertex graph with at least
/// one edge counts as 2-connected.
inline bool is_2connected_loopless(const OrderedGraph &g) {
  for (const Edge &e : g.edges())
    if (e.u == e.v)
      return false;
  if (!g.is_connected() || g.edge_count() == 0)
    return false;
  int nv = g.vertex_count();
  if (nv <= 2)
    return true;
  for (int cut = 0; cut < nv; ++cut) {
    // Check connectivity of the graph with vertex `cut` removed.
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = nv - 1;
    for (const Edge &e : g.edges()) {
      if (e.u == cut || e.v == cut)
        continue;
      int u = find(e.u), v = find(e.v);
      if (u != v) {
        parent[u] = v;
        --comps;
      }
    }
    if (comps > 1)
      return false;
  }
  return true;
}

}  // namespace activebij
