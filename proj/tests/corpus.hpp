#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "activebij/graph.hpp"

namespace activebij::testing {

/// Canonical form: the edge list (kept sorted, which is the linear order) is
/// lexicographically minimal over all relabelings of the vertices.
inline bool is_canonical(int nv, const std::vector<std::pair<int, int>> &edges) {
  std::vector<int> perm(nv);
  for (int i = 0; i < nv; ++i)
    perm[i] = i;
  std::vector<std::pair<int, int>> mapped(edges.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      int u = perm[edges[i].first], v = perm[edges[i].second];
      mapped[i] = {std::min(u, v), std::max(u, v)};
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < edges)
      return false;
  }
  return true;
}

inline bool connected_on_all(int nv, const std::vector<std::pair<int, int>> &edges) {
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i)
    parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = nv;
  for (auto [u, v] : edges)
    if (find(u) != find(v)) {
      parent[find(u)] = find(v);
      --comps;
    }
  return comps == 1;
}

/// One representative per isomorphism class of connected multigraphs (loops
/// and parallel edges allowed) with at most `max_vertices` vertices and at
/// most `max_edges` edges.  The sorted endpoint list is the linear order.
inline std::vector<OrderedGraph> exhaustive_corpus(int max_vertices = 5,
                                                   int max_edges = 7) {
  std::vector<OrderedGraph> out;
  for (int nv = 1; nv <= max_vertices; ++nv) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < nv; ++u)
      for (int v = u; v < nv; ++v)
        pairs.push_back({u, v});
    std::vector<std::pair<int, int>> edges;
    auto rec = [&](auto &&self, std::size_t from) -> void {
      if (connected_on_all(nv, edges) && is_canonical(nv, edges))
        out.push_back(OrderedGraph::from_endpoints(nv, edges));
      if ((int)edges.size() == max_edges)
        return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        edges.push_back(pairs[i]);
        self(self, i);  // non-decreasing sequences only: each multiset once
        edges.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

/// Seeded random connected multigraphs: a random spanning tree plus random
/// extra edges (loops and parallels allowed), in random list order.
inline std::vector<OrderedGraph> random_corpus(int count, unsigned seed,
                                               int max_edges = 8) {
  std::mt19937 rng(seed);
  std::vector<OrderedGraph> out;
  while ((int)out.size() < count) {
    int nv = 2 + (int)(rng() % 5);
    if (nv - 1 > max_edges)
      continue;
    int ne = nv - 1 + (int)(rng() % (max_edges - (nv - 1) + 1));
    std::vector<std::pair<int, int>> eps;
    for (int v = 1; v < nv; ++v)
      eps.push_back({(int)(rng() % v), v});
    while ((int)eps.size() < ne)
      eps.push_back({(int)(rng() % nv), (int)(rng() % nv)});
    std::shuffle(eps.begin(), eps.end(), rng);
    out.push_back(OrderedGraph::from_endpoints(nv, eps));
  }
  return out;
}

}  // namespace activebij::testing
