#pragma once

#include <initializer_list>
#include <vector>

#include "activebij/edge_set.hpp"
#include "activebij/graph.hpp"

namespace activebij::testing {

inline EdgeSet S(std::initializer_list<int> l) {
  EdgeSet s;
  for (int e : l)
    s.insert(e);
  return s;
}

inline OrderedGraph k3_graph() {
  return OrderedGraph::from_endpoints(3, {{0, 1}, {0, 2}, {1, 2}});
}

// Complete graph on 4 vertices with edges ranked lexicographically by
// endpoints; its triangles are {1,2,3}, {1,4,5}, {2,4,6}, {3,5,6}.  The
// stored tail -> head directions are the reference orientation of the golden
// tables below (recovered by search: it is the unique one, up to reversing
// everything, that realizes the class-to-tree assignment).
inline OrderedGraph k4_graph() {
  return OrderedGraph::from_endpoints(4,
                                      {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
}

/// One golden row: a spanning tree with its active filtration, active
/// partition and full orientation activity class (reorientation subsets
/// relative to the reference orientation).
struct GoldenRow {
  EdgeSet tree;
  std::vector<std::pair<EdgeSet, bool>> parts;  // (edges, cyclic)
  std::vector<EdgeSet> cyclic_chain;            // ascending, {} ... F_c
  std::vector<EdgeSet> acyclic_chain;           // ascending, F_c ... E
  std::vector<EdgeSet> members;                 // sorted
};

inline std::vector<GoldenRow> k3_golden() {
  EdgeSet E = S({1, 2, 3});
  return {
      {S({1, 2}),
       {{S({1}), false}, {S({2, 3}), false}},
       {{}},
       {{}, S({1}), E},
       {S({}), S({1}), E, S({2, 3})}},
      {S({1, 3}), {{E, false}}, {{}}, {{}, E}, {S({1, 2}), S({3})}},
      {S({2, 3}), {{E, true}}, {{}, E}, {E}, {S({1, 3}), S({2})}},
  };
}

inline std::vector<GoldenRow> k4_golden() {
  EdgeSet E = S({1, 2, 3, 4, 5, 6});
  return {
      {S({1, 2, 4}),
       {{S({1}), false}, {S({2, 3}), false}, {S({4, 5, 6}), false}},
       {{}},
       {{}, S({1}), S({1, 2, 3}), E},
       {S({}), S({1}), S({1, 2, 3}), E, S({1, 4, 5, 6}), S({2, 3}),
        S({2, 3, 4, 5, 6}), S({4, 5, 6})}},
      {S({1, 2, 5}),
       {{S({1, 4, 5}), false}, {S({2, 3, 6}), false}},
       {{}},
       {{}, S({1, 4, 5}), E},
       {S({1, 2, 3, 4}), S({1, 4, 6}), S({2, 3, 5}), S({5, 6})}},
      {S({1, 2, 6}),
       {{S({1}), false}, {S({2, 3, 4, 5, 6}), false}},
       {{}},
       {{}, S({1}), E},
       {S({1, 2, 3, 4, 5}), S({1, 6}), S({2, 3, 4, 5}), S({6})}},
      {S({1, 3, 4}),
       {{S({1, 2, 3}), false}, {S({4, 5, 6}), false}},
       {{}},
       {{}, S({1, 2, 3}), E},
       {S({1, 2}), S({1, 2, 4, 5, 6}), S({3}), S({3, 4, 5, 6})}},
      {S({1, 3, 5}),
       {{E, false}},
       {{}},
       {{}, E},
       {S({1, 2, 4, 6}), S({3, 5})}},
      {S({1, 3, 6}),
       {{E, false}},
       {{}},
       {{}, E},
       {S({1, 2, 4}), S({3, 5, 6})}},
      {S({1, 4, 6}),
       {{S({1, 3, 5}), false}, {S({2, 4, 6}), true}},
       {{}, S({2, 4, 6})},
       {S({2, 4, 6}), E},
       {S({1, 2, 6}), S({1, 4}), S({2, 3, 5, 6}), S({3, 4, 5})}},
      {S({1, 5, 6}),
       {{S({1, 2, 4}), false}, {S({3, 5, 6}), true}},
       {{}, S({3, 5, 6})},
       {S({3, 5, 6}), E},
       {S({1, 2, 3, 4, 6}), S({1, 2, 4, 5}), S({3, 6}), S({5})}},
      {S({2, 3, 4}),
       {{S({1, 2, 3}), true}, {S({4, 5, 6}), false}},
       {{}, S({1, 2, 3})},
       {S({1, 2, 3}), E},
       {S({1, 3}), S({1, 3, 4, 5, 6}), S({2}), S({2, 4, 5, 6})}},
      {S({2, 3, 5}),
       {{E, true}},
       {{}, E},
       {E},
       {S({1, 3, 5}), S({2, 4, 6})}},
      {S({2, 3, 6}),
       {{E, true}},
       {{}, E},
       {E},
       {S({1, 3, 5, 6}), S({2, 4})}},
      {S({2, 4, 5}),
       {{S({1, 4, 5}), true}, {S({2, 3, 6}), false}},
       {{}, S({1, 4, 5})},
       {S({1, 4, 5}), E},
       {S({1, 2, 3, 5}), S({1, 5, 6}), S({2, 3, 4}), S({4, 6})}},
      {S({2, 5, 6}),
       {{S({1, 2, 4}), true}, {S({3, 5, 6}), true}},
       {{}, S({3, 5, 6}), E},
       {E},
       {S({1, 3, 6}), S({1, 5}), S({2, 3, 4, 6}), S({2, 4, 5})}},
      {S({3, 4, 5}),
       {{S({1}), true}, {S({2, 3, 4, 5, 6}), true}},
       {{}, S({2, 3, 4, 5, 6}), E},
       {E},
       {S({1, 2, 5, 6}), S({1, 3, 4}), S({2, 5, 6}), S({3, 4})}},
      {S({3, 4, 6}),
       {{S({1, 3, 5}), true}, {S({2, 4, 6}), true}},
       {{}, S({2, 4, 6}), E},
       {E},
       {S({1, 2, 3, 5, 6}), S({1, 3, 4, 5}), S({2, 6}), S({4})}},
      {S({4, 5, 6}),
       {{S({1}), true}, {S({2, 4}), true}, {S({3, 5, 6}), true}},
       {{}, S({3, 5, 6}), S({2, 3, 4, 5, 6}), E},
       {E},
       {S({1, 2, 3, 6}), S({1, 2, 5}), S({1, 3, 4, 6}), S({1, 4, 5}),
        S({2, 3, 6}), S({2, 5}), S({3, 4, 6}), S({4, 5})}},
  };
}

}  // namespace activebij::testing
