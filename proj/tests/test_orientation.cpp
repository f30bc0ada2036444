#include <catch2/catch_amalgamated.hpp>

#include "activebij/digraph.hpp"
#include "fixtures.hpp"

using namespace activebij;
using namespace activebij::testing;

TEST_CASE("directed cycles and cocycles") {
  Digraph tri(OrderedGraph::from_endpoints(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(directed_cycles(tri) == std::vector<EdgeSet>{S({1, 2, 3})});
  CHECK(directed_cocycles(tri).empty());

  Digraph acyc(k3_graph());  // a->b, a->c, b->c
  CHECK(directed_cycles(acyc).empty());
  std::vector<EdgeSet> cocs = directed_cocycles(acyc);
  std::sort(cocs.begin(), cocs.end());
  CHECK(std::binary_search(cocs.begin(), cocs.end(), S({1, 2})));
}

TEST_CASE("activity sets") {
  Digraph tri(OrderedGraph::from_endpoints(3, {{0, 1}, {1, 2}, {2, 0}}));
  ActivitySets o = activity_sets(tri);
  CHECK(o.active == S({1}));
  CHECK(o.dual_active.empty());

  // Reorienting edge 3 of the reference K4 gives the class of tree {1,3,4}.
  Digraph dg = Digraph(k4_graph()).reoriented(S({3}));
  o = activity_sets(dg);
  CHECK(o.active.empty());
  CHECK(o.dual_active == S({1, 4}));
}

TEST_CASE("acyclic and strongly connected predicates") {
  Digraph tri(OrderedGraph::from_endpoints(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(is_strongly_connected(tri));
  CHECK(!is_acyclic(tri));
  CHECK(cyclic_part(tri) == S({1, 2, 3}));

  Digraph acyc(k3_graph());
  CHECK(is_acyclic(acyc));
  CHECK(cyclic_part(acyc).empty());
}

TEST_CASE("bipolar and cyclic-bipolar") {
  Digraph isthmus(OrderedGraph::from_endpoints(2, {{0, 1}}));
  CHECK(is_bipolar(isthmus, 1));
  CHECK(!is_cyclic_bipolar(isthmus, 1));

  Digraph loop(OrderedGraph::from_endpoints(1, {{0, 0}}));
  CHECK(is_cyclic_bipolar(loop, 1));
  CHECK(!is_bipolar(loop, 1));

  // Reorienting {3,5} of the reference K4 lands in the class of tree
  // {1,3,5}, the unique acyclic class with one part: a bipolar orientation.
  Digraph bip = Digraph(k4_graph()).reoriented(S({3, 5}));
  CHECK(is_bipolar(bip, 1));
  ActivitySets o = activity_sets(bip);
  CHECK(o.dual_active == S({1}));
  CHECK(o.active.empty());

  // Reversing the smallest edge of a bipolar digraph is cyclic-bipolar.
  Digraph cyc = bip.reoriented(S({1}));
  CHECK(is_cyclic_bipolar(cyc, 1));
  CHECK(!is_bipolar(cyc, 1));
}

TEST_CASE("opposite digraph has the same activities") {
  Digraph ref(k4_graph());
  for (EdgeSet A : {S({}), S({3}), S({3, 5}), S({1, 4})}) {
    ActivitySets a = activity_sets(ref.reoriented(A));
    ActivitySets b = activity_sets(ref.reoriented(ref.g.live() - A));
    CHECK(a.active == b.active);
    CHECK(a.dual_active == b.dual_active);
  }
}
