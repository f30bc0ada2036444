#include <catch2/catch_amalgamated.hpp>

#include "activebij/graph.hpp"
#include "fixtures.hpp"

using namespace activebij;
using namespace activebij::testing;

TEST_CASE("restriction keeps ambient edge ranks") {
  OrderedGraph k4 = k4_graph();
  OrderedGraph tri = k4.restrict_to(S({1, 2, 3}));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.live() == S({1, 2, 3}));
  for (int e : tri.live())
    CHECK(tri.classify_edge(e) == EdgeKind::ordinary);

  CHECK(k4.restrict_to(k4.live()).live() == k4.live());

  OrderedGraph k3 = k3_graph();
  OrderedGraph one = k3.restrict_to(S({1}));
  CHECK(one.live() == S({1}));
  CHECK(one.classify_edge(1) == EdgeKind::isthmus);
}

TEST_CASE("contraction keeps ambient edge ranks") {
  OrderedGraph k3 = k3_graph();
  OrderedGraph par = k3.contract(S({3}));
  CHECK(par.vertex_count() == 2);
  CHECK(par.live() == S({1, 2}));
  CHECK(par.classify_edge(1) == EdgeKind::ordinary);

  CHECK(k3.contract({}).live() == k3.live());

  OrderedGraph bond = k4_graph().contract(S({1, 2, 3}));
  CHECK(bond.vertex_count() == 2);
  CHECK(bond.live() == S({4, 5, 6}));
}

TEST_CASE("cycle and cocycle enumeration") {
  OrderedGraph k3 = k3_graph();
  CHECK(all_cycles(k3) == std::vector<EdgeSet>{S({1, 2, 3})});
  std::vector<EdgeSet> cocs = all_cocycles(k3);
  std::sort(cocs.begin(), cocs.end());
  CHECK(cocs == std::vector<EdgeSet>{S({1, 2}), S({1, 3}), S({2, 3})});

  OrderedGraph loop = OrderedGraph::from_endpoints(1, {{0, 0}});
  CHECK(all_cycles(loop) == std::vector<EdgeSet>{S({1})});
  CHECK(all_cocycles(loop).empty());

  OrderedGraph k4 = k4_graph();
  std::vector<EdgeSet> cycles = all_cycles(k4);
  CHECK(cycles.size() == 7);
  std::sort(cycles.begin(), cycles.end());
  for (EdgeSet t : {S({1, 2, 3}), S({1, 4, 5}), S({2, 4, 6}), S({3, 5, 6})})
    CHECK(std::binary_search(cycles.begin(), cycles.end(), t));
  CHECK(all_cocycles(k4).size() == 7);
}

TEST_CASE("fundamental cycles") {
  OrderedGraph k3 = k3_graph();
  SignedEdgeSet c = fundamental_cycle(k3, S({1, 2}), 3);
  CHECK(c.support() == S({1, 2, 3}));
  CHECK(c.sign_positive(3));

  c = fundamental_cycle(k3, S({2, 3}), 1);
  CHECK(c.support() == S({1, 2, 3}));
  CHECK(c.sign_positive(1));

  c = fundamental_cycle(k4_graph(), S({1, 3, 4}), 2);
  CHECK(c.support() == S({1, 2, 3}));
  CHECK(c.sign_positive(2));
}

TEST_CASE("fundamental cocycles") {
  OrderedGraph k3 = k3_graph();
  CHECK(fundamental_cocycle(k3, S({1, 2}), 1).support() == S({1, 3}));
  CHECK(fundamental_cocycle(k3, S({1, 2}), 2).support() == S({2, 3}));

  OrderedGraph path = OrderedGraph::from_endpoints(3, {{0, 1}, {1, 2}});
  CHECK(fundamental_cocycle(path, S({1, 2}), 2).support() == S({2}));
}

TEST_CASE("spanning tree enumeration") {
  std::vector<EdgeSet> t3 = spanning_trees(k3_graph());
  std::sort(t3.begin(), t3.end());
  CHECK(t3 == std::vector<EdgeSet>{S({1, 2}), S({1, 3}), S({2, 3})});

  std::vector<EdgeSet> t4 = spanning_trees(k4_graph());
  std::sort(t4.begin(), t4.end());
  std::vector<EdgeSet> expect;
  for (const GoldenRow &row : k4_golden())
    expect.push_back(row.tree);
  std::sort(expect.begin(), expect.end());
  CHECK(t4 == expect);

  OrderedGraph path = OrderedGraph::from_endpoints(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(spanning_trees(path) == std::vector<EdgeSet>{path.live()});
}

TEST_CASE("ranks and components") {
  OrderedGraph k4 = k4_graph();
  CHECK(k4.rank(k4.live()) == 3);
  CHECK(k4.rank(S({1, 2, 3})) == 2);
  CHECK(k4.components(S({1})) == 3);
  CHECK(k4.components(k4.live()) == 1);
}
