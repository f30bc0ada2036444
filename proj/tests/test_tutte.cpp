#include <catch2/catch_amalgamated.hpp>

#include "activebij/tutte.hpp"
#include "fixtures.hpp"

using namespace activebij;
using namespace activebij::testing;

namespace {

TuttePoly k3_poly() {  // x^2 + x + y
  return monomial(2, 0) + monomial(1, 0) + monomial(0, 1);
}

TuttePoly k4_poly() {  // x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
  return monomial(3, 0) + monomial(2, 0, 3) + monomial(1, 0, 2) +
         monomial(1, 1, 4) + monomial(0, 1, 2) + monomial(0, 2, 3) +
         monomial(0, 3);
}

}  // namespace

TEST_CASE("four methods on the fixtures") {
  OrderedGraph k3 = k3_graph(), k4 = k4_graph();
  for (const OrderedGraph *g : {&k3, &k4}) {
    TuttePoly expect = g == &k3 ? k3_poly() : k4_poly();
    CHECK(tutte_by_trees(*g) == expect);
    CHECK(tutte_by_deletion_contraction(*g) == expect);
    CHECK(tutte_by_orientations(*g) == expect);
    CHECK(tutte_by_filtrations(*g) == expect);
    CHECK(tutte_by_convolution(*g) == expect);
  }
  CHECK(tutte_by_trees(k4).eval(1, 1) == 16);
}

TEST_CASE("degenerate graphs") {
  OrderedGraph loop = OrderedGraph::from_endpoints(1, {{0, 0}});
  CHECK(tutte_by_trees(loop) == monomial(0, 1));
  CHECK(tutte_by_orientations(loop) == monomial(0, 1));
  CHECK(tutte_by_convolution(loop) == monomial(0, 1));

  OrderedGraph isthmus = OrderedGraph::from_endpoints(2, {{0, 1}});
  CHECK(tutte_by_filtrations(isthmus) == monomial(1, 0));
  CHECK(tutte_by_trees(isthmus) == monomial(1, 0));
}

TEST_CASE("orientation counts are divisible by 2^(i+j)") {
  // o_{1,0}(K4) / 2 = beta(K4) = 2
  CHECK(tutte_by_orientations(k4_graph()).coefficient(1, 0) == 2);
}

TEST_CASE("convolution terms vanish off cyclic flats") {
  OrderedGraph k4 = k4_graph();
  TuttePoly only_flats;
  for (EdgeSet F : cyclic_flats(k4)) {
    TuttePoly upper = tutte_by_deletion_contraction(k4.contract(F)).at_y0();
    TuttePoly lower = tutte_by_deletion_contraction(k4.restrict_to(F)).at_x0();
    only_flats = only_flats + upper * lower;
  }
  CHECK(only_flats == tutte_by_convolution(k4));
  // K4's cyclic flats: {}, the four triangles, and E.
  CHECK(cyclic_flats(k4).size() == 6);
}

TEST_CASE("four-variable tables agree") {
  for (const OrderedGraph &g : {k3_graph(), k4_graph()}) {
    FourVarTable expect = four_var_from_tutte(tutte_by_trees(g));
    CHECK(four_var_by_subsets(g) == expect);
    CHECK(four_var_by_orientations(g) == expect);
    long long total = 0;
    for (auto &[k, c] : expect)
      total += c;
    CHECK(total == (1LL << g.edge_count()));
  }
}

TEST_CASE("orientation table is reference independent") {
  FourVarTable expect = four_var_by_orientations(k4_graph());
  // Reverse a few reference directions; the table must not change.
  OrderedGraph flipped = OrderedGraph::from_endpoints(
      4, {{1, 0}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {2, 3}});
  CHECK(four_var_by_orientations(flipped) == expect);
}

TEST_CASE("polynomial printing") {
  CHECK(k3_poly().to_string() == "x^2 + x + y");
  CHECK(monomial(0, 0).to_string() == "1");
  CHECK(TuttePoly{}.to_string() == "0");
}
