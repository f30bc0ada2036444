#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "activebij/activity.hpp"
#include "activebij/filtration.hpp"
#include "activebij/graph.hpp"

namespace activebij {

/// Bivariate polynomial with integer coefficients, indexed by (x-degree,
/// y-degree).
struct TuttePoly {
  std::map<std::pair<int, int>, long long> coef;

  long long coefficient(int i, int j) const {
    auto it = coef.find({i, j});
    return it == coef.end() ? 0 : it->second;
  }
  void add(int i, int j, long long c) {
    if (c == 0)
      return;
    long long &slot = coef[{i, j}];
    slot += c;
    if (slot == 0)
      coef.erase({i, j});
  }

  friend TuttePoly operator+(const TuttePoly &a, const TuttePoly &b) {
    TuttePoly r = a;
    for (auto &[k, c] : b.coef)
      r.add(k.first, k.second, c);
    return r;
  }
  friend TuttePoly operator*(const TuttePoly &a, const TuttePoly &b) {
    TuttePoly r;
    for (auto &[ka, ca] : a.coef)
      for (auto &[kb, cb] : b.coef)
        r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const TuttePoly &, const TuttePoly &) = default;

  long long eval(long long x, long long y) const {
    long long total = 0;
    for (auto &[k, c] : coef) {
      long long term = c;
      for (int i = 0; i < k.first; ++i)
        term *= x;
      for (int j = 0; j < k.second; ++j)
        term *= y;
      total += term;
    }
    return total;
  }

  /// Substitute y = 0 (keep x-only terms) or x = 0.
  TuttePoly at_y0() const {
    TuttePoly r;
    for (auto &[k, c] : coef)
      if (k.second == 0)
        r.add(k.first, 0, c);
    return r;
  }
  TuttePoly at_x0() const {
    TuttePoly r;
    for (auto &[k, c] : coef)
      if (k.first == 0)
        r.add(0, k.second, c);
    return r;
  }

  std::string to_string() const {
    if (coef.empty())
      return "0";
    std::string s;
    // highest total degree first, then higher x-degree
    std::vector<std::pair<std::pair<int, int>, long long>> terms(coef.begin(),
                                                                 coef.end());
    std::sort(terms.begin(), terms.end(), [](auto &a, auto &b) {
      int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
      if (da != db)
        return da > db;
      return a.first.first > b.first.first;
    });
    for (auto &[k, c] : terms) {
      if (!s.empty())
        s += c >= 0 ? " + " : " - ";
      else if (c < 0)
        s += "-";
      long long a = c >= 0 ? c : -c;
      std::string mono;
      if (k.first > 0)
        mono += k.first == 1 ? "x" : "x^" + std::to_string(k.first);
      if (k.second > 0)
        mono += (mono.empty() ? "" : "*") +
                (k.second == 1 ? std::string("y") : "y^" + std::to_string(k.second));
      if (mono.empty() || a != 1)
        s += std::to_string(a);
      if (!mono.empty() && a != 1)
        s += "*";
      s += mono;
    }
    return s;
  }
};

inline TuttePoly monomial(int i, int j, long long c = 1) {
  TuttePoly p;
  p.add(i, j, c);
  return p;
}

/// Tutte polynomial by internal/external activities of spanning trees
/// (connected graphs).
inline TuttePoly tutte_by_trees(const OrderedGraph &g) {
  if (!g.is_connected())
    throw std::invalid_argument("graph must be connected");
  TuttePoly t;
  for (EdgeSet T : spanning_trees(g)) {
    TreeActivities a = tree_activities(g, T);
    t.add(a.internal.size(), a.external.size(), 1);
  }
  return t;
}

/// Tutte polynomial by deletion/contraction; works for disconnected minors
/// too (components multiply, and the edgeless base case is 1).
inline TuttePoly tutte_by_deletion_contraction(const OrderedGraph &g) {
  if (g.edge_count() == 0)
    return monomial(0, 0);
  int e = g.live().max();
  switch (g.classify_edge(e)) {
    case EdgeKind::isthmus:
      return monomial(1, 0) * tutte_by_deletion_contraction(g.contract(EdgeSet::single(e)));
    case EdgeKind::loop:
      return monomial(0, 1) *
             tutte_by_deletion_contraction(g.restrict_to(g.live() - EdgeSet::single(e)));
    case EdgeKind::ordinary:
      return tutte_by_deletion_contraction(g.restrict_to(g.live() - EdgeSet::single(e))) +
             tutte_by_deletion_contraction(g.contract(EdgeSet::single(e)));
  }
  throw std::logic_error("unreachable");
}

/// Tutte polynomial from orientation activity counts: the number of
/// reorientations with |O*| = i and |O| = j equals 2^{i+j} t_{i,j}.
inline TuttePoly tutte_by_orientations(const OrderedGraph &g,
                                       int max_edges = kDefaultEdgeCap) {
  std::map<std::pair<int, int>, long long> counts;
  Digraph ref(g);
  for_each_subset(g.live(), [&](EdgeSet A) {
    ActivitySets o = activity_sets(ref.reoriented(A), max_edges);
    ++counts[{o.dual_active.size(), o.active.size()}];
  });
  TuttePoly t;
  for (auto &[k, c] : counts) {
    long long scale = 1LL << (k.first + k.second);
    if (c % scale != 0)
      throw std::logic_error("orientation count not divisible by 2^(i+j)");
    t.add(k.first, k.second, c / scale);
  }
  return t;
}

/// Tutte polynomial as a sum over connected filtrations: each filtration
/// contributes x^iota y^epsilon times the product of beta / beta* over its
/// induced minors.
inline TuttePoly tutte_by_filtrations(const OrderedGraph &g, int max_edges = 10) {
  TuttePoly t;
  for (const Filtration &f : enumerate_connected_filtrations(g, max_edges)) {
    long long w = 1;
    for (std::size_t k = 1; k < f.cyclic.size(); ++k)
      w *= beta_star(g.restrict_to(f.cyclic[k]).contract(f.cyclic[k - 1]));
    for (std::size_t k = 1; k < f.acyclic.size(); ++k)
      w *= beta(g.restrict_to(f.acyclic[k]).contract(f.acyclic[k - 1]));
    t.add(f.iota(), f.epsilon(), w);
  }
  return t;
}

/// Tutte polynomial by the convolution formula
/// t(G;x,y) = sum over A of t(G/A;x,0) * t(G(A);0,y).
inline TuttePoly tutte_by_convolution(const OrderedGraph &g) {
  TuttePoly t;
  for_each_subset(g.live(), [&](EdgeSet A) {
    TuttePoly upper = tutte_by_deletion_contraction(g.contract(A)).at_y0();
    TuttePoly lower = tutte_by_deletion_contraction(g.restrict_to(A)).at_x0();
    t = t + upper * lower;
  });
  return t;
}

/// Subsets F such that G/F is loopless and G(F) has no isthmus.
inline std::vector<EdgeSet> cyclic_flats(const OrderedGraph &g) {
  std::vector<EdgeSet> out;
  for_each_subset(g.live(), [&](EdgeSet F) {
    OrderedGraph inner = g.restrict_to(F);
    for (const Edge &e : inner.edges())
      if (inner.classify_edge(e.id) == EdgeKind::isthmus)
        return;
    OrderedGraph outer = g.contract(F);
    for (const Edge &e : outer.edges())
      if (outer.classify_edge(e.id) == EdgeKind::loop)
        return;
    out.push_back(F);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Coefficient table of the four-variable expansion T(G; x+u, y+v), indexed
/// by the degrees of (x, u, y, v).
using FourVarTable = std::map<std::array<int, 4>, long long>;

/// Expansion of t(G;x+u,y+v) from the Tutte coefficients via binomials.
inline FourVarTable four_var_from_tutte(const TuttePoly &t) {
  auto choose = [](int n, int k) {
    long long c = 1;
    for (int i = 1; i <= k; ++i)
      c = c * (n - k + i) / i;
    return c;
  };
  FourVarTable table;
  for (auto &[k, c] : t.coef)
    for (int a = 0; a <= k.first; ++a)
      for (int b = 0; b <= k.second; ++b) {
        long long w = c * choose(k.first, a) * choose(k.second, b);
        std::array<int, 4> key = {a, k.first - a, b, k.second - b};
        table[key] += w;
        if (table[key] == 0)
          table.erase(key);
      }
  return table;
}

/// Four-variable table from subset activities: x^|Int ∩ A| u^|Int \ A|
/// y^|Ext \ A| v^|Ext ∩ A| summed over all subsets A.
inline FourVarTable four_var_by_subsets(const OrderedGraph &g) {
  FourVarTable table;
  std::vector<std::pair<EdgeSet, TreeActivities>> trees;
  for (EdgeSet T : spanning_trees(g))
    trees.push_back({T, tree_activities(g, T)});
  for_each_subset(g.live(), [&](EdgeSet A) {
    for (auto &[T, a] : trees) {
      if (!(T - a.internal).subset_of(A) || !A.subset_of(T | a.external))
        continue;
      std::array<int, 4> key = {(a.internal & A).size(), (a.internal - A).size(),
                                (a.external - A).size(), (a.external & A).size()};
      ++table[key];
      return;
    }
    throw std::logic_error("subset not covered by any tree interval");
  });
  return table;
}

/// Four-variable table from orientation activities: x^|O* \ A| u^|O* ∩ A|
/// y^|O \ A| v^|O ∩ A| summed over all reorientations A.
inline FourVarTable four_var_by_orientations(const OrderedGraph &g,
                                             int max_edges = kDefaultEdgeCap) {
  FourVarTable table;
  Digraph ref(g);
  for_each_subset(g.live(), [&](EdgeSet A) {
    OrientationActivities oa = orientation_activities(ref, A, max_edges);
    std::array<int, 4> key = {oa.theta_star.size(), oa.theta_star_bar.size(),
                              oa.theta.size(), oa.theta_bar.size()};
    ++table[key];
  });
  return table;
}

}  // namespace activebij
