// actgraph: command line front end for the active bijection library.
//
// Subcommands:
//   tutte   - Tutte polynomial by one or all of four methods
//   alpha   - image of one (re)orientation under the active bijection
//   table   - one row per spanning tree: filtration, partition, class, tree
//   verify  - invariant suite on one graph or a seeded random batch
//
// Graphs are JSON documents {"vertices": N, "edges": [[tail, head], ...]}
// where list position is the edge rank and tail -> head is the reference
// direction.  Exit codes: 0 success, 1 verification failure, 2 input error.

#include <atomic>
#include <deque>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "activebij/bijection.hpp"
#include "activebij/json_io.hpp"
#include "activebij/tutte.hpp"

namespace {

using namespace activebij;

OrderedGraph load_graph(const std::string &path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in)
      throw document_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return graph_from_json_text(text);
}

EdgeSet parse_edge_list(const std::string &text, const OrderedGraph &g) {
  EdgeSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    int e;
    try {
      e = std::stoi(item);
    } catch (const std::exception &) {
      throw document_error("bad edge rank: " + item);
    }
    if (!g.live().contains(e))
      throw document_error("edge rank out of range: " + item);
    s.insert(e);
  }
  return s;
}

std::string chain_string(const Filtration &f) {
  std::string s;
  EdgeSet fc = f.cyclic_flat();
  auto append = [&](EdgeSet x) {
    if (!s.empty())
      s += " < ";
    s += x.to_string();
    if (x == fc)
      s += "*";
  };
  for (const EdgeSet &x : f.cyclic)
    append(x);
  for (std::size_t k = 1; k < f.acyclic.size(); ++k)
    append(f.acyclic[k]);
  return s;
}

std::string partition_string(const ActivePartition &p) {
  std::string s;
  for (const Part &pt : p.parts) {
    if (!s.empty())
      s += " ";
    s += pt.edges.to_string();
    if (pt.cyclic)
      s += "*";
  }
  return s;
}

std::string members_string(const std::vector<EdgeSet> &ms) {
  std::string s;
  for (EdgeSet m : ms) {
    if (!s.empty())
      s += " ";
    s += m.to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// tutte

TuttePoly tutte_by(const OrderedGraph &g, const std::string &method,
                   int max_edges) {
  if (method == "trees")
    return tutte_by_trees(g);
  if (method == "orientations")
    return tutte_by_orientations(g, max_edges);
  if (method == "filtrations")
    return tutte_by_filtrations(g, std::min(max_edges, 12));
  if (method == "convolution")
    return tutte_by_convolution(g);
  throw document_error("unknown method: " + method);
}

int cmd_tutte(const OrderedGraph &g, const std::string &method, bool json,
              int max_edges) {
  std::vector<std::pair<std::string, TuttePoly>> results;
  bool all = method == "all";
  if (all)
    for (const char *m : {"trees", "orientations", "filtrations", "convolution"})
      results.push_back({m, tutte_by(g, m, max_edges)});
  else
    results.push_back({method, tutte_by(g, method, max_edges)});

  bool agree = true;
  for (auto &[name, t] : results)
    agree = agree && t == results.front().second;
  const TuttePoly &t = results.front().second;

  if (json) {
    nlohmann::json coefs = nlohmann::json::array();
    for (auto &[k, c] : t.coef)
      coefs.push_back({{"i", k.first}, {"j", k.second}, {"coefficient", c}});
    nlohmann::json doc = {{"polynomial", t.to_string()}, {"coefficients", coefs}};
    if (all)
      doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "t(x,y) = " << t.to_string() << "\n";
    for (auto &[k, c] : t.coef)
      std::cout << "t[" << k.first << "," << k.second << "] = " << c << "\n";
    if (all)
      std::cout << "four-way agreement: " << (agree ? "PASS" : "FAIL") << "\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// alpha

int cmd_alpha(const OrderedGraph &g, EdgeSet A, const std::string &route,
              bool refined, bool json, int max_edges) {
  Digraph ref(g);
  Digraph dg = ref.reoriented(A);
  bool mismatch = false;

  EdgeSet T;
  if (route == "decomposition" || route == "both")
    T = alpha(dg, max_edges);
  if (route == "dc" || route == "both") {
    EdgeSet Tdc = alpha_dc(dg, max_edges);
    if (route == "both" && Tdc != T)
      mismatch = true;
    if (route == "dc")
      T = Tdc;
  }
  if (route != "decomposition" && route != "dc" && route != "both")
    throw document_error("unknown route: " + route);

  Filtration f = active_filtration(dg, max_edges);
  ActivePartition p = partition_of(f);
  ActivitySets o = activity_sets(dg, max_edges);
  EdgeSet X;
  if (refined) {
    X = alpha_refined(ref, A, max_edges);
    if (route == "both" && alpha_dc_refined(ref, A, max_edges) != X)
      mismatch = true;
  }

  if (json) {
    nlohmann::json doc = {{"reorientation", edge_set_to_json(A)},
                          {"tree", edge_set_to_json(T)},
                          {"filtration", filtration_to_json(f)},
                          {"partition", partition_to_json(p)},
                          {"active", edge_set_to_json(o.active)},
                          {"dual_active", edge_set_to_json(o.dual_active)}};
    if (refined)
      doc["refined"] = edge_set_to_json(X);
    if (route == "both")
      doc["routes_agree"] = !mismatch;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "reorientation: " << A.to_string() << "\n";
    std::cout << "tree: " << T.to_string() << "\n";
    std::cout << "filtration: " << chain_string(f) << "\n";
    std::cout << "partition: " << partition_string(p) << "\n";
    std::cout << "O: " << o.active.to_string() << "\n";
    std::cout << "O*: " << o.dual_active.to_string() << "\n";
    if (refined)
      std::cout << "refined: " << X.to_string() << "\n";
    if (route == "both")
      std::cout << "route agreement: " << (mismatch ? "FAIL" : "PASS") << "\n";
  }
  return mismatch ? 1 : 0;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const OrderedGraph &g, bool json) {
  Digraph ref(g);
  std::vector<EdgeSet> trees = spanning_trees(g);
  std::sort(trees.begin(), trees.end());
  nlohmann::json rows = nlohmann::json::array();
  for (EdgeSet T : trees) {
    TreeBijectionData data = tree_bijection_data(ref, T);
    Filtration f = filtration_of(data.partition);
    if (json) {
      nlohmann::json cls = nlohmann::json::array();
      for (EdgeSet m : data.preimages)
        cls.push_back(edge_set_to_json(m));
      rows.push_back({{"tree", edge_set_to_json(T)},
                      {"filtration", filtration_to_json(f)},
                      {"partition", partition_to_json(data.partition)},
                      {"class", cls}});
    } else {
      std::cout << chain_string(f) << " | " << partition_string(data.partition)
                << " | " << members_string(data.preimages) << " | "
                << T.to_string() << "\n";
    }
  }
  if (json)
    std::cout << rows.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckTally {
  std::string name;
  std::atomic<bool> ok{true};
  explicit CheckTally(std::string n) : name(std::move(n)) {}
};

/// Sum over C ∩ D of the sign products of a fundamental cycle and a
/// fundamental cocycle is always zero (cycle space and cut space are
/// orthogonal).  `corrupt` deliberately negates one cocycle sign to serve as
/// a negative control for the harness itself.
bool check_orthogonality(const OrderedGraph &g, bool corrupt) {
  for (EdgeSet T : spanning_trees(g))
    for (int e : g.live() - T) {
      SignedEdgeSet C = fundamental_cycle(g, T, e);
      for (int b : C.support() & T) {
        SignedEdgeSet D = fundamental_cocycle(g, T, b);
        int dot = 0;
        for (int a : C.support() & D.support()) {
          int sd = D.sign_positive(a) ? 1 : -1;
          if (corrupt && a == (C.support() & D.support()).max())
            sd = -sd;
          dot += (C.sign_positive(a) ? 1 : -1) * sd;
        }
        if (dot != 0)
          return false;
      }
    }
  return true;
}

bool check_tutte_four_way(const OrderedGraph &g, int max_edges) {
  TuttePoly t = tutte_by_trees(g);
  return tutte_by_orientations(g, max_edges) == t &&
         tutte_by_filtrations(g, std::min(max_edges, 12)) == t &&
         tutte_by_convolution(g) == t;
}

bool check_class_partition(const OrderedGraph &g, int max_edges) {
  Digraph ref(g);
  std::vector<bool> seen(std::size_t{1} << g.edge_count(), false);
  long long covered = 0;
  for_each_subset(g.live(), [&](EdgeSet A) {
    if (seen[A.bits()])
      return;
    Digraph dg = ref.reoriented(A);
    ActivityClass cls = activity_class(dg, max_edges);
    ActivitySets o = activity_sets(dg, max_edges);
    if ((long long)cls.members.size() !=
        (1LL << (o.active.size() + o.dual_active.size())))
      throw std::logic_error("class size is not 2^(|O|+|O*|)");
    EdgeSet T = alpha(dg, max_edges);
    for (EdgeSet m : cls.members) {
      if (seen[m.bits()])
        throw std::logic_error("activity classes overlap");
      seen[m.bits()] = true;
      ++covered;
      if (alpha(ref.reoriented(m), max_edges) != T)
        throw std::logic_error("alpha is not constant on a class");
    }
  });
  return covered == (1LL << g.edge_count());
}

bool check_crapo_partition(const OrderedGraph &g) {
  long long covered = 0;
  for (EdgeSet T : spanning_trees(g)) {
    auto [lo, hi] = interval_of(g, T);
    covered += 1LL << (hi - lo).size();
  }
  if (covered != (1LL << g.edge_count()))
    return false;
  bool ok = true;
  for_each_subset(g.live(), [&](EdgeSet A) {
    locate_interval(g, A);  // throws if A sits in no interval
    (void)A;
  });
  return ok;
}

bool check_routes(const OrderedGraph &g, int max_edges) {
  Digraph ref(g);
  bool ok = true;
  for_each_subset(g.live(), [&](EdgeSet A) {
    Digraph dg = ref.reoriented(A);
    if (alpha(dg, max_edges) != alpha_dc(dg, max_edges))
      ok = false;
    if (alpha_refined(ref, A, max_edges) != alpha_dc_refined(ref, A, max_edges))
      ok = false;
  });
  for (EdgeSet T : spanning_trees(g))
    tree_active_filtration(g, T);  // asserts its three routes agree
  return ok;
}

bool check_transport(const OrderedGraph &g, int max_edges) {
  Digraph ref(g);
  bool ok = true;
  for_each_subset(g.live(), [&](EdgeSet A) {
    EdgeSet X = alpha_refined(ref, A, max_edges);
    SubsetActivities sa = subset_activities(g, X);
    OrientationActivities oa = orientation_activities(ref, A, max_edges);
    if (sa.int_ != oa.theta_star || sa.p != oa.theta_star_bar ||
        sa.ext != oa.theta || sa.q != oa.theta_bar)
      ok = false;
  });
  return ok;
}

bool check_round_trips(const OrderedGraph &g, int max_edges) {
  Digraph ref(g);
  for (EdgeSet T : spanning_trees(g))
    for (EdgeSet A : tree_bijection_data(ref, T).preimages)
      if (alpha(ref.reoriented(A), max_edges) != T)
        return false;
  bool ok = true;
  for_each_subset(g.live(), [&](EdgeSet X) {
    if (alpha_refined(ref, refined_preimage(ref, X), max_edges) != X)
      ok = false;
  });
  return ok;
}

bool check_representatives(const OrderedGraph &g, int max_edges) {
  Digraph ref(g);
  std::map<std::pair<int, int>, long long> counts;
  std::vector<bool> seen(std::size_t{1} << g.edge_count(), false);
  for_each_subset(g.live(), [&](EdgeSet A) {
    if (seen[A.bits()])
      return;
    Digraph dg = ref.reoriented(A);
    ActivityClass cls = activity_class(dg, max_edges);
    for (EdgeSet m : cls.members)
      seen[m.bits()] = true;
    class_representative(ref, cls, max_edges);  // throws unless unique
    ActivitySets o = activity_sets(dg, max_edges);
    ++counts[{o.dual_active.size(), o.active.size()}];
  });
  TuttePoly t = tutte_by_trees(g);
  for (auto &[k, c] : counts)
    if (t.coefficient(k.first, k.second) != c)
      return false;
  long long total = 0;
  for (auto &[k, c] : counts)
    total += c;
  return total == t.eval(1, 1);
}

bool verify_graph(const OrderedGraph &g, std::deque<CheckTally> &tallies,
                  bool corrupt, int max_edges) {
  struct Entry {
    std::size_t idx;
    bool result;
  };
  std::vector<Entry> results = {
      {0, check_orthogonality(g, corrupt)},
      {1, check_tutte_four_way(g, max_edges)},
      {2, check_class_partition(g, max_edges)},
      {3, check_crapo_partition(g)},
      {4, check_routes(g, max_edges)},
      {5, check_transport(g, max_edges)},
      {6, check_round_trips(g, max_edges)},
      {7, check_representatives(g, max_edges)},
  };
  bool ok = true;
  for (const Entry &e : results) {
    if (!e.result)
      tallies[e.idx].ok = false;
    ok = ok && e.result;
  }
  return ok;
}

OrderedGraph random_graph(std::mt19937 &rng, int max_edges) {
  for (;;) {
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
    return OrderedGraph::from_endpoints(nv, eps);
  }
}

int cmd_verify(const std::vector<OrderedGraph> &graphs, bool corrupt,
               int threads, int max_edges) {
  std::deque<CheckTally> tallies;
  for (const char *name :
       {"orthogonality", "tutte-four-way", "class-partition", "crapo-partition",
        "route-agreement", "parameter-transport", "round-trips",
        "class-representatives"})
    tallies.emplace_back(name);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> all_ok{true};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size())
        return;
      try {
        if (!verify_graph(graphs[i], tallies, corrupt, max_edges))
          all_ok = false;
      } catch (const std::exception &) {
        // A thrown internal assertion counts against every check it could
        // have come from; report coarsely but fail deterministically.
        all_ok = false;
        for (CheckTally &t : tallies)
          t.ok = false;
        return;
      }
    }
  };
  if (threads <= 1 || graphs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back(worker);
    for (std::thread &t : pool)
      t.join();
  }

  for (const CheckTally &t : tallies)
    std::cout << t.name << ": " << (t.ok ? "PASS" : "FAIL") << "\n";
  std::cout << "graphs checked: " << graphs.size() << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Active bijection toolkit for ordered graphs"};
  app.require_subcommand(1);

  std::string input = "-", method = "all", route = "both", reorient_text;
  bool refined = false, json = false, corrupt = false;
  int threads = 1, max_edges = activebij::kDefaultEdgeCap;
  int random_count = 0;
  unsigned seed = 1;

  auto add_input = [&](CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("input", input, "graph JSON file, or - for stdin");
    if (required)
      opt->required();
  };

  CLI::App *tutte = app.add_subcommand("tutte", "Tutte polynomial");
  add_input(tutte, true);
  tutte->add_option("--method", method, "trees|orientations|filtrations|convolution|all");
  tutte->add_flag("--json", json, "machine-readable output");

  CLI::App *alpha_cmd = app.add_subcommand("alpha", "active bijection of one orientation");
  add_input(alpha_cmd, true);
  alpha_cmd->add_option("--reorient", reorient_text,
                        "comma-separated edge ranks to reverse (default none)");
  alpha_cmd->add_option("--route", route, "decomposition|dc|both");
  alpha_cmd->add_flag("--refined", refined, "also print the refined image");
  alpha_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App *table = app.add_subcommand("table", "one row per spanning tree");
  add_input(table, true);
  table->add_flag("--json", json, "machine-readable output");

  CLI::App *verify = app.add_subcommand("verify", "invariant suite");
  add_input(verify, false);
  verify->add_option("--random", random_count, "also check N seeded random graphs");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--threads", threads, "worker threads for the batch");
  verify->add_option("--max-edges", max_edges, "edge cap for enumeration");
  verify->add_flag("--corrupt-signs", corrupt,
                   "negative control: corrupt one cocycle sign in the "
                   "orthogonality check");

  for (CLI::App *cmd : {tutte, alpha_cmd, table})
    cmd->add_option("--max-edges", max_edges, "edge cap for enumeration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tutte->parsed())
      return cmd_tutte(load_graph(input), method, json, max_edges);
    if (alpha_cmd->parsed()) {
      activebij::OrderedGraph g = load_graph(input);
      return cmd_alpha(g, parse_edge_list(reorient_text, g), route, refined,
                       json, max_edges);
    }
    if (table->parsed())
      return cmd_table(load_graph(input), json);
    if (verify->parsed()) {
      std::vector<activebij::OrderedGraph> graphs;
      if (verify->count("input") > 0)
        graphs.push_back(load_graph(input));
      if (random_count > 0) {
        std::mt19937 rng(seed);
        int cap = std::min(max_edges, 8);
        for (int i = 0; i < random_count; ++i)
          graphs.push_back(random_graph(rng, cap));
      }
      if (graphs.empty())
        throw activebij::document_error("nothing to verify: give a graph or --random N");
      return cmd_verify(graphs, corrupt, threads, max_edges);
    }
  } catch (const activebij::document_error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const activebij::resource_limit_error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
