#include "comax/patterns.hpp"

namespace comax
{

SimpleGraph path_graph(std::size_t n)
{
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(std::size_t n)
{
  SimpleGraph g = path_graph(n);
  if (n >= 3)
    g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph complete_graph(std::size_t n)
{
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b)
{
  SimpleGraph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      g.add_edge(i, a + j);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

SimpleGraph empty_graph(std::size_t n) { return SimpleGraph(n); }

SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b)
{
  SimpleGraph g(a.size() + b.size());
  for (auto [u, v] : a.edges())
    g.add_edge(u, v);
  for (auto [u, v] : b.edges())
    g.add_edge(a.size() + u, a.size() + v);
  return g;
}

NamedPattern pattern_p3() { return {"P3", path_graph(3)}; }
NamedPattern pattern_p4() { return {"P4", path_graph(4)}; }
NamedPattern pattern_k3() { return {"K3", complete_graph(3)}; }
NamedPattern pattern_c4() { return {"C4", cycle_graph(4)}; }
NamedPattern pattern_c5() { return {"C5", cycle_graph(5)}; }
NamedPattern pattern_claw() { return {"K1,3", star_graph(3)}; }
NamedPattern pattern_2k2() { return {"2K2", disjoint_union(complete_graph(2), complete_graph(2))}; }

const std::vector<NamedPattern> &beineke_graphs()
{
  // Beineke's nine forbidden induced subgraphs for line graphs (Beineke,
  // "Characterizations of derived graphs", JCT 9, 1970). Recovered as the
  // minimal graphs on at most 6 vertices with no Krausz clique partition;
  // the test suite re-derives this list with an independent oracle.
  static const std::vector<NamedPattern> family = [] {
    auto make = [](std::string name, std::size_t n, std::vector<Edge> edges) {
      return NamedPattern{std::move(name), SimpleGraph::from_edges(n, edges)};
    };
    return std::vector<NamedPattern>{
        make("Beineke-1 (claw)", 4, {{0, 3}, {1, 3}, {2, 3}}),
        make("Beineke-2", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}}),
        make("Beineke-3", 5,
             {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        make("Beineke-4", 6, {{0, 1}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}),
        make("Beineke-5", 6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}),
        make("Beineke-6", 6,
             {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {4, 5}}),
        make("Beineke-7", 6,
             {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}),
        make("Beineke-8", 6,
             {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}),
        make("Beineke-9", 6,
             {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}, {3, 5},
              {4, 5}}),
    };
  }();
  return family;
}

} // namespace comax
