#ifndef COMAX_PATTERNS_HPP
#define COMAX_PATTERNS_HPP

#include "comax/simple_graph.hpp"

#include <string>
#include <vector>

namespace comax
{

/// A small graph with a display name, used as a forbidden induced subgraph.
struct NamedPattern
{
  std::string name;
  SimpleGraph graph;
};

SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph star_graph(std::size_t leaves);
SimpleGraph empty_graph(std::size_t n);

/// Disjoint union; vertices of `b` follow those of `a`.
SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b);

NamedPattern pattern_p3();
NamedPattern pattern_p4();
NamedPattern pattern_k3();
NamedPattern pattern_c4();
NamedPattern pattern_c5();
NamedPattern pattern_claw();
NamedPattern pattern_2k2();

/// The nine minimal non-line graphs; the claw comes first.
const std::vector<NamedPattern> &beineke_graphs();

} // namespace comax

#endif // COMAX_PATTERNS_HPP
