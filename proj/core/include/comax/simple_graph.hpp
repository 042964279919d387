#ifndef COMAX_SIMPLE_GRAPH_HPP
#define COMAX_SIMPLE_GRAPH_HPP

#include "comax/bitset.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comax
{

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected loop-free graph on vertices 0..size()-1, one bitset row per vertex.
class SimpleGraph
{
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : _rows(n, Bitset(n)) {}

  static SimpleGraph from_edges(std::size_t n, const std::vector<Edge> &edges);

  std::size_t size() const { return _rows.size(); }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const { return _rows[u].test(v); }
  const Bitset &neighbors(std::size_t v) const { return _rows[v]; }
  std::size_t degree(std::size_t v) const { return _rows[v].count(); }
  std::size_t edge_count() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  SimpleGraph complement() const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  SimpleGraph induced(const std::vector<std::size_t> &vertices) const;

  friend bool operator==(const SimpleGraph &, const SimpleGraph &) = default;

private:
  std::vector<Bitset> _rows;
};

/// "n m" followed by m lines "u v".
std::string to_edge_list(const SimpleGraph &g);

/// Parses the edge-list format; throws Error(Errc::syntax) with a line number.
SimpleGraph parse_edge_list(std::string_view text);

} // namespace comax

#endif // COMAX_SIMPLE_GRAPH_HPP
