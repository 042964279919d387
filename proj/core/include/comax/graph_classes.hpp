#ifndef COMAX_GRAPH_CLASSES_HPP
#define COMAX_GRAPH_CLASSES_HPP

#include "comax/induced.hpp"
#include "comax/simple_graph.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace comax
{

enum class GraphClass
{
  cluster,
  triangle_free,
  claw_free,
  cograph,
  chordal,
  split,
  threshold,
  line_graph,
  bipartite,
};

inline constexpr std::array<GraphClass, 9> all_graph_classes{
    GraphClass::cluster,  GraphClass::triangle_free, GraphClass::claw_free,
    GraphClass::cograph,  GraphClass::chordal,       GraphClass::split,
    GraphClass::threshold, GraphClass::line_graph,   GraphClass::bipartite,
};

/// "cluster", "triangle-free", "claw-free", "cograph", "chordal", "split",
/// "threshold", "line-graph", "bipartite".
std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);

/// Membership result; a negative verdict carries an induced witness.
struct Verdict
{
  bool value = true;
  std::optional<PatternWitness> witness;
};

Verdict is_cluster(const SimpleGraph &g);
Verdict is_triangle_free(const SimpleGraph &g);
Verdict is_claw_free(const SimpleGraph &g);
Verdict is_cograph(const SimpleGraph &g);
/// Witness is an induced cycle of length at least 4.
Verdict is_chordal(const SimpleGraph &g);
Verdict is_split(const SimpleGraph &g);
Verdict is_threshold(const SimpleGraph &g);
Verdict is_line_graph(const SimpleGraph &g);
/// Witness is a shortest odd cycle, which is always induced.
Verdict is_bipartite(const SimpleGraph &g);

Verdict recognize(GraphClass c, const SimpleGraph &g);

/// Vertex order produced by lexicographic breadth-first search.
std::vector<std::size_t> lex_bfs(const SimpleGraph &g);

struct GraphClassReport
{
  std::array<Verdict, all_graph_classes.size()> verdicts;

  const Verdict &operator[](GraphClass c) const { return verdicts[static_cast<std::size_t>(c)]; }
  Verdict &operator[](GraphClass c) { return verdicts[static_cast<std::size_t>(c)]; }
};

/**
 * Runs every recognizer, then checks the class hierarchy and re-validates
 * each witness. Throws Error(Errc::internal) on any inconsistency.
 */
GraphClassReport classify(const SimpleGraph &g);

} // namespace comax

#endif // COMAX_GRAPH_CLASSES_HPP
