#ifndef COMAX_COMAX_GRAPH_HPP
#define COMAX_COMAX_GRAPH_HPP

#include "comax/group.hpp"
#include "comax/lattice.hpp"
#include "comax/simple_graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace comax
{

/**
 * Co-maximal subgroup graph: vertices are the proper nontrivial subgroups
 * in canonical lattice order, H ~ K iff HK = G.
 */
struct ComaxGraph
{
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<SubgroupSet> vertices;
  std::vector<std::string> labels;
  SimpleGraph graph;
};

/// Throws Error(Errc::ambient_mismatch) when `lat` was not built from `g`.
ComaxGraph build_comax_graph(const GroupTable &g, const SubgroupLattice &lat);

/// Graphviz text; nodes v0.. labelled "|H|=<order>: {<elements>}".
std::string export_dot(const ComaxGraph &graph);

/// {"group", "vertices": [{"order", "elements"}], "edges": [[u, v], ...]}
std::string export_json(const ComaxGraph &graph);

/// Reads the JSON form back into a plain graph; throws Error(Errc::syntax).
SimpleGraph parse_comax_json(std::string_view text);

/**
 * Subgroup of the generalized quaternion group Q_{2^n} = <r, s> with
 * |r| = 2^(n-1): Type I is <r^d>, Type II is <r^d, r^i s>.
 */
struct QSubgroupDescriptor
{
  enum class Kind
  {
    type_one,
    type_two,
  };

  Kind kind = Kind::type_one;
  std::size_t d = 1;
  std::size_t i = 0;

  static QSubgroupDescriptor type_one(std::size_t d) { return {Kind::type_one, d, 0}; }
  static QSubgroupDescriptor type_two(std::size_t d, std::size_t i) { return {Kind::type_two, d, i}; }

  friend bool operator==(const QSubgroupDescriptor &, const QSubgroupDescriptor &) = default;
};

/// "I(d=2)", "II(d=4,i=3)"
std::string to_string(const QSubgroupDescriptor &q);

/// Throws Error(Errc::invalid_parameter) unless d | 2^(n-1) and, for Type II, i < d.
void check_descriptor(std::size_t n, const QSubgroupDescriptor &q);

/**
 * Closed-form co-maximality of two descriptors: never for two Type I;
 * gcd(d1, d2) = 1 for mixed types; for two Type II, gcd(d1, d2) = 1, or
 * gcd(d1, d2) = 2 with i - j odd.
 */
bool q_adjacency_predicate(std::size_t n, const QSubgroupDescriptor &a,
                           const QSubgroupDescriptor &b);

/// The subgroup a descriptor denotes in make_gen_quaternion(n).
SubgroupSet realize_descriptor(const GroupTable &q, std::size_t n, const QSubgroupDescriptor &d);

struct QVertex
{
  QSubgroupDescriptor descriptor;
  SubgroupSet subgroup;
};

inline constexpr std::size_t max_quaternion_exponent = 7;

/**
 * One canonical descriptor per proper nontrivial subgroup of Q_{2^n}:
 * Type I for d | 2^(n-2), Type II for 2 <= d | 2^(n-2) and 0 <= i < d.
 * `q` must be make_gen_quaternion(n); n above 7 is a resource-limit error.
 */
std::vector<QVertex> q_descriptors(const GroupTable &q, std::size_t n);

} // namespace comax

#endif // COMAX_COMAX_GRAPH_HPP
