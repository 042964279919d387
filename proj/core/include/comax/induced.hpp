#ifndef COMAX_INDUCED_HPP
#define COMAX_INDUCED_HPP

#include "comax/patterns.hpp"
#include "comax/simple_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace comax
{

/// An induced copy of `pattern` in some host: pattern vertex i maps to map[i].
struct PatternWitness
{
  std::string name;
  SimpleGraph pattern;
  std::vector<std::size_t> map;

  friend bool operator==(const PatternWitness &, const PatternWitness &) = default;
};

inline constexpr std::size_t max_pattern_size = 8;

/**
 * Lexicographically first induced embedding of `pattern` into `host`,
 * comparing maps as sequences (map[0], map[1], ...). Throws
 * Error(Errc::invalid_parameter) for patterns above max_pattern_size.
 */
std::optional<PatternWitness> find_induced(const NamedPattern &pattern, const SimpleGraph &host);

/// True iff the map is injective, in range, and preserves edges and non-edges.
bool validate_witness(const PatternWitness &w, const SimpleGraph &host);

/// "P4 at [0, 1, 2, 3]"
std::string describe(const PatternWitness &w);

} // namespace comax

#endif // COMAX_INDUCED_HPP
