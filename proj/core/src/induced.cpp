#include "comax/induced.hpp"

#include "comax/error.hpp"

namespace comax
{

namespace
{

class Search
{
public:
  Search(const SimpleGraph &pattern, const SimpleGraph &host)
  : _pattern(pattern), _host(host), _map(pattern.size()), _used(host.size())
  {}

  bool run() { return extend(0); }
  const std::vector<std::size_t> &map() const { return _map; }

private:
  bool extend(std::size_t i)
  {
    if (i == _pattern.size())
      return true;
    Bitset candidates(_host.size());
    candidates.set_all();
    candidates.subtract(_used);
    for (std::size_t j = 0; j < i; ++j) {
      if (_pattern.adjacent(i, j))
        candidates &= _host.neighbors(_map[j]);
      else
        candidates.subtract(_host.neighbors(_map[j]));
    }
    const std::size_t need = _pattern.degree(i);
    for (std::size_t v = candidates.first(); v != Bitset::npos; v = candidates.next(v + 1)) {
      if (_host.degree(v) < need)
        continue;
      _map[i] = v;
      _used.set(v);
      if (extend(i + 1))
        return true;
      _used.reset(v);
    }
    return false;
  }

  const SimpleGraph &_pattern;
  const SimpleGraph &_host;
  std::vector<std::size_t> _map;
  Bitset _used;
};

} // namespace

std::optional<PatternWitness> find_induced(const NamedPattern &pattern, const SimpleGraph &host)
{
  if (pattern.graph.size() > max_pattern_size)
    throw Error(Errc::invalid_parameter,
                "pattern " + pattern.name + " has more than " +
                    std::to_string(max_pattern_size) + " vertices");
  if (pattern.graph.size() > host.size())
    return std::nullopt;
  Search search(pattern.graph, host);
  if (!search.run())
    return std::nullopt;
  return PatternWitness{pattern.name, pattern.graph, search.map()};
}

bool validate_witness(const PatternWitness &w, const SimpleGraph &host)
{
  if (w.map.size() != w.pattern.size())
    return false;
  Bitset seen(host.size());
  for (auto v : w.map) {
    if (v >= host.size() || seen.test(v))
      return false;
    seen.set(v);
  }
  for (std::size_t i = 0; i < w.map.size(); ++i)
    for (std::size_t j = i + 1; j < w.map.size(); ++j)
      if (w.pattern.adjacent(i, j) != host.adjacent(w.map[i], w.map[j]))
        return false;
  return true;
}

std::string describe(const PatternWitness &w)
{
  std::string out = w.name + " at [";
  for (std::size_t i = 0; i < w.map.size(); ++i)
    out += (i ? ", " : "") + std::to_string(w.map[i]);
  return out + "]";
}

} // namespace comax
