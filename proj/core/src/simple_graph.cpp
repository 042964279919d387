#include "comax/simple_graph.hpp"

#include "comax/error.hpp"

#include <sstream>

namespace comax
{

SimpleGraph SimpleGraph::from_edges(std::size_t n, const std::vector<Edge> &edges)
{
  SimpleGraph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v)
{
  if (u >= size() || v >= size())
    throw Error(Errc::invalid_parameter, "edge endpoint out of range");
  if (u == v)
    throw Error(Errc::invalid_parameter, "self-loops are not allowed");
  _rows[u].set(v);
  _rows[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v)
{
  _rows[u].reset(v);
  _rows[v].reset(u);
}

std::size_t SimpleGraph::edge_count() const
{
  std::size_t twice = 0;
  for (const auto &row : _rows)
    twice += row.count();
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const
{
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = _rows[u].next(u + 1); v != Bitset::npos; v = _rows[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::complement() const
{
  SimpleGraph out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    out._rows[v] = _rows[v].complement();
    out._rows[v].reset(v);
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t> &vertices) const
{
  SimpleGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        out.add_edge(i, j);
  return out;
}

std::string to_edge_list(const SimpleGraph &g)
{
  std::ostringstream out;
  const auto es = g.edges();
  out << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es)
    out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph parse_edge_list(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  auto bad = [&](const std::string &why) {
    return Error(Errc::syntax, "edge list line " + std::to_string(line_no) + ": " + why);
  };

  if (!next_line())
    throw bad("missing header \"n m\"");
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string rest;
    if (!(hdr >> n >> m) || n < 0 || m < 0 || (hdr >> rest))
      throw bad("expected header \"n m\"");
  }
  SimpleGraph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      throw bad("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest))
      throw bad("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw bad("invalid edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (next_line())
    throw bad("trailing content after " + std::to_string(m) + " edges");
  return g;
}

} // namespace comax
