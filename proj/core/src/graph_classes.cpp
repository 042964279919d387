#include "comax/graph_classes.hpp"

#include "comax/error.hpp"
#include "comax/patterns.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <numeric>

namespace comax
{

namespace
{

Verdict witness_from(std::initializer_list<NamedPattern> patterns, const SimpleGraph &g)
{
  for (const auto &p : patterns)
    if (auto w = find_induced(p, g))
      return {false, std::move(w)};
  throw Error(Errc::internal, "recognizer rejected a graph but no forbidden pattern was found");
}

PatternWitness cycle_witness(std::vector<std::size_t> cycle)
{
  const std::size_t k = cycle.size();
  return {"C" + std::to_string(k), cycle_graph(k), std::move(cycle)};
}

/// Connected components of g restricted to `within`, each as a bitset.
std::vector<Bitset> components(const SimpleGraph &g, const Bitset &within)
{
  std::vector<Bitset> out;
  Bitset left = within;
  for (std::size_t s = left.first(); s != Bitset::npos; s = left.first()) {
    Bitset comp(g.size());
    Bitset frontier(g.size());
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      Bitset grow(g.size());
      frontier.for_each([&](std::size_t v) { grow |= g.neighbors(v); });
      grow &= within;
      grow.subtract(comp);
      frontier = std::move(grow);
    }
    left.subtract(comp);
    out.push_back(std::move(comp));
  }
  return out;
}

bool cograph_on(const SimpleGraph &g, const SimpleGraph &co, const Bitset &s)
{
  if (s.count() <= 1)
    return true;
  auto parts = components(g, s);
  if (parts.size() == 1) {
    parts = components(co, s);
    if (parts.size() == 1)
      return false;
  }
  return std::all_of(parts.begin(), parts.end(),
                     [&](const Bitset &p) { return cograph_on(g, co, p); });
}

bool chordal_fast(const SimpleGraph &g)
{
  const auto order = lex_bfs(g);
  std::vector<std::size_t> pos(g.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = i;
  // Reversed LexBFS order is a perfect elimination ordering iff g is chordal:
  // the earlier neighbours of each vertex, minus the latest of them, must all
  // be adjacent to that latest one.
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t v = order[i];
    std::size_t parent = Bitset::npos;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (pos[u] < i && (parent == Bitset::npos || pos[u] > pos[parent]))
        parent = u;
    });
    if (parent == Bitset::npos)
      continue;
    bool ok = true;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (ok && pos[u] < i && u != parent && !g.adjacent(u, parent))
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

/// Shortest u-w path whose interior lies in `inner`, returned u first.
std::vector<std::size_t> shortest_path_through(const SimpleGraph &g, std::size_t u,
                                               std::size_t w, const Bitset &inner)
{
  std::vector<std::size_t> parent(g.size(), Bitset::npos);
  std::vector<std::size_t> queue{u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t y = g.neighbors(x).first(); y != Bitset::npos;
         y = g.neighbors(x).next(y + 1)) {
      if (parent[y] != Bitset::npos)
        continue;
      if (y == w && x != u) {
        parent[y] = x;
        std::vector<std::size_t> path{w};
        for (std::size_t z = x; z != u; z = parent[z])
          path.push_back(z);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!inner.test(y))
        continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return {};
}

PatternWitness chordless_cycle(const SimpleGraph &g)
{
  // Some vertex v has nonadjacent neighbours u, w that both reach one
  // component C of G - N[v]; v, u, a shortest path through C, w is then an
  // induced cycle of length at least 4.
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    Bitset outside(n);
    outside.set_all();
    outside.subtract(g.neighbors(v));
    outside.reset(v);
    const auto comps = components(g, outside);
    const auto nbrs = g.neighbors(v).indices();
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        const std::size_t u = nbrs[a], w = nbrs[b];
        if (g.adjacent(u, w))
          continue;
        for (const auto &c : comps) {
          if (!g.neighbors(u).intersects(c) || !g.neighbors(w).intersects(c))
            continue;
          auto path = shortest_path_through(g, u, w, c);
          std::vector<std::size_t> cycle{v};
          cycle.insert(cycle.end(), path.begin(), path.end());
          return cycle_witness(std::move(cycle));
        }
      }
  }
  throw Error(Errc::internal, "non-chordal graph without a chordless cycle");
}

bool split_by_degrees(const SimpleGraph &g)
{
  std::vector<std::size_t> d(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  std::size_t m = 0;
  for (std::size_t i = 1; i <= d.size(); ++i)
    if (d[i - 1] >= i - 1)
      m = i;
  const std::size_t head = std::accumulate(d.begin(), d.begin() + static_cast<long>(m), std::size_t{0});
  const std::size_t tail = std::accumulate(d.begin() + static_cast<long>(m), d.end(), std::size_t{0});
  return head == m * (m - 1) + tail;
}

bool threshold_by_peeling(const SimpleGraph &g)
{
  Bitset alive(g.size());
  alive.set_all();
  std::size_t remaining = g.size();
  while (remaining > 0) {
    bool removed = false;
    for (std::size_t v = alive.first(); v != Bitset::npos; v = alive.next(v + 1)) {
      const std::size_t deg = g.neighbors(v).intersection_count(alive);
      if (deg == 0 || deg == remaining - 1) {
        alive.reset(v);
        --remaining;
        removed = true;
        break;
      }
    }
    if (!removed)
      return false;
  }
  return true;
}

} // namespace

std::string_view to_string(GraphClass c)
{
  switch (c) {
  case GraphClass::cluster: return "cluster";
  case GraphClass::triangle_free: return "triangle-free";
  case GraphClass::claw_free: return "claw-free";
  case GraphClass::cograph: return "cograph";
  case GraphClass::chordal: return "chordal";
  case GraphClass::split: return "split";
  case GraphClass::threshold: return "threshold";
  case GraphClass::line_graph: return "line-graph";
  case GraphClass::bipartite: return "bipartite";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name)
{
  for (auto c : all_graph_classes)
    if (to_string(c) == name)
      return c;
  return std::nullopt;
}

std::vector<std::size_t> lex_bfs(const SimpleGraph &g)
{
  // Partition refinement: an ordered list of cells, each cell an ordered
  // vertex list. The next vertex is the head of the first cell; every cell
  // is split into its neighbours (kept first) and non-neighbours.
  std::list<std::vector<std::size_t>> cells;
  if (g.size() > 0) {
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    cells.push_back(std::move(all));
  }
  std::vector<std::size_t> order;
  order.reserve(g.size());
  while (!cells.empty()) {
    auto &front = cells.front();
    const std::size_t v = front.front();
    front.erase(front.begin());
    if (front.empty())
      cells.pop_front();
    order.push_back(v);
    for (auto it = cells.begin(); it != cells.end();) {
      std::vector<std::size_t> in, out;
      for (auto u : *it)
        (g.adjacent(u, v) ? in : out).push_back(u);
      if (!in.empty() && !out.empty()) {
        *it = std::move(out);
        cells.insert(it, std::move(in));
      }
      ++it;
    }
  }
  return order;
}

Verdict is_cluster(const SimpleGraph &g)
{
  for (std::size_t v = 0; v < g.size(); ++v) {
    Bitset closed = g.neighbors(v);
    closed.set(v);
    for (std::size_t u = g.neighbors(v).first(); u != Bitset::npos;
         u = g.neighbors(v).next(u + 1)) {
      Bitset other = g.neighbors(u);
      other.set(u);
      if (!(other == closed))
        return witness_from({pattern_p3()}, g);
    }
  }
  return {};
}

Verdict is_triangle_free(const SimpleGraph &g)
{
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = g.neighbors(u).next(u + 1); v != Bitset::npos;
         v = g.neighbors(u).next(v + 1))
      if (g.neighbors(u).intersects(g.neighbors(v)))
        return witness_from({pattern_k3()}, g);
  return {};
}

Verdict is_claw_free(const SimpleGraph &g)
{
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Bitset &nv = g.neighbors(v);
    for (std::size_t a = nv.first(); a != Bitset::npos; a = nv.next(a + 1)) {
      Bitset rest = nv;
      rest.subtract(g.neighbors(a));
      rest.reset(a);
      for (std::size_t b = rest.next(a + 1); b != Bitset::npos; b = rest.next(b + 1)) {
        Bitset third = rest;
        third.subtract(g.neighbors(b));
        if (third.next(b + 1) != Bitset::npos)
          return witness_from({pattern_claw()}, g);
      }
    }
  }
  return {};
}

Verdict is_cograph(const SimpleGraph &g)
{
  Bitset all(g.size());
  all.set_all();
  if (cograph_on(g, g.complement(), all))
    return {};
  return witness_from({pattern_p4()}, g);
}

Verdict is_chordal(const SimpleGraph &g)
{
  if (chordal_fast(g))
    return {};
  return {false, chordless_cycle(g)};
}

Verdict is_split(const SimpleGraph &g)
{
  if (split_by_degrees(g))
    return {};
  if (chordal_fast(g))
    return witness_from({pattern_2k2()}, g);
  return witness_from({pattern_c4(), pattern_c5(), pattern_2k2()}, g);
}

Verdict is_threshold(const SimpleGraph &g)
{
  if (threshold_by_peeling(g))
    return {};
  return witness_from({pattern_p4(), pattern_c4(), pattern_2k2()}, g);
}

Verdict is_line_graph(const SimpleGraph &g)
{
  for (const auto &p : beineke_graphs())
    if (auto w = find_induced(p, g))
      return {false, std::move(w)};
  return {};
}

Verdict is_bipartite(const SimpleGraph &g)
{
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  bool bipartite = true;
  for (std::size_t s = 0; s < n && bipartite; ++s) {
    if (color[s] >= 0)
      continue;
    color[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
      const std::size_t x = queue[head];
      g.neighbors(x).for_each([&](std::size_t y) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          bipartite = false;
        }
      });
    }
  }
  if (bipartite)
    return {};

  // Odd girth: BFS from every root, closing at an edge between two vertices
  // on the same level. The global minimum is a simple, chordless odd cycle.
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, Bitset::npos), parent(n, Bitset::npos);
    dist[s] = 0;
    std::vector<std::size_t> queue{s};
    bool closed = false;
    for (std::size_t head = 0; head < queue.size() && !closed; ++head) {
      const std::size_t x = queue[head];
      if (!best.empty() && 2 * dist[x] + 1 >= best.size())
        break;
      for (std::size_t y = g.neighbors(x).first(); y != Bitset::npos;
           y = g.neighbors(x).next(y + 1)) {
        if (dist[y] == Bitset::npos) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (dist[y] == dist[x]) {
          std::vector<std::size_t> left, right;
          for (std::size_t z = x; z != s; z = parent[z])
            left.push_back(z);
          for (std::size_t z = y; z != s; z = parent[z])
            right.push_back(z);
          std::vector<std::size_t> cycle{s};
          cycle.insert(cycle.end(), left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          if (best.empty() || cycle.size() < best.size())
            best = std::move(cycle);
          closed = true;
          break;
        }
      }
    }
  }
  return {false, cycle_witness(std::move(best))};
}

Verdict recognize(GraphClass c, const SimpleGraph &g)
{
  switch (c) {
  case GraphClass::cluster: return is_cluster(g);
  case GraphClass::triangle_free: return is_triangle_free(g);
  case GraphClass::claw_free: return is_claw_free(g);
  case GraphClass::cograph: return is_cograph(g);
  case GraphClass::chordal: return is_chordal(g);
  case GraphClass::split: return is_split(g);
  case GraphClass::threshold: return is_threshold(g);
  case GraphClass::line_graph: return is_line_graph(g);
  case GraphClass::bipartite: return is_bipartite(g);
  }
  throw Error(Errc::unsupported_class, "unknown graph class");
}

GraphClassReport classify(const SimpleGraph &g)
{
  GraphClassReport r;
  for (auto c : all_graph_classes)
    r[c] = recognize(c, g);

  auto yes = [&r](GraphClass c) { return r[c].value; };
  auto require = [](bool ok, const char *rule) {
    if (!ok)
      throw Error(Errc::internal, std::string("class hierarchy violated: ") + rule);
  };
  using C = GraphClass;
  require(!yes(C::cluster) || (yes(C::cograph) && yes(C::claw_free)),
          "cluster implies cograph and claw-free");
  require(!yes(C::threshold) || (yes(C::split) && yes(C::cograph)),
          "threshold implies split and cograph");
  require(!yes(C::bipartite) || yes(C::triangle_free), "bipartite implies triangle-free");
  require(!yes(C::line_graph) || yes(C::claw_free), "line graph implies claw-free");
  require(yes(C::split) == (yes(C::chordal) && chordal_fast(g.complement())),
          "split iff chordal and co-chordal");
  for (auto c : all_graph_classes) {
    const auto &v = r[c];
    require(v.value != v.witness.has_value(), "witness present iff verdict is false");
    if (v.witness)
      require(validate_witness(*v.witness, g), "witness is not an induced embedding");
  }
  return r;
}

} // namespace comax
