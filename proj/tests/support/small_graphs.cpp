#include "small_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace comax::test
{

namespace
{

std::size_t pair_bit(std::size_t a, std::size_t b)
{
  // a < b; offset of row a is sum_{r<a} (7 - r) for an 8-vertex layout.
  return a * (15 - a) / 2 + (b - a - 1);
}

std::uint32_t code_for_order(const SimpleGraph &g, const std::vector<std::size_t> &order)
{
  std::uint32_t code = 0;
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b)
      if (g.adjacent(order[a], order[b]))
        code |= std::uint32_t{1} << pair_bit(a, b);
  return code;
}

using Cells = std::vector<std::vector<std::size_t>>;

Cells equitable_partition(const SimpleGraph &g)
{
  Cells cells{{}};
  for (std::size_t v = 0; v < g.size(); ++v)
    cells[0].push_back(v);
  while (true) {
    std::vector<std::size_t> cell_of(g.size());
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto v : cells[c])
        cell_of[v] = c;
    Cells next;
    for (const auto &cell : cells) {
      std::map<std::vector<std::size_t>, std::vector<std::size_t>> split;
      for (auto v : cell) {
        std::vector<std::size_t> sig(cells.size(), 0);
        g.neighbors(v).for_each([&](std::size_t w) { ++sig[cell_of[w]]; });
        split[sig].push_back(v);
      }
      for (auto &[sig, part] : split)
        next.push_back(std::move(part));
    }
    if (next.size() == cells.size())
      return next;
    cells = std::move(next);
  }
}

} // namespace

std::uint32_t edge_code(const SimpleGraph &g)
{
  std::vector<std::size_t> order(g.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  return code_for_order(g, order);
}

std::uint32_t canonical_code(const SimpleGraph &g)
{
  if (g.size() > 8)
    throw std::invalid_argument("canonical_code: at most 8 vertices");
  Cells cells = equitable_partition(g);
  for (auto &c : cells)
    std::sort(c.begin(), c.end());

  std::uint32_t best = UINT32_MAX;
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> walk = [&](std::size_t ci) {
    if (ci == cells.size()) {
      best = std::min(best, code_for_order(g, order));
      return;
    }
    auto cell = cells[ci];
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      walk(ci + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  walk(0);
  return best;
}

std::vector<SimpleGraph> graphs_up_to_iso(std::size_t n)
{
  if (n == 0 || n > 8)
    throw std::invalid_argument("graphs_up_to_iso: n must be in 1..8");
  if (n == 1)
    return {SimpleGraph(1)};
  std::vector<SimpleGraph> out;
  std::set<std::uint32_t> seen;
  for (const auto &base : graphs_up_to_iso(n - 1)) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      SimpleGraph g(n);
      for (const auto &[u, v] : base.edges())
        g.add_edge(u, v);
      for (std::size_t v = 0; v + 1 < n; ++v)
        if (mask >> v & 1)
          g.add_edge(v, n - 1);
      if (seen.insert(canonical_code(g)).second)
        out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<SimpleGraph> all_small_graphs(std::size_t max_n)
{
  std::vector<SimpleGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = graphs_up_to_iso(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

bool krausz_line_graph(const SimpleGraph &g)
{
  const std::size_t n = g.size();
  SimpleGraph open = g;
  std::vector<int> uses(n, 0);

  std::function<bool()> cover = [&]() -> bool {
    const auto left = open.edges();
    if (left.empty())
      return true;
    const auto [u, v] = left.front();
    if (uses[u] == 2 || uses[v] == 2)
      return false;
    std::vector<std::size_t> cand;
    for (std::size_t w = 0; w < n; ++w)
      if (w != u && w != v && open.adjacent(u, w) && open.adjacent(v, w) && uses[w] < 2)
        cand.push_back(w);
    for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
      std::vector<std::size_t> clique{u, v};
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1)
          clique.push_back(cand[i]);
      bool ok = true;
      for (std::size_t a = 2; a < clique.size() && ok; ++a)
        for (std::size_t b = a + 1; b < clique.size() && ok; ++b)
          ok = open.adjacent(clique[a], clique[b]);
      if (!ok)
        continue;
      for (std::size_t a = 0; a < clique.size(); ++a) {
        ++uses[clique[a]];
        for (std::size_t b = a + 1; b < clique.size(); ++b)
          open.remove_edge(clique[a], clique[b]);
      }
      const bool done = cover();
      for (std::size_t a = 0; a < clique.size(); ++a) {
        --uses[clique[a]];
        for (std::size_t b = a + 1; b < clique.size(); ++b)
          open.add_edge(clique[a], clique[b]);
      }
      if (done)
        return true;
    }
    return false;
  };
  return cover();
}

} // namespace comax::test
