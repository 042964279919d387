#include "comax/lattice.hpp"

#include "comax/error.hpp"

#include <algorithm>
#include <numeric>

namespace comax
{

namespace
{

void require_same_ambient(const SubgroupSet &h, const SubgroupSet &k)
{
  if (h.ambient() != k.ambient() || h.elements().size() != k.elements().size())
    throw Error(Errc::ambient_mismatch, "subgroups belong to different groups");
}

void require_ambient(const GroupTable &g, const SubgroupSet &h)
{
  if (h.ambient() != g.fingerprint() || h.elements().size() != g.order())
    throw Error(Errc::ambient_mismatch, "subgroup does not belong to " + g.name());
}

/// Right-multiplication closure of a generator list; returns the element set.
Bitset closure(const GroupTable &g, std::span<const Element> gens,
               std::vector<Element> &scratch)
{
  Bitset set(g.order());
  scratch.clear();
  scratch.push_back(g.identity());
  set.set(g.identity());
  for (std::size_t head = 0; head < scratch.size(); ++head) {
    const Element x = scratch[head];
    for (auto t : gens) {
      const Element y = g.mul(x, t);
      if (!set.test(y)) {
        set.set(y);
        scratch.push_back(y);
      }
    }
  }
  return set;
}

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

std::vector<Element> SubgroupSet::element_list() const
{
  std::vector<Element> out;
  out.reserve(_order);
  _elements.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

SubgroupSet generated_subgroup(const GroupTable &g, std::span<const Element> seed)
{
  for (auto x : seed)
    if (x >= g.order())
      throw Error(Errc::invalid_parameter, "seed element " + std::to_string(x) + " out of range");
  std::vector<Element> scratch;
  return SubgroupSet(closure(g, seed, scratch), g.fingerprint());
}

SubgroupSet generated_subgroup(const GroupTable &g, std::initializer_list<Element> seed)
{
  return generated_subgroup(g, std::span<const Element>(seed.begin(), seed.size()));
}

bool is_subgroup(const GroupTable &g, const Bitset &set)
{
  if (set.size() != g.order() || !set.test(g.identity()))
    return false;
  const auto members = set.indices();
  for (auto a : members) {
    if (!set.test(g.inv(static_cast<Element>(a))))
      return false;
    for (auto b : members)
      if (!set.test(g.mul(static_cast<Element>(a), static_cast<Element>(b))))
        return false;
  }
  return true;
}

std::vector<Element> generating_set(const GroupTable &g, const SubgroupSet &h)
{
  require_ambient(g, h);
  std::vector<Element> gens;
  std::vector<Element> scratch;
  Bitset current(g.order());
  current.set(g.identity());
  h.elements().for_each([&](std::size_t x) {
    if (current.test(x))
      return;
    gens.push_back(static_cast<Element>(x));
    current = closure(g, gens, scratch);
  });
  return gens;
}

std::string subgroup_label(const GroupTable &g, const SubgroupSet &h)
{
  const auto gens = generating_set(g, h);
  if (gens.empty())
    return "<" + g.element_name(g.identity()) + ">";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i)
    out += (i ? ", " : "") + g.element_name(gens[i]);
  return out + ">";
}

SubgroupLattice::SubgroupLattice(const GroupTable &g, std::vector<Bitset> subgroups)
: _group_name(g.name()), _group_order(g.order()), _ambient(g.fingerprint())
{
  std::sort(subgroups.begin(), subgroups.end(), [](const Bitset &a, const Bitset &b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb)
      return ca < cb;
    return a.lex_less(b);
  });
  _subgroups.reserve(subgroups.size());
  for (auto &s : subgroups) {
    if (s.size() != g.order())
      throw Error(Errc::ambient_mismatch, "subgroup bitset has the wrong size");
    if (!_index.emplace(s, _subgroups.size()).second)
      throw Error(Errc::internal, "duplicate subgroup in lattice");
    _subgroups.emplace_back(std::move(s), _ambient);
  }

  // containing[x] = indices of subgroups that contain x. A proper subgroup
  // is maximal iff exactly two subgroups (itself and G) contain all of its
  // generators.
  const std::size_t count = _subgroups.size();
  std::vector<Bitset> containing(g.order(), Bitset(count));
  for (std::size_t i = 0; i < count; ++i)
    _subgroups[i].elements().for_each([&](std::size_t x) { containing[x].set(i); });

  _maximal.assign(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (_subgroups[i].order() == _group_order)
      continue;
    Bitset above(count);
    above.set_all();
    for (auto x : generating_set(g, _subgroups[i]))
      above &= containing[x];
    _maximal[i] = above.count() == 2;
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(const SubgroupSet &h) const
{
  if (h.ambient() != _ambient)
    return std::nullopt;
  auto it = _index.find(h.elements());
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

SubgroupSet SubgroupLattice::frattini() const
{
  Bitset all(_group_order);
  all.set_all();
  for (std::size_t i = 0; i < _subgroups.size(); ++i)
    if (_maximal[i])
      all &= _subgroups[i].elements();
  return SubgroupSet(std::move(all), _ambient);
}

SubgroupLattice all_subgroups(const GroupTable &g, const LatticeLimits &limits)
{
  const std::size_t n = g.order();
  if (n > limits.max_order)
    throw Error(Errc::resource_limit, g.name() + " has order " + std::to_string(n) +
                                          ", above the lattice order cap " +
                                          std::to_string(limits.max_order));

  // For each element, its p-th powers for the primes p dividing its order.
  std::vector<std::vector<Element>> prime_powers(n);
  for (Element x = 0; x < n; ++x) {
    const std::size_t ord = element_order(g, x);
    for (std::size_t p = 2; p <= ord; ++p) {
      if (ord % p || !is_prime(p))
        continue;
      Element y = g.identity();
      for (std::size_t i = 0; i < p; ++i)
        y = g.mul(y, x);
      prime_powers[x].push_back(y);
    }
  }

  struct Node
  {
    Bitset set;
    std::vector<Element> gens;
  };
  std::vector<Node> nodes;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  std::vector<Element> scratch;

  auto add = [&](Bitset set, std::vector<Element> gens) {
    if (seen.contains(set))
      return;
    if (nodes.size() + 1 > limits.max_subgroups)
      throw Error(Errc::resource_limit, g.name() + " has more than " +
                                            std::to_string(limits.max_subgroups) +
                                            " subgroups (subgroup count cap)");
    seen.emplace(set, nodes.size());
    nodes.push_back({std::move(set), std::move(gens)});
  };

  add(closure(g, {}, scratch), {});
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> gens{x};
    add(closure(g, gens, scratch), gens);
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Bitset h = nodes[i].set;
    const std::vector<Element> hgens = nodes[i].gens;
    const auto members = h.indices();
    Bitset covered = h;
    for (Element x = 0; x < n; ++x) {
      if (covered.test(x))
        continue;
      const bool prime_step = std::any_of(prime_powers[x].begin(), prime_powers[x].end(),
                                          [&h](Element y) { return h.test(y); });
      if (!prime_step)
        continue;
      for (auto m : members)
        covered.set(g.mul(static_cast<Element>(m), x));
      std::vector<Element> gens = hgens;
      gens.push_back(x);
      Bitset set = closure(g, gens, scratch);
      add(std::move(set), std::move(gens));
    }
  }

  std::vector<Bitset> sets;
  sets.reserve(nodes.size());
  for (auto &node : nodes)
    sets.push_back(std::move(node.set));
  return SubgroupLattice(g, std::move(sets));
}

SubgroupSet intersect(const SubgroupSet &h, const SubgroupSet &k)
{
  require_same_ambient(h, k);
  return SubgroupSet(h.elements() & k.elements(), h.ambient());
}

std::size_t product_size(const SubgroupSet &h, const SubgroupSet &k)
{
  require_same_ambient(h, k);
  const std::size_t common = h.elements().intersection_count(k.elements());
  return h.order() * k.order() / common;
}

Bitset setwise_product(const GroupTable &g, const SubgroupSet &h, const SubgroupSet &k)
{
  require_ambient(g, h);
  require_ambient(g, k);
  Bitset out(g.order());
  const auto ks = k.element_list();
  h.elements().for_each([&](std::size_t a) {
    for (auto b : ks)
      out.set(g.mul(static_cast<Element>(a), b));
  });
  return out;
}

bool is_comaximal(const GroupTable &g, const SubgroupSet &h, const SubgroupSet &k)
{
  require_ambient(g, h);
  require_ambient(g, k);
  return product_size(h, k) == g.order();
}

bool is_maximal(const SubgroupLattice &lat, const SubgroupSet &h)
{
  auto idx = lat.index_of(h);
  if (!idx)
    throw Error(Errc::not_in_lattice, "subgroup is not in the lattice of " + lat.group_name());
  return lat.maximal(*idx);
}

bool is_normal(const GroupTable &g, const SubgroupSet &h)
{
  require_ambient(g, h);
  const auto members = h.element_list();
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : members)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x))))
        return false;
  return true;
}

} // namespace comax
