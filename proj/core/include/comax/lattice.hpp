#ifndef COMAX_LATTICE_HPP
#define COMAX_LATTICE_HPP

#include "comax/bitset.hpp"
#include "comax/group.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace comax
{

struct LatticeLimits
{
  std::size_t max_order = 256;
  std::size_t max_subgroups = 100000;
};

/// A subgroup, stored as an element bitset of its ambient group.
class SubgroupSet
{
public:
  SubgroupSet() = default;
  SubgroupSet(Bitset elements, std::uint64_t ambient)
  : _elements(std::move(elements)), _order(_elements.count()), _ambient(ambient)
  {}

  const Bitset &elements() const { return _elements; }
  std::size_t order() const { return _order; }
  std::uint64_t ambient() const { return _ambient; }
  bool contains(Element x) const { return _elements.test(x); }
  std::vector<Element> element_list() const;

  friend bool operator==(const SubgroupSet &, const SubgroupSet &) = default;

private:
  Bitset _elements;
  std::size_t _order = 0;
  std::uint64_t _ambient = 0;
};

/// Least subgroup containing `seed`.
SubgroupSet generated_subgroup(const GroupTable &g, std::span<const Element> seed);
SubgroupSet generated_subgroup(const GroupTable &g, std::initializer_list<Element> seed);

/// True iff `set` contains the identity and is closed under products and inverses.
bool is_subgroup(const GroupTable &g, const Bitset &set);

/// A small generating set, chosen greedily in ascending element order.
std::vector<Element> generating_set(const GroupTable &g, const SubgroupSet &h);

/// "<r^2, s>" style descriptor built from `generating_set`.
std::string subgroup_label(const GroupTable &g, const SubgroupSet &h);

/**
 * All subgroups of a group in canonical order: ascending order, ties broken
 * by comparing ascending element lists lexicographically. Maximality flags
 * are derived from containment.
 */
class SubgroupLattice
{
public:
  /// Canonicalizes the given subgroup list; throws if it has duplicates.
  SubgroupLattice(const GroupTable &g, std::vector<Bitset> subgroups);

  const std::string &group_name() const { return _group_name; }
  std::size_t group_order() const { return _group_order; }
  std::uint64_t ambient() const { return _ambient; }

  const std::vector<SubgroupSet> &subgroups() const { return _subgroups; }
  std::size_t size() const { return _subgroups.size(); }
  const SubgroupSet &operator[](std::size_t i) const { return _subgroups[i]; }

  bool maximal(std::size_t i) const { return _maximal[i]; }
  std::optional<std::size_t> index_of(const SubgroupSet &h) const;

  /// Intersection of all maximal subgroups (the whole group if there are none).
  SubgroupSet frattini() const;

private:
  std::string _group_name;
  std::size_t _group_order;
  std::uint64_t _ambient;
  std::vector<SubgroupSet> _subgroups;
  std::vector<bool> _maximal;
  std::unordered_map<Bitset, std::size_t, BitsetHash> _index;
};

/**
 * Enumerates every subgroup. Starts from the cyclic subgroups and extends
 * each known subgroup H by elements g outside it with g^p in H for some
 * prime p, one element per coset Hg, until no new subgroup appears. Every
 * subgroup is reached along a maximal chain, so the result is complete.
 */
SubgroupLattice all_subgroups(const GroupTable &g, const LatticeLimits &limits = {});

SubgroupSet intersect(const SubgroupSet &h, const SubgroupSet &k);

/// |HK| = |H||K| / |H ∩ K|
std::size_t product_size(const SubgroupSet &h, const SubgroupSet &k);

/// {hk : h in H, k in K} as an element set.
Bitset setwise_product(const GroupTable &g, const SubgroupSet &h, const SubgroupSet &k);

/// HK = G.
bool is_comaximal(const GroupTable &g, const SubgroupSet &h, const SubgroupSet &k);

bool is_maximal(const SubgroupLattice &lat, const SubgroupSet &h);

bool is_normal(const GroupTable &g, const SubgroupSet &h);

} // namespace comax

#endif // COMAX_LATTICE_HPP
