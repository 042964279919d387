#ifndef COMAX_GROUP_HPP
#define COMAX_GROUP_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace comax
{

/// Index of a group element, 0..order-1.
using Element = std::uint32_t;

/// A permutation of {0..d-1}, stored as its image list.
using Permutation = std::vector<Element>;

struct GroupLimits
{
  /// Largest Cayley table any constructor will materialize.
  std::size_t max_order = 1024;
};

/**
 * A finite group given by its full Cayley table.
 *
 * Elements are dense indices; `mul(a, b)` is the product ab. The table is
 * immutable after construction and may be shared freely between threads.
 * Construction does not check the group axioms, so that broken tables can
 * be fed to `validate`.
 */
class GroupTable
{
public:
  GroupTable(std::string name, std::size_t order, std::vector<Element> mul,
             Element identity, std::vector<Element> inv,
             std::vector<std::string> element_names = {},
             std::map<Element, std::string> generator_labels = {});

  /**
   * Builds a table from a raw multiplication table, locating the identity
   * and inverses where they exist. Missing inverses are recorded as the
   * identity so that `validate` reports them.
   */
  static GroupTable from_cayley(std::string name, std::size_t order,
                                std::vector<Element> mul);

  std::size_t order() const { return _order; }
  Element mul(Element a, Element b) const { return _mul[a * _order + b]; }
  Element identity() const { return _identity; }
  Element inv(Element a) const { return _inv[a]; }
  const std::string &name() const { return _name; }

  /// Display name of an element ("r^2s", "(1,0)", "(0 1 2)", ...).
  std::string element_name(Element a) const;

  const std::map<Element, std::string> &generator_labels() const
  { return _generator_labels; }

  const std::vector<Element> &table() const { return _mul; }
  const std::vector<Element> &inverses() const { return _inv; }
  const std::vector<std::string> &element_names() const { return _element_names; }

  /// Hash of the Cayley table; equal for identical tables.
  std::uint64_t fingerprint() const { return _fingerprint; }

  bool is_abelian() const;

  GroupTable renamed(std::string name) const;

private:
  std::string _name;
  std::size_t _order;
  std::vector<Element> _mul;
  Element _identity;
  std::vector<Element> _inv;
  std::vector<std::string> _element_names;
  std::map<Element, std::string> _generator_labels;
  std::uint64_t _fingerprint;
};

GroupTable make_cyclic(std::size_t n, const GroupLimits &limits = {});

/// D_n of order 2n: r^i is index i, r^i s is index n + i.
GroupTable make_dihedral(std::size_t n, const GroupLimits &limits = {});

/// Dic_m of order 4m: x^i is index i, x^i y is index 2m + i.
GroupTable make_dicyclic(std::size_t m, const GroupLimits &limits = {});

/// Generalized quaternion group of order 2^k, realized as Dic_{2^(k-2)}.
GroupTable make_gen_quaternion(std::size_t k, const GroupLimits &limits = {});

/// C_n ⋊ C_m with the generator of C_m acting by a -> k*a; (a,b) is index b*n + a.
GroupTable make_semidirect(std::size_t n, std::size_t m, std::size_t k,
                           const GroupLimits &limits = {});

GroupTable make_alternating(std::size_t n, const GroupLimits &limits = {});
GroupTable make_symmetric(std::size_t n, const GroupLimits &limits = {});

/**
 * Closure of a set of permutations of a common domain. Products compose
 * left to right: (p*q)(x) = q(p(x)). Elements are numbered in
 * breadth-first discovery order with the identity first.
 */
GroupTable from_permutations(const std::vector<Permutation> &generators,
                             const GroupLimits &limits = {},
                             std::string name = "");

/// g x h with the pair (i, j) at index i*|h| + j.
GroupTable direct_product(const GroupTable &g, const GroupTable &h,
                          const GroupLimits &limits = {});

/// Least t >= 1 with x^t = 1.
std::size_t element_order(const GroupTable &g, Element x);

/// Number of elements of each order.
std::map<std::size_t, std::size_t> order_census(const GroupTable &g);

/// Builds a permutation of {0..degree-1} from disjoint cycles.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<Element>> &cycles);

/// Cycle notation, "()" for the identity.
std::string cycle_string(const Permutation &p);

struct AxiomFailure
{
  std::string axiom;
  std::array<Element, 3> witness{};
  std::string detail;
};

struct ValidationReport
{
  std::vector<AxiomFailure> failures;
  bool associativity_exhaustive = true;

  bool ok() const { return failures.empty(); }
};

/**
 * Checks closure, identity, inverse and associativity laws. Associativity
 * is checked on every triple up to order 256 and on a fixed sample of
 * right-hand factors above that. One failure is reported per axiom.
 */
ValidationReport validate(const GroupTable &g);

} // namespace comax

#endif // COMAX_GROUP_HPP
