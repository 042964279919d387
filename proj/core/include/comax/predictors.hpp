#ifndef COMAX_PREDICTORS_HPP
#define COMAX_PREDICTORS_HPP

#include "comax/graph_classes.hpp"
#include "comax/group.hpp"
#include "comax/group_spec.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace comax
{

/// Predicted verdicts for Γ(D_n), n >= 3: cluster, triangle-free, claw-free,
/// cograph and chordal. Other classes raise Errc::unsupported_class.
bool predict_dihedral(GraphClass c, std::size_t n);

/**
 * Predicted verdicts for Γ(Dic_m) of order 4m, m >= 3: triangle-free,
 * cograph and chordal iff m is a prime power; never cluster or claw-free.
 * m < 3 raises Errc::out_of_scope.
 */
bool predict_dicyclic(GraphClass c, std::size_t m);

/// Invariants of one Sylow subgroup of a nilpotent group.
struct SylowInfo
{
  std::size_t prime = 0;
  std::size_t log_order = 0;
  bool abelian = true;
  bool cyclic = true;
  /// Abelian type as a non-increasing exponent list (abelian only).
  std::vector<std::size_t> type;
  /// Largest element order is prime^log_exponent.
  std::size_t log_exponent = 0;
  bool two_generated = true;
  /// Exactly one subgroup of order p.
  bool unique_minimal = true;
};

/// Sylow decomposition with ascending primes, or nullopt if g is not nilpotent.
std::optional<std::vector<SylowInfo>> nilpotent_structure(const GroupTable &g);

/**
 * Evaluates the nilpotent-group classification for `c` on g. Returns
 * nullopt when the relevant statement only covers abelian groups and g is
 * not abelian. Throws Errc::out_of_scope for non-nilpotent groups.
 */
std::optional<bool> predict_nilpotent(GraphClass c, const GroupTable &g);
std::optional<bool> predict_nilpotent(GraphClass c, const GroupSpec &spec);

/// Every non-identity element has prime order.
bool is_epo_group(const GroupTable &g);

/// Every element order is a prime power (the identity counts).
bool is_eppo_group(const GroupTable &g);

/// Generated by at most two elements.
bool is_two_generated(const GroupTable &g);

/// Groups of order pq always have a cograph; nullopt unless |G| = pq.
std::optional<bool> predict_order_pq(GraphClass c, const GroupTable &g);

/**
 * For |G| = p^2 q: Γ(G) is a cograph iff G is C_3 ⋊ C_4, A_4, C_q ⋊ C_{p^2},
 * C_{p^2} ⋊ C_q, or every nontrivial proper subgroup is an EPPO group.
 * Nullopt when |G| is not of that form.
 */
std::optional<bool> predict_order_p2q(GraphClass c, const GroupTable &g);

/// For EPO groups: Γ(G) is a cograph iff G is 2-generated. Nullopt otherwise.
std::optional<bool> predict_epo(GraphClass c, const GroupTable &g);

/**
 * All abelian groups of order 2..order_cap up to isomorphism, as products of
 * cyclic prime-power factors (primes ascending, exponents non-increasing),
 * skipping groups with more than `max_subgroups` subgroups.
 */
std::vector<GroupSpec> enumerate_abelian(std::size_t order_cap, std::size_t max_subgroups = 100000);

} // namespace comax

#endif // COMAX_PREDICTORS_HPP
