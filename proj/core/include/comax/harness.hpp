#ifndef COMAX_HARNESS_HPP
#define COMAX_HARNESS_HPP

#include "comax/error.hpp"
#include "comax/graph_classes.hpp"
#include "comax/group_spec.hpp"
#include "comax/lattice.hpp"
#include "comax/lattice_cache.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comax
{

/// One predicted-versus-computed comparison.
struct VerificationRecord
{
  enum class Status
  {
    match,
    mismatch,
    uncovered,
    error,
  };

  std::string family;
  std::size_t parameter = 0;
  std::string group;
  std::string graph_class;
  std::string theorem;
  std::optional<bool> predicted;
  std::optional<bool> computed;
  Status status = Status::error;
  std::string witness;
  std::string detail;

  /// Error category when status is error.
  std::optional<Errc> error_code;
  /// Position of the group within its sweep; used only for ordering.
  std::size_t ordinal = 0;
};

std::string_view to_string(VerificationRecord::Status s);

/// A family of groups, the classes to check, and which statement predicts them.
struct FamilySweep
{
  enum class Family
  {
    dihedral,       // D_n for n in [first, last]
    dicyclic,       // Dic_m for m in [first, last]
    gen_quaternion, // Q_{2^k} for k in [first, last]
    cyclic,         // C_n for n in [first, last]
    abelian_all,    // every abelian group of order <= last
    catalog,        // the listed specs
  };

  enum class Theory
  {
    family,    // dihedral or dicyclic statement, by family
    nilpotent,
    order_pq,
    order_p2q,
    epo,
  };

  Family family = Family::catalog;
  Theory theory = Theory::family;
  std::string label;
  std::size_t first = 0;
  std::size_t last = 0;
  std::vector<GroupSpec> catalog;
  std::vector<GraphClass> classes;
};

struct SweepOptions
{
  GroupLimits group_limits;
  LatticeLimits lattice_limits;
  /// Optional lattice cache; not owned.
  const LatticeCache *cache = nullptr;
  std::size_t jobs = 1;
};

/**
 * Realizes each group, builds its lattice and co-maximal graph, classifies
 * it and compares against the predictor. Per-group failures become error
 * records. Records are ordered by (family, parameter, group, class)
 * independently of `jobs`.
 */
std::vector<VerificationRecord> run_sweep(const FamilySweep &sweep, const SweepOptions &options = {});

/// For Q_{2^n}, n in [first, last] (at most 6): closed-form adjacency versus
/// brute-force co-maximality over all descriptor pairs, one record per n.
std::vector<VerificationRecord> check_proposition_1_1(std::size_t first, std::size_t last);

struct SuiteOptions
{
  std::optional<std::size_t> max;       // dihedral n, dicyclic m
  std::optional<std::size_t> max_order; // abelian
  std::optional<std::size_t> max_n;     // prop11
};

inline constexpr std::string_view suite_names[] = {
    "dihedral", "dicyclic", "prop11", "abelian", "nilpotent-catalog", "order-pq", "order-p2q", "all",
};

bool is_suite(std::string_view name);

/// The sweeps a named suite runs (prop11 is not a sweep and yields none).
std::vector<FamilySweep> suite_sweeps(std::string_view name, const SuiteOptions &options = {});

/// Runs a named suite, including the prop11 check where applicable.
std::vector<VerificationRecord> run_suite(std::string_view name, const SuiteOptions &suite = {},
                                          const SweepOptions &options = {});

/// Every distinct spec a suite would realize, in sweep order.
std::vector<GroupSpec> suite_specs(std::string_view name, const SuiteOptions &options = {});

struct VerificationSummary
{
  std::size_t total = 0;
  std::size_t matched = 0;
  std::size_t mismatched = 0;
  std::size_t uncovered = 0;
  std::size_t errored = 0;
};

VerificationSummary summarize(const std::vector<VerificationRecord> &records);

/// {"records": [...], "summary": {...}}
std::string report_json(const std::vector<VerificationRecord> &records);

/// Fixed-width table followed by a summary line.
std::string report_text(const std::vector<VerificationRecord> &records);

} // namespace comax

#endif // COMAX_HARNESS_HPP
