#ifndef COMAX_LATTICE_CACHE_HPP
#define COMAX_LATTICE_CACHE_HPP

#include "comax/lattice.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace comax
{

/// {"spec": ..., "order": ..., "subgroups": [[elements...], ...]} on one line.
std::string lattice_to_json(const SubgroupLattice &lat);

/// Parses a cache document for `g`; returns nullopt if it does not describe g.
std::optional<SubgroupLattice> lattice_from_json(const GroupTable &g, const std::string &text);

/**
 * Directory of lattice documents, one file per canonical spec name. Loaded
 * entries are checked against the group before use, and writes go through
 * a temporary file and a rename so concurrent readers never see a partial
 * document.
 */
class LatticeCache
{
public:
  explicit LatticeCache(std::filesystem::path dir);

  const std::filesystem::path &dir() const { return _dir; }
  std::filesystem::path path_for(const std::string &spec) const;

  std::optional<SubgroupLattice> load(const GroupTable &g) const;
  void store(const SubgroupLattice &lat) const;

  /// Cached lattice if present and valid, otherwise computes and stores it.
  SubgroupLattice get_or_compute(const GroupTable &g, const LatticeLimits &limits) const;

  struct Stat
  {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  Stat stat() const;
  void clear() const;

private:
  std::filesystem::path _dir;
};

} // namespace comax

#endif // COMAX_LATTICE_CACHE_HPP
