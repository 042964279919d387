#include "comax/lattice_cache.hpp"

#include "comax/error.hpp"

#include "json.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>
#include <vector>

namespace comax
{

namespace fs = std::filesystem;

std::string lattice_to_json(const SubgroupLattice &lat)
{
  nlohmann::ordered_json doc;
  doc["spec"] = lat.group_name();
  doc["order"] = lat.group_order();
  auto subgroups = nlohmann::ordered_json::array();
  for (const auto &h : lat.subgroups())
    subgroups.push_back(h.element_list());
  doc["subgroups"] = std::move(subgroups);
  return doc.dump() + "\n";
}

std::optional<SubgroupLattice> lattice_from_json(const GroupTable &g, const std::string &text)
{
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    return std::nullopt;
  if (!doc.contains("spec") || !doc["spec"].is_string() || doc["spec"] != g.name())
    return std::nullopt;
  if (!doc.contains("order") || !doc["order"].is_number_unsigned() || doc["order"] != g.order())
    return std::nullopt;
  if (!doc.contains("subgroups") || !doc["subgroups"].is_array())
    return std::nullopt;

  std::vector<Bitset> sets;
  for (const auto &entry : doc["subgroups"]) {
    if (!entry.is_array())
      return std::nullopt;
    Bitset set(g.order());
    for (const auto &x : entry) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() >= g.order())
        return std::nullopt;
      set.set(x.get<std::size_t>());
    }
    if (!is_subgroup(g, set))
      return std::nullopt;
    sets.push_back(std::move(set));
  }
  try {
    SubgroupLattice lat(g, std::move(sets));
    if (lat.size() < 1 || lat[0].order() != 1 || lat[lat.size() - 1].order() != g.order())
      return std::nullopt;
    return lat;
  } catch (const Error &) {
    return std::nullopt;
  }
}

LatticeCache::LatticeCache(fs::path dir) : _dir(std::move(dir)) {}

fs::path LatticeCache::path_for(const std::string &spec) const
{
  std::string file;
  for (char c : spec) {
    const bool keep = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                      c == '(' || c == ')' || c == ',';
    file += keep ? c : '_';
  }
  return _dir / (file + ".json");
}

std::optional<SubgroupLattice> LatticeCache::load(const GroupTable &g) const
{
  std::ifstream in(path_for(g.name()), std::ios::binary);
  if (!in)
    return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return lattice_from_json(g, buf.str());
}

void LatticeCache::store(const SubgroupLattice &lat) const
{
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  fs::create_directories(_dir, ec);
  if (ec)
    throw Error(Errc::io, "cannot create cache directory " + _dir.string() + ": " + ec.message());

  const fs::path target = path_for(lat.group_name());
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter++;
  const fs::path tmp = _dir / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(Errc::io, "cannot write " + tmp.string());
    out << lattice_to_json(lat);
    if (!out)
      throw Error(Errc::io, "write failed for " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::io, "cannot rename into " + target.string());
  }
}

SubgroupLattice LatticeCache::get_or_compute(const GroupTable &g, const LatticeLimits &limits) const
{
  // Apply the same caps as a cold computation so cached runs cannot differ.
  if (g.order() > limits.max_order)
    return all_subgroups(g, limits);
  if (auto hit = load(g)) {
    if (hit->size() > limits.max_subgroups)
      return all_subgroups(g, limits);
    return std::move(*hit);
  }
  SubgroupLattice lat = all_subgroups(g, limits);
  store(lat);
  return lat;
}

LatticeCache::Stat LatticeCache::stat() const
{
  Stat s;
  std::error_code ec;
  if (!fs::exists(_dir, ec))
    return s;
  for (fs::directory_iterator it(_dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (!it->is_regular_file() || it->path().extension() != ".json")
      continue;
    ++s.entries;
    s.bytes += it->file_size();
  }
  if (ec)
    throw Error(Errc::io, "cannot list cache directory " + _dir.string() + ": " + ec.message());
  return s;
}

void LatticeCache::clear() const
{
  std::error_code ec;
  if (!fs::exists(_dir, ec))
    return;
  std::vector<fs::path> doomed;
  for (fs::directory_iterator it(_dir, ec), end; !ec && it != end; it.increment(ec))
    if (it->is_regular_file() && it->path().extension() == ".json")
      doomed.push_back(it->path());
  for (const auto &p : doomed)
    if (!ec)
      fs::remove(p, ec);
  if (ec)
    throw Error(Errc::io, "cannot clear cache directory " + _dir.string() + ": " + ec.message());
}

} // namespace comax
