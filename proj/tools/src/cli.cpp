#include "cli.hpp"

#include "comax/comax_graph.hpp"
#include "comax/error.hpp"
#include "comax/graph_classes.hpp"
#include "comax/group_spec.hpp"
#include "comax/harness.hpp"
#include "comax/lattice.hpp"
#include "comax/lattice_cache.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace comax::cli
{

namespace
{

enum class Format
{
  text,
  json,
  dot,
};

struct Config
{
  std::size_t order_cap = 256;
  std::size_t subgroup_cap = 100000;
  std::string cache_dir;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  bool dot = false;

  Format format() const { return json ? Format::json : dot ? Format::dot : Format::text; }
  LatticeLimits lattice_limits() const { return {order_cap, subgroup_cap}; }
};

int exit_for(Errc code)
{
  switch (code) {
  case Errc::resource_limit: return exit_resource;
  case Errc::io: return exit_io;
  case Errc::syntax:
  case Errc::semantic:
  case Errc::invalid_parameter:
  case Errc::out_of_scope:
  case Errc::unsupported_class: return exit_usage;
  default: return exit_mismatch;
  }
}

std::string resolve_cache_dir(const std::string &flag)
{
  if (!flag.empty())
    return flag;
  if (const char *env = std::getenv("COMAX_CACHE_DIR"); env && *env)
    return env;
  return {};
}

struct Built
{
  GroupTable group;
  SubgroupLattice lattice;
};

Built build(const std::string &text, const Config &cfg)
{
  const GroupSpec spec = parse_spec(text);
  GroupTable g = realize(spec, GroupLimits{std::max<std::size_t>(cfg.order_cap, 1)});
  const std::string dir = resolve_cache_dir(cfg.cache_dir);
  if (!dir.empty()) {
    LatticeCache cache(dir);
    auto lat = cache.get_or_compute(g, cfg.lattice_limits());
    return {std::move(g), std::move(lat)};
  }
  auto lat = all_subgroups(g, cfg.lattice_limits());
  return {std::move(g), std::move(lat)};
}

std::string element_set(const SubgroupSet &h)
{
  std::string out = "{";
  const auto elems = h.element_list();
  for (std::size_t i = 0; i < elems.size(); ++i)
    out += (i ? ", " : "") + std::to_string(elems[i]);
  return out + "}";
}

int cmd_subgroups(const std::string &spec, const Config &cfg, std::ostream &out)
{
  const auto b = build(spec, cfg);
  if (cfg.format() == Format::json) {
    nlohmann::ordered_json doc;
    doc["group"] = b.group.name();
    doc["order"] = b.group.order();
    auto list = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < b.lattice.size(); ++i) {
      const auto &h = b.lattice[i];
      list.push_back({{"order", h.order()},
                      {"elements", h.element_list()},
                      {"label", subgroup_label(b.group, h)},
                      {"maximal", b.lattice.maximal(i)}});
    }
    doc["subgroups"] = std::move(list);
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  for (const auto &h : b.lattice.subgroups())
    out << h.order() << ": " << element_set(h) << "\n";
  return exit_ok;
}

int cmd_graph(const std::string &spec, const Config &cfg, std::ostream &out)
{
  const auto b = build(spec, cfg);
  const auto graph = build_comax_graph(b.group, b.lattice);
  switch (cfg.format()) {
  case Format::json: out << export_json(graph); break;
  case Format::dot: out << export_dot(graph); break;
  case Format::text:
    out << graph.group_name << ": " << graph.vertices.size() << " vertices, "
        << graph.graph.edge_count() << " edges\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
      out << "v" << v << " " << graph.labels[v] << "\n";
    for (auto [u, v] : graph.graph.edges())
      out << "v" << u << " -- v" << v << "\n";
    break;
  }
  return exit_ok;
}

SimpleGraph read_graph_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::io, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_comax_json(text);
  return parse_edge_list(text);
}

int cmd_classify(const std::string &spec, const std::string &graph_file, const Config &cfg,
                 std::ostream &out)
{
  SimpleGraph g;
  std::string name;
  std::vector<std::string> labels;
  if (!graph_file.empty()) {
    g = read_graph_file(graph_file);
    name = graph_file;
  } else {
    const auto b = build(spec, cfg);
    auto graph = build_comax_graph(b.group, b.lattice);
    g = std::move(graph.graph);
    name = graph.group_name;
    labels = std::move(graph.labels);
  }
  const auto report = classify(g);

  auto witness_text = [&](const PatternWitness &w) {
    std::string s = describe(w);
    if (!labels.empty()) {
      s += " (";
      for (std::size_t i = 0; i < w.map.size(); ++i)
        s += (i ? "; " : "") + labels[w.map[i]];
      s += ")";
    }
    return s;
  };

  if (cfg.format() == Format::json) {
    nlohmann::ordered_json doc;
    doc["group"] = name;
    doc["vertices"] = g.size();
    doc["edges"] = g.edge_count();
    nlohmann::ordered_json classes;
    for (auto c : all_graph_classes) {
      const auto &v = report[c];
      nlohmann::ordered_json entry;
      entry["value"] = v.value;
      entry["witness"] = v.witness ? nlohmann::ordered_json(witness_text(*v.witness))
                                   : nlohmann::ordered_json(nullptr);
      classes[std::string(to_string(c))] = std::move(entry);
    }
    doc["classes"] = std::move(classes);
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  for (auto c : all_graph_classes) {
    const auto &v = report[c];
    out << to_string(c) << ": " << (v.value ? "yes" : "no");
    if (v.witness)
      out << " witness: " << witness_text(*v.witness);
    out << "\n";
  }
  return exit_ok;
}

int verification_exit(const std::vector<VerificationRecord> &records)
{
  int code = exit_ok;
  for (const auto &r : records)
    if (r.status == VerificationRecord::Status::mismatch)
      return exit_mismatch;
  for (const auto &r : records)
    if (r.status == VerificationRecord::Status::error) {
      const int c = r.error_code ? exit_for(*r.error_code) : exit_mismatch;
      code = std::max(code, c == exit_usage ? exit_mismatch : c);
    }
  return code;
}

int cmd_verify(const std::string &suite, const SuiteOptions &so, const Config &cfg, std::ostream &out)
{
  if (!is_suite(suite))
    throw Error(Errc::invalid_parameter, "unknown suite '" + suite + "'");
  SweepOptions opts;
  opts.group_limits.max_order = std::max<std::size_t>(cfg.order_cap, 1);
  opts.lattice_limits = cfg.lattice_limits();
  opts.jobs = cfg.jobs;
  const std::string dir = resolve_cache_dir(cfg.cache_dir);
  std::optional<LatticeCache> cache;
  if (!dir.empty()) {
    cache.emplace(dir);
    opts.cache = &*cache;
  }
  const auto records = run_suite(suite, so, opts);
  out << (cfg.format() == Format::json ? report_json(records) : report_text(records));
  return verification_exit(records);
}

int cmd_cache(const std::string &action, const std::string &suite, const SuiteOptions &so,
              const Config &cfg, std::ostream &out)
{
  std::string dir = resolve_cache_dir(cfg.cache_dir);
  if (dir.empty())
    dir = ".comax-cache";
  LatticeCache cache(dir);
  if (action == "stat") {
    const auto s = cache.stat();
    out << "directory: " << dir << "\nentries: " << s.entries << "\nbytes: " << s.bytes << "\n";
    return exit_ok;
  }
  if (action == "clear") {
    cache.clear();
    out << "cleared " << dir << "\n";
    return exit_ok;
  }
  if (!is_suite(suite))
    throw Error(Errc::invalid_parameter, "unknown suite '" + suite + "'");
  std::size_t warmed = 0, skipped = 0;
  for (const auto &spec : suite_specs(suite, so)) {
    try {
      const auto g = realize(spec, GroupLimits{std::max<std::size_t>(cfg.order_cap, 1)});
      cache.get_or_compute(g, cfg.lattice_limits());
      ++warmed;
    } catch (const Error &e) {
      if (e.code() != Errc::resource_limit)
        throw;
      ++skipped;
    }
  }
  out << "warmed " << warmed << " lattices in " << dir;
  if (skipped)
    out << " (" << skipped << " above the caps)";
  out << "\n";
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Co-maximal subgroup graphs: lattices, graph classes and verification sweeps", "comax"};
  app.require_subcommand(1);

  Config cfg;
  std::string spec, graph_file, suite = "all", action;
  std::optional<std::size_t> max, max_order, max_n;

  auto add_caps = [&](CLI::App *sub) {
    sub->add_option("--order-cap", cfg.order_cap, "Largest group order to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subgroups", cfg.subgroup_cap, "Largest subgroup count to enumerate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", cfg.cache_dir, "Lattice cache directory (or COMAX_CACHE_DIR)");
  };

  auto *subgroups = app.add_subcommand("subgroups", "List all subgroups in canonical order");
  subgroups->add_option("spec", spec, "Group spec, e.g. \"C2 x C2 x C2\"")->required();
  subgroups->add_flag("--json", cfg.json, "JSON output");
  subgroups->add_option("--max-order", cfg.order_cap, "Alias of --order-cap")->check(CLI::PositiveNumber);
  add_caps(subgroups);

  auto *graph = app.add_subcommand("graph", "Build the co-maximal subgroup graph");
  graph->add_option("spec", spec, "Group spec")->required();
  auto *gjson = graph->add_flag("--json", cfg.json, "JSON output");
  graph->add_flag("--dot", cfg.dot, "Graphviz output")->excludes(gjson);
  graph->add_option("--max-order", cfg.order_cap, "Alias of --order-cap")->check(CLI::PositiveNumber);
  add_caps(graph);

  auto *cls = app.add_subcommand("classify", "Decide every graph class with witnesses");
  auto *cls_spec = cls->add_option("spec", spec, "Group spec");
  cls->add_option("--graph", graph_file, "Classify a graph file (edge list or graph JSON)")
      ->excludes(cls_spec);
  cls->add_flag("--json", cfg.json, "JSON output");
  cls->add_option("--max-order", cfg.order_cap, "Alias of --order-cap")->check(CLI::PositiveNumber);
  add_caps(cls);

  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite_help = "One of:";
  for (auto s : suite_names)
    suite_help += " " + std::string(s);
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--max", max, "Largest n (dihedral) or m (dicyclic)")->check(CLI::PositiveNumber);
  verify->add_option("--max-order", max_order, "Largest abelian group order")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", max_n, "Largest n for Q_{2^n}")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", cfg.json, "JSON report");
  add_caps(verify);

  auto *cache = app.add_subcommand("cache", "Manage the lattice cache");
  cache->add_option("action", action, "warm | clear | stat")
      ->required()
      ->check(CLI::IsMember({"warm", "clear", "stat"}));
  cache->add_option("suite", suite, "Suite to warm (default all)");
  cache->add_option("--max", max, "Largest n (dihedral) or m (dicyclic)")->check(CLI::PositiveNumber);
  cache->add_option("--max-order", max_order, "Largest abelian group order")->check(CLI::PositiveNumber);
  add_caps(cache);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    app.exit(e, out, err);
    return exit_usage;
  }

  const SuiteOptions so{max, max_order, max_n};
  try {
    if (*subgroups)
      return cmd_subgroups(spec, cfg, out);
    if (*graph)
      return cmd_graph(spec, cfg, out);
    if (*cls) {
      if (spec.empty() && graph_file.empty())
        throw Error(Errc::invalid_parameter, "classify needs a group spec or --graph FILE");
      return cmd_classify(spec, graph_file, cfg, out);
    }
    if (*verify)
      return cmd_verify(suite, so, cfg, out);
    if (*cache)
      return cmd_cache(action, suite, so, cfg, out);
  } catch (const Error &e) {
    err << "comax: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception &e) {
    err << "comax: internal error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_usage;
}

} // namespace comax::cli
