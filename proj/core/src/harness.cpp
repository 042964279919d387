#include "comax/harness.hpp"

#include "comax/comax_graph.hpp"
#include "comax/predictors.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace comax
{

namespace
{

using Status = VerificationRecord::Status;

struct SweepItem
{
  std::size_t parameter;
  GroupSpec spec;
};

std::vector<SweepItem> sweep_items(const FamilySweep &sweep, std::size_t max_subgroups)
{
  using F = FamilySweep::Family;
  std::vector<SweepItem> out;
  switch (sweep.family) {
  case F::dihedral:
    for (std::size_t n = sweep.first; n <= sweep.last; ++n)
      out.push_back({n, GroupSpec::dihedral(n)});
    break;
  case F::dicyclic:
    for (std::size_t m = sweep.first; m <= sweep.last; ++m)
      out.push_back({m, GroupSpec::dicyclic(m)});
    break;
  case F::gen_quaternion:
    for (std::size_t k = sweep.first; k <= sweep.last; ++k)
      out.push_back({k, GroupSpec::gen_quaternion(k)});
    break;
  case F::cyclic:
    for (std::size_t n = sweep.first; n <= sweep.last; ++n)
      out.push_back({n, GroupSpec::cyclic(n)});
    break;
  case F::abelian_all:
    for (auto &spec : enumerate_abelian(sweep.last, max_subgroups))
      out.push_back({spec_order(spec), std::move(spec)});
    break;
  case F::catalog:
    for (std::size_t i = 0; i < sweep.catalog.size(); ++i)
      out.push_back({i, sweep.catalog[i]});
    break;
  }
  return out;
}

std::string theory_name(const FamilySweep &sweep)
{
  using T = FamilySweep::Theory;
  switch (sweep.theory) {
  case T::family:
    if (sweep.family == FamilySweep::Family::dihedral)
      return "dihedral";
    if (sweep.family == FamilySweep::Family::dicyclic)
      return "dicyclic";
    return "nilpotent";
  case T::nilpotent: return "nilpotent";
  case T::order_pq: return "order-pq";
  case T::order_p2q: return "order-p2q";
  case T::epo: return "epo";
  }
  return "?";
}

std::optional<bool> predict(const FamilySweep &sweep, GraphClass c, std::size_t parameter,
                            const GroupTable &g)
{
  using T = FamilySweep::Theory;
  switch (sweep.theory) {
  case T::family:
    if (sweep.family == FamilySweep::Family::dihedral)
      return predict_dihedral(c, parameter);
    if (sweep.family == FamilySweep::Family::dicyclic)
      return predict_dicyclic(c, parameter);
    return predict_nilpotent(c, g);
  case T::nilpotent: return predict_nilpotent(c, g);
  case T::order_pq: return predict_order_pq(c, g);
  case T::order_p2q: return predict_order_p2q(c, g);
  case T::epo: return predict_epo(c, g);
  }
  return std::nullopt;
}

std::string witness_text(const PatternWitness &w, const ComaxGraph &graph)
{
  std::string out = describe(w) + ":";
  for (std::size_t i = 0; i < w.map.size(); ++i)
    out += (i ? "; " : " ") + graph.labels[w.map[i]];
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::vector<VerificationRecord> process(const FamilySweep &sweep, const SweepItem &item,
                                        std::size_t ordinal, const SweepOptions &options)
{
  const std::string theory = theory_name(sweep);
  auto base = [&](GraphClass c) {
    VerificationRecord r;
    r.family = sweep.label;
    r.parameter = item.parameter;
    r.group = render(item.spec);
    r.graph_class = std::string(to_string(c));
    r.theorem = theory + "/" + r.graph_class;
    r.ordinal = ordinal;
    return r;
  };
  auto failed = [&](Errc code, const std::string &what) {
    std::vector<VerificationRecord> out;
    for (auto c : sweep.classes) {
      auto r = base(c);
      r.status = Status::error;
      r.error_code = code;
      r.detail = what;
      out.push_back(std::move(r));
    }
    return out;
  };

  std::optional<GroupTable> g;
  std::optional<SubgroupLattice> lat;
  GraphClassReport report;
  ComaxGraph graph;
  try {
    g.emplace(realize(item.spec, options.group_limits));
    lat.emplace(options.cache ? options.cache->get_or_compute(*g, options.lattice_limits)
                              : all_subgroups(*g, options.lattice_limits));
    graph = build_comax_graph(*g, *lat);
    report = classify(graph.graph);
  } catch (const Error &e) {
    return failed(e.code(), e.what());
  } catch (const std::exception &e) {
    return failed(Errc::internal, e.what());
  }

  std::vector<VerificationRecord> out;
  for (auto c : sweep.classes) {
    auto r = base(c);
    const auto &verdict = report[c];
    r.computed = verdict.value;
    if (verdict.witness)
      r.witness = witness_text(*verdict.witness, graph);
    try {
      r.predicted = predict(sweep, c, item.parameter, *g);
    } catch (const Error &e) {
      r.status = Status::error;
      r.error_code = e.code();
      r.detail = e.what();
      out.push_back(std::move(r));
      continue;
    }
    if (!r.predicted) {
      r.status = Status::uncovered;
      r.detail = "statement does not cover " + r.group;
    } else if (*r.predicted == verdict.value) {
      r.status = Status::match;
    } else {
      r.status = Status::mismatch;
      r.detail = "predicted " + bool_text(*r.predicted) + ", computed " + bool_text(verdict.value);
    }
    out.push_back(std::move(r));
  }
  return out;
}

void sort_records(std::vector<VerificationRecord> &records)
{
  std::stable_sort(records.begin(), records.end(),
                   [](const VerificationRecord &a, const VerificationRecord &b) {
                     if (a.family != b.family)
                       return a.family < b.family;
                     if (a.parameter != b.parameter)
                       return a.parameter < b.parameter;
                     if (a.ordinal != b.ordinal)
                       return a.ordinal < b.ordinal;
                     const auto ca = parse_graph_class(a.graph_class);
                     const auto cb = parse_graph_class(b.graph_class);
                     return ca && cb ? *ca < *cb : a.graph_class < b.graph_class;
                   });
}

std::vector<GroupSpec> catalog(std::initializer_list<std::string_view> names)
{
  std::vector<GroupSpec> out;
  for (auto n : names)
    out.push_back(parse_spec(n));
  return out;
}

const std::vector<GraphClass> &dihedral_classes()
{
  static const std::vector<GraphClass> v{GraphClass::cluster, GraphClass::triangle_free,
                                         GraphClass::claw_free, GraphClass::cograph,
                                         GraphClass::chordal};
  return v;
}

FamilySweep make_sweep(FamilySweep::Family f, FamilySweep::Theory t, std::string label,
                       std::size_t first, std::size_t last, std::vector<GroupSpec> specs,
                       std::vector<GraphClass> classes)
{
  FamilySweep s;
  s.family = f;
  s.theory = t;
  s.label = std::move(label);
  s.first = first;
  s.last = last;
  s.catalog = std::move(specs);
  s.classes = std::move(classes);
  return s;
}

std::vector<std::string_view> suite_parts(std::string_view name)
{
  if (name == "all")
    return {"dihedral", "dicyclic", "prop11", "abelian", "nilpotent-catalog", "order-pq", "order-p2q"};
  return {name};
}

} // namespace

std::string_view to_string(VerificationRecord::Status s)
{
  switch (s) {
  case Status::match: return "match";
  case Status::mismatch: return "mismatch";
  case Status::uncovered: return "uncovered";
  case Status::error: return "error";
  }
  return "?";
}

std::vector<VerificationRecord> run_sweep(const FamilySweep &sweep, const SweepOptions &options)
{
  const auto items = sweep_items(sweep, options.lattice_limits.max_subgroups);
  std::vector<std::vector<VerificationRecord>> results(items.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, items.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++)
      results[i] = process(sweep, items[i], i, options);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  std::vector<VerificationRecord> out;
  for (auto &r : results)
    std::move(r.begin(), r.end(), std::back_inserter(out));
  sort_records(out);
  return out;
}

std::vector<VerificationRecord> check_proposition_1_1(std::size_t first, std::size_t last)
{
  if (first < 3 || last > 6)
    throw Error(Errc::invalid_parameter,
                "the closed-form adjacency check covers Q_{2^n} with 3 <= n <= 6");
  std::vector<VerificationRecord> out;
  for (std::size_t n = first; n <= last; ++n) {
    VerificationRecord r;
    r.family = "prop11";
    r.parameter = n;
    r.graph_class = "q-adjacency";
    r.theorem = "quaternion/q-adjacency";
    r.predicted = true;
    r.ordinal = n;
    try {
      const auto q = make_gen_quaternion(n);
      r.group = q.name();
      const auto lat = all_subgroups(q);
      const auto vertices = q_descriptors(q, n);

      // The descriptors must realize each proper nontrivial subgroup once.
      std::set<std::size_t> hit;
      std::string bijection_error;
      for (const auto &v : vertices) {
        const auto idx = lat.index_of(v.subgroup);
        if (!idx || v.subgroup.order() == 1 || v.subgroup.order() == q.order())
          bijection_error = to_string(v.descriptor) + " is not a proper nontrivial subgroup";
        else if (!hit.insert(*idx).second)
          bijection_error = to_string(v.descriptor) + " duplicates another descriptor";
      }
      if (bijection_error.empty() && hit.size() + 2 != lat.size())
        bijection_error = "descriptors cover " + std::to_string(hit.size()) + " of " +
                          std::to_string(lat.size() - 2) + " subgroups";

      std::size_t pairs = 0, mismatches = 0;
      for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
          ++pairs;
          const bool closed = q_adjacency_predicate(n, vertices[a].descriptor, vertices[b].descriptor);
          const bool brute = is_comaximal(q, vertices[a].subgroup, vertices[b].subgroup);
          if (closed != brute && mismatches++ == 0)
            r.witness = to_string(vertices[a].descriptor) + " vs " +
                        to_string(vertices[b].descriptor) + ": closed form " +
                        bool_text(closed) + ", co-maximal " + bool_text(brute);
        }
      r.computed = mismatches == 0 && bijection_error.empty();
      r.detail = "descriptors=" + std::to_string(vertices.size()) +
                 " pairs=" + std::to_string(pairs) + " mismatches=" + std::to_string(mismatches);
      if (!bijection_error.empty())
        r.detail += " bijection: " + bijection_error;
      r.status = *r.computed ? Status::match : Status::mismatch;
    } catch (const Error &e) {
      r.status = Status::error;
      r.error_code = e.code();
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool is_suite(std::string_view name)
{
  return std::find(std::begin(suite_names), std::end(suite_names), name) != std::end(suite_names);
}

std::vector<FamilySweep> suite_sweeps(std::string_view name, const SuiteOptions &options)
{
  using F = FamilySweep::Family;
  using T = FamilySweep::Theory;
  if (!is_suite(name))
    throw Error(Errc::invalid_parameter, "unknown suite '" + std::string(name) + "'");
  std::vector<FamilySweep> out;
  for (auto part : suite_parts(name)) {
    if (part == "dihedral") {
      out.push_back(make_sweep(F::dihedral, T::family, "dihedral", 3, options.max.value_or(40), {},
                               dihedral_classes()));
    } else if (part == "dicyclic") {
      out.push_back(make_sweep(F::dicyclic, T::family, "dicyclic", 3, options.max.value_or(20), {},
                               dihedral_classes()));
    } else if (part == "abelian") {
      out.push_back(make_sweep(F::abelian_all, T::nilpotent, "abelian", 2,
                               options.max_order.value_or(64), {},
                               {GraphClass::triangle_free, GraphClass::cograph, GraphClass::chordal,
                                GraphClass::split, GraphClass::threshold}));
    } else if (part == "nilpotent-catalog") {
      out.push_back(make_sweep(
          F::catalog, T::nilpotent, "nilpotent-catalog", 0, 0,
          catalog({"C2", "C8", "C9", "C25", "C27", "C32", "C49", "C64",
                   "C2xC2", "C3xC3", "C5xC5", "C7xC7",
                   "Q8", "Q16", "Q32", "Q64", "D4", "D8", "D16",
                   "C4xC2", "C4xC4", "C8xC2", "C8xC4", "C9xC3", "C2xC2xC2", "C3xC3xC3",
                   "C4xC2xC2", "C2xC2xC2xC2",
                   "SD(8,2,5)", "SD(8,2,3)", "SD(4,4,3)", "SD(9,3,4)", "SD(25,5,6)",
                   "C6", "C10", "C15", "C12", "C18", "C20", "C36", "C30", "C42", "C60",
                   "C2xC2xC3", "C3xC3xC2", "C2xC2xC5", "C4xC2xC3", "C2xC2xC3xC5",
                   "Q8xC3", "D4xC3", "Q8xC5", "C2xQ8", "C2xD4", "SD(9,3,4)xC2",
                   "C3xC3xC2xC2"}),
          std::vector<GraphClass>(all_graph_classes.begin(), all_graph_classes.end())));
    } else if (part == "order-pq") {
      out.push_back(make_sweep(F::catalog, T::order_pq, "order-pq", 0, 0,
                               catalog({"C6", "S3", "C15", "C21", "SD(7,3,2)", "C10", "D5", "C14",
                                        "D7", "C22", "D11", "C33", "SD(11,5,3)", "C35", "C39",
                                        "SD(13,3,3)"}),
                               {GraphClass::cograph}));
      out.push_back(make_sweep(F::catalog, T::epo, "epo", 0, 0,
                               catalog({"C2xC2", "C3xC3", "C5xC5", "C2xC2xC2", "C3xC3xC3",
                                        "C2xC2xC2xC2", "S3", "D5", "D7", "A4", "SD(7,3,2)",
                                        "SD(11,5,3)", "SD(13,3,3)"}),
                               {GraphClass::cograph}));
    } else if (part == "order-p2q") {
      out.push_back(make_sweep(
          F::catalog, T::order_p2q, "order-p2q", 0, 0,
          catalog({"C12", "C2xC2xC3", "D6", "A4", "Dic3",
                   "C20", "C2xC2xC5", "D10", "Dic5", "SD(5,4,2)",
                   "SD(3,4,2)", "C18", "C2xC3xC3", "D9", "S3xC3", "C28", "C2xC2xC7", "D14",
                   "Dic7", "SD(13,4,5)", "C45", "C3xC3xC5", "SD(7,9,2)", "C50", "C2xC5xC5",
                   "D25", "D5xC5", "SD(49,3,18)"}),
          {GraphClass::cograph}));
    }
  }
  return out;
}

std::vector<VerificationRecord> run_suite(std::string_view name, const SuiteOptions &suite,
                                          const SweepOptions &options)
{
  if (!is_suite(name))
    throw Error(Errc::invalid_parameter, "unknown suite '" + std::string(name) + "'");
  std::vector<VerificationRecord> out;
  for (auto part : suite_parts(name)) {
    std::vector<VerificationRecord> records;
    if (part == "prop11") {
      records = check_proposition_1_1(3, suite.max_n.value_or(6));
    } else {
      for (const auto &sweep : suite_sweeps(part, suite)) {
        auto more = run_sweep(sweep, options);
        std::move(more.begin(), more.end(), std::back_inserter(records));
      }
    }
    std::move(records.begin(), records.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<GroupSpec> suite_specs(std::string_view name, const SuiteOptions &options)
{
  std::vector<GroupSpec> out;
  std::set<std::string> seen;
  for (const auto &sweep : suite_sweeps(name, options))
    for (auto &item : sweep_items(sweep, LatticeLimits{}.max_subgroups))
      if (seen.insert(render(item.spec)).second)
        out.push_back(std::move(item.spec));
  return out;
}

} // namespace comax
