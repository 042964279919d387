#include "comax/comax_graph.hpp"

#include "comax/error.hpp"

#include "json.hpp"

#include <numeric>
#include <sstream>

namespace comax
{

ComaxGraph build_comax_graph(const GroupTable &g, const SubgroupLattice &lat)
{
  if (lat.ambient() != g.fingerprint() || lat.group_order() != g.order())
    throw Error(Errc::ambient_mismatch,
                "lattice of " + lat.group_name() + " does not belong to " + g.name());
  ComaxGraph out;
  out.group_name = g.name();
  out.group_order = g.order();
  for (const auto &h : lat.subgroups())
    if (h.order() != 1 && h.order() != g.order()) {
      out.vertices.push_back(h);
      out.labels.push_back("|H|=" + std::to_string(h.order()) + " " + subgroup_label(g, h));
    }
  const std::size_t n = out.vertices.size();
  out.graph = SimpleGraph(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (product_size(out.vertices[a], out.vertices[b]) == g.order())
        out.graph.add_edge(a, b);
  return out;
}

namespace
{

std::string element_set(const SubgroupSet &h)
{
  std::string out = "{";
  bool first = true;
  h.elements().for_each([&](std::size_t x) {
    out += (first ? "" : ", ") + std::to_string(x);
    first = false;
  });
  return out + "}";
}

} // namespace

std::string export_dot(const ComaxGraph &graph)
{
  std::ostringstream out;
  out << "graph comax {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    out << "  v" << v << " [label=\"|H|=" << graph.vertices[v].order() << ": "
        << element_set(graph.vertices[v]) << "\"];\n";
  for (auto [u, v] : graph.graph.edges())
    out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const ComaxGraph &graph)
{
  nlohmann::ordered_json doc;
  doc["group"] = graph.group_name;
  auto vertices = nlohmann::ordered_json::array();
  for (const auto &h : graph.vertices) {
    nlohmann::ordered_json v;
    v["order"] = h.order();
    v["elements"] = h.element_list();
    vertices.push_back(std::move(v));
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : graph.graph.edges())
    edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

SimpleGraph parse_comax_json(std::string_view text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(Errc::syntax, std::string("graph JSON: ") + e.what());
  }
  try {
    const auto &vertices = doc.at("vertices");
    if (!vertices.is_array())
      throw Error(Errc::syntax, "graph JSON: \"vertices\" must be an array");
    SimpleGraph g(vertices.size());
    for (const auto &e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(Errc::syntax, "graph JSON: each edge must be a pair");
      const auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
      if (u >= g.size() || v >= g.size() || u == v)
        throw Error(Errc::syntax, "graph JSON: invalid edge [" + std::to_string(u) + ", " +
                                      std::to_string(v) + "]");
      g.add_edge(u, v);
    }
    return g;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::syntax, std::string("graph JSON: ") + e.what());
  }
}

std::string to_string(const QSubgroupDescriptor &q)
{
  if (q.kind == QSubgroupDescriptor::Kind::type_one)
    return "I(d=" + std::to_string(q.d) + ")";
  return "II(d=" + std::to_string(q.d) + ",i=" + std::to_string(q.i) + ")";
}

void check_descriptor(std::size_t n, const QSubgroupDescriptor &q)
{
  if (n < 3 || n > 40)
    throw Error(Errc::invalid_parameter, "Q_{2^n} requires 3 <= n <= 40");
  const std::size_t rot = std::size_t{1} << (n - 1);
  if (q.d == 0 || rot % q.d != 0)
    throw Error(Errc::invalid_parameter,
                to_string(q) + ": d must divide 2^" + std::to_string(n - 1));
  if (q.kind == QSubgroupDescriptor::Kind::type_two && q.i >= q.d)
    throw Error(Errc::invalid_parameter, to_string(q) + ": shift i must satisfy i < d");
}

bool q_adjacency_predicate(std::size_t n, const QSubgroupDescriptor &a,
                           const QSubgroupDescriptor &b)
{
  check_descriptor(n, a);
  check_descriptor(n, b);
  using K = QSubgroupDescriptor::Kind;
  const std::size_t g = std::gcd(a.d, b.d);
  if (a.kind == K::type_one && b.kind == K::type_one)
    return false;
  if (a.kind != b.kind)
    return g == 1;
  const std::size_t diff = a.i > b.i ? a.i - b.i : b.i - a.i;
  return g == 1 || (g == 2 && diff % 2 == 1);
}

SubgroupSet realize_descriptor(const GroupTable &q, std::size_t n, const QSubgroupDescriptor &d)
{
  check_descriptor(n, d);
  const std::size_t rot = std::size_t{1} << (n - 1);
  if (q.order() != 2 * rot)
    throw Error(Errc::invalid_parameter, q.name() + " is not Q" + std::to_string(2 * rot));
  // Index layout of make_dicyclic: r^j is j, r^j s is 2m + j with 2m = rot.
  const Element r_d = static_cast<Element>(d.d % rot);
  if (d.kind == QSubgroupDescriptor::Kind::type_one)
    return generated_subgroup(q, {r_d});
  return generated_subgroup(q, {r_d, static_cast<Element>(rot + d.i)});
}

std::vector<QVertex> q_descriptors(const GroupTable &q, std::size_t n)
{
  if (n > max_quaternion_exponent)
    throw Error(Errc::resource_limit, "q_descriptors supports Q_{2^n} with n <= " +
                                          std::to_string(max_quaternion_exponent));
  if (n < 3)
    throw Error(Errc::invalid_parameter, "Q_{2^n} requires n >= 3");
  const std::size_t half = std::size_t{1} << (n - 2);
  std::vector<QVertex> out;
  for (std::size_t d = 1; d <= half; d *= 2) {
    auto desc = QSubgroupDescriptor::type_one(d);
    out.push_back({desc, realize_descriptor(q, n, desc)});
  }
  for (std::size_t d = 2; d <= half; d *= 2)
    for (std::size_t i = 0; i < d; ++i) {
      auto desc = QSubgroupDescriptor::type_two(d, i);
      out.push_back({desc, realize_descriptor(q, n, desc)});
    }
  return out;
}

} // namespace comax
