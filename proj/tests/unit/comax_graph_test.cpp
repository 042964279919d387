#include "doctest.h"

#include "comax/predictors.hpp"

#include "comax/comax_graph.hpp"
#include "comax/error.hpp"
#include "comax/group_spec.hpp"

#include "json.hpp"

#include <set>

using namespace comax;

namespace
{

ComaxGraph gamma_of(const std::string &spec)
{
  const auto g = realize(parse_spec(spec));
  return build_comax_graph(g, all_subgroups(g));
}

std::size_t count_lines(const std::string &text, const std::string &needle)
{
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST_SUITE("comax-graph")
{

TEST_CASE("small graphs")
{
  CHECK(gamma_of("C7").graph.size() == 0);

  const auto q8 = gamma_of("Q8");
  REQUIRE(q8.graph.size() == 4);
  CHECK(q8.graph.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(q8.vertices[0].order() == 2);
  CHECK(q8.graph.degree(0) == 0);

  const auto c8 = gamma_of("C8");
  CHECK(c8.graph.size() == 2);
  CHECK(c8.graph.edge_count() == 0);

  const auto c6 = gamma_of("C6");
  CHECK(c6.graph.size() == 2);
  CHECK(c6.graph.edge_count() == 1);
  CHECK(c6.labels[0] == "|H|=2 <3>");
}

TEST_CASE("structural invariants")
{
  for (const auto &spec : {"D6", "Dic3", "A4", "S4", "C2xC2xC3", "SD(7,3,2)", "Q16", "D8",
                           "C2xC2xC2xC2", "C6xC6", "Dic5", "C3xC3xC3"}) {
    CAPTURE(spec);
    const auto g = realize(parse_spec(spec));
    const auto lat = all_subgroups(g);
    const auto gamma = build_comax_graph(g, lat);
    CHECK(gamma.graph.size() == lat.size() - 2);
    const auto phi = lat.frattini();
    const bool nilpotent = nilpotent_structure(g).has_value();
    for (std::size_t u = 0; u < gamma.graph.size(); ++u) {
      CHECK_FALSE(gamma.graph.adjacent(u, u));
      // subgroups inside the Frattini subgroup are isolated; for nilpotent
      // groups, where maximal subgroups are normal, they are the only ones
      const bool in_phi = gamma.vertices[u].elements().is_subset_of(phi.elements());
      if (in_phi)
        CHECK(gamma.graph.degree(u) == 0);
      if (nilpotent)
        CHECK((gamma.graph.degree(u) == 0) == in_phi);
      for (std::size_t v = 0; v < gamma.graph.size(); ++v) {
        CHECK(gamma.graph.adjacent(u, v) == gamma.graph.adjacent(v, u));
        if (u != v)
          CHECK(gamma.graph.adjacent(u, v) ==
                (product_size(gamma.vertices[u], gamma.vertices[v]) == g.order()));
      }
    }
  }
}

TEST_CASE("lattice from another group is rejected")
{
  const auto a = make_cyclic(6), b = make_dihedral(3);
  try {
    build_comax_graph(a, all_subgroups(b));
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::ambient_mismatch);
  }
}

TEST_CASE("DOT export")
{
  CHECK(export_dot(gamma_of("C7")) == "graph comax {\n}\n");
  const auto q8 = gamma_of("Q8");
  const auto dot = export_dot(q8);
  CHECK(count_lines(dot, "[label=") == 4);
  CHECK(count_lines(dot, " -- ") == 3);
  CHECK(dot.find("v0 [label=\"|H|=2: {0, 2}\"];") != std::string::npos);
  CHECK(export_dot(q8) == dot);
}

TEST_CASE("JSON export and round trip")
{
  const auto c4 = nlohmann::json::parse(export_json(gamma_of("C4")));
  CHECK(c4["group"] == "C4");
  CHECK(c4["vertices"].size() == 1);
  CHECK(c4["edges"].empty());

  const auto c6 = nlohmann::json::parse(export_json(gamma_of("C6")));
  CHECK(c6["vertices"].size() == 2);
  CHECK(c6["edges"] == nlohmann::json::array({nlohmann::json::array({0, 1})}));

  for (const auto &spec : {"D6", "S4", "C2xC2xC3", "Q16"}) {
    const auto gamma = gamma_of(spec);
    const auto text = export_json(gamma);
    CHECK(text == export_json(gamma));
    const auto back = parse_comax_json(text);
    CHECK(back == gamma.graph);
    const auto edges = nlohmann::json::parse(text)["edges"];
    for (std::size_t i = 1; i < edges.size(); ++i)
      CHECK(edges[i - 1] < edges[i]);
  }
  CHECK_THROWS_AS(parse_comax_json("{\"vertices\": 3}"), Error);
  CHECK_THROWS_AS(parse_comax_json("[1, 2"), Error);
}

TEST_CASE("quaternion descriptors")
{
  using Q = QSubgroupDescriptor;
  CHECK(q_adjacency_predicate(4, Q::type_two(2, 0), Q::type_two(2, 1)));
  CHECK_FALSE(q_adjacency_predicate(4, Q::type_one(2), Q::type_one(4)));
  CHECK(q_adjacency_predicate(4, Q::type_one(1), Q::type_two(1, 0)));
  CHECK_FALSE(q_adjacency_predicate(4, Q::type_two(2, 0), Q::type_two(2, 2 % 2)));
  CHECK(to_string(Q::type_one(2)) == "I(d=2)");
  CHECK(to_string(Q::type_two(4, 3)) == "II(d=4,i=3)");

  CHECK_THROWS_AS(check_descriptor(3, Q::type_one(3)), Error);
  CHECK_THROWS_AS(check_descriptor(3, Q::type_two(2, 2)), Error);
  CHECK_NOTHROW(check_descriptor(3, Q::type_one(4)));

  const auto q8 = make_gen_quaternion(3);
  const auto d3 = q_descriptors(q8, 3);
  std::vector<QSubgroupDescriptor> got;
  for (const auto &v : d3)
    got.push_back(v.descriptor);
  CHECK(got == std::vector<QSubgroupDescriptor>{Q::type_one(1), Q::type_one(2), Q::type_two(2, 0),
                                                 Q::type_two(2, 1)});

  for (std::size_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto q = make_gen_quaternion(n);
    const auto lat = all_subgroups(q);
    const auto vs = q_descriptors(q, n);
    CHECK(vs.size() == lat.size() - 2);
    std::set<std::size_t> hit;
    for (const auto &v : vs) {
      CHECK(is_subgroup(q, v.subgroup.elements()));
      CHECK(v.subgroup == realize_descriptor(q, n, v.descriptor));
      const auto idx = lat.index_of(v.subgroup);
      REQUIRE(idx);
      CHECK(*idx > 0);
      CHECK(*idx + 1 < lat.size());
      hit.insert(*idx);
    }
    CHECK(hit.size() == vs.size());
  }
  CHECK_THROWS_AS(q_descriptors(make_gen_quaternion(8), 8), Error);
}

} // TEST_SUITE
