#include "doctest.h"

#include "comax/error.hpp"
#include "comax/group_spec.hpp"
#include "comax/lattice.hpp"
#include "comax/lattice_cache.hpp"
#include "comax/number_theory.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace comax;

namespace
{

std::size_t divisor_count(std::size_t n)
{
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d)
    c += n % d == 0;
  return c;
}

std::size_t divisor_sum(std::size_t n)
{
  std::size_t s = 0;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0)
      s += d;
  return s;
}

std::filesystem::path scratch_dir(const std::string &tag)
{
  auto dir = std::filesystem::temp_directory_path() /
             ("comax-unit-" + tag + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  return dir;
}

} // namespace

TEST_SUITE("lattice")
{

TEST_CASE("generated subgroups")
{
  auto c6 = make_cyclic(6);
  auto h = generated_subgroup(c6, {2});
  CHECK(h.element_list() == std::vector<Element>{0, 2, 4});
  CHECK(h.order() == 3);

  auto d4 = make_dihedral(4);
  auto v = generated_subgroup(d4, {2, 4});
  CHECK(v.element_list() == std::vector<Element>{0, 2, 4, 6});

  CHECK(generated_subgroup(d4, {}).order() == 1);
  CHECK(generated_subgroup(make_alternating(5), {1, 2}).order() > 1);
}

TEST_CASE("subgroup counts against closed forms")
{
  CHECK(all_subgroups(make_cyclic(12)).size() == 6);
  CHECK(all_subgroups(make_dicyclic(2)).size() == 6);
  CHECK(all_subgroups(make_symmetric(4)).size() == 30);
  CHECK(all_subgroups(make_alternating(4)).size() == 10);
  CHECK(all_subgroups(make_alternating(5)).size() == 59);

  auto c2cube = all_subgroups(realize(parse_spec("C2 x C2 x C2")));
  REQUIRE(c2cube.size() == 16);
  std::map<std::size_t, std::size_t> by_order;
  for (const auto &h : c2cube.subgroups())
    ++by_order[h.order()];
  CHECK(by_order == std::map<std::size_t, std::size_t>{{1, 1}, {2, 7}, {4, 7}, {8, 1}});

  for (std::size_t n = 1; n <= 60; ++n)
    CHECK(all_subgroups(make_cyclic(n)).size() == divisor_count(n));
  // D_n has tau(n) + sigma(n) subgroups
  for (std::size_t n = 3; n <= 30; ++n)
    CHECK(all_subgroups(make_dihedral(n)).size() == divisor_count(n) + divisor_sum(n));
}

TEST_CASE("abelian p-group counts match the Gaussian-binomial oracle")
{
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> types = {
      {2, {1, 1}},    {2, {1, 1, 1}}, {2, {1, 1, 1, 1}}, {2, {2, 1}},    {2, {2, 2}},
      {2, {3, 1}},    {2, {2, 1, 1}}, {2, {3, 2}},       {2, {2, 2, 1}}, {3, {1, 1}},
      {3, {2, 1}},    {3, {1, 1, 1}}, {5, {1, 1}},       {5, {2, 1}},    {7, {1, 1}},
      {2, {1, 1, 1, 1, 1}},
  };
  for (const auto &[p, lambda] : types) {
    std::string text;
    for (auto e : lambda)
      text += (text.empty() ? "C" : "xC") + std::to_string(ipow(p, e));
    CAPTURE(text);
    CHECK(all_subgroups(realize(parse_spec(text))).size() == abelian_p_subgroup_count(p, lambda));
  }
}

TEST_CASE("canonical order and closure")
{
  for (const auto &spec : {"D6", "Dic3", "A4", "C2xC6", "SD(5,4,2)", "Q16"}) {
    const auto g = realize(parse_spec(spec));
    const auto lat = all_subgroups(g);
    CAPTURE(spec);
    CHECK(lat[0].order() == 1);
    CHECK(lat[lat.size() - 1].order() == g.order());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      CHECK(is_subgroup(g, lat[i].elements()));
      CHECK(g.order() % lat[i].order() == 0);
      CHECK(lat.index_of(lat[i]) == i);
      if (i > 0) {
        const auto &a = lat[i - 1].elements(), &b = lat[i].elements();
        CHECK((a.count() < b.count() || (a.count() == b.count() && a.lex_less(b))));
      }
    }
  }
}

TEST_CASE("maximal subgroups")
{
  auto c12 = make_cyclic(12);
  auto lat = all_subgroups(c12);
  CHECK(is_maximal(lat, generated_subgroup(c12, {2})));
  CHECK_FALSE(is_maximal(lat, generated_subgroup(c12, {6})));
  CHECK(is_maximal(lat, generated_subgroup(c12, {3})));

  auto q8 = make_dicyclic(2);
  auto qlat = all_subgroups(q8);
  for (Element x : {1u, 4u, 5u})
    CHECK(is_maximal(qlat, generated_subgroup(q8, {x})));

  auto c4 = make_cyclic(4);
  CHECK_FALSE(is_maximal(all_subgroups(c4), generated_subgroup(c4, {})));
  auto c5 = make_cyclic(5);
  CHECK(is_maximal(all_subgroups(c5), generated_subgroup(c5, {})));

  // flagged maximal iff proper and contained in no other proper subgroup
  for (const auto &spec : {"S4", "D12", "C2xC2xC2", "SD(7,3,2)"}) {
    const auto g = realize(parse_spec(spec));
    const auto l = all_subgroups(g);
    for (std::size_t i = 0; i < l.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < l.size(); ++j)
        covered |= j != i && l[j].order() < g.order() &&
                   l[i].elements().is_subset_of(l[j].elements());
      CHECK(l.maximal(i) == (l[i].order() < g.order() && !covered));
    }
  }

  auto other = make_cyclic(3);
  CHECK_THROWS_AS(is_maximal(lat, generated_subgroup(other, {1})), Error);
}

TEST_CASE("set algebra")
{
  auto c6 = make_cyclic(6);
  auto two = generated_subgroup(c6, {2}), three = generated_subgroup(c6, {3});
  CHECK(intersect(two, three).order() == 1);
  CHECK(intersect(two, two) == two);
  CHECK(product_size(two, three) == 6);
  CHECK(product_size(two, two) == 3);
  CHECK(setwise_product(c6, two, three).count() == 6);
  CHECK(setwise_product(c6, generated_subgroup(c6, {}), three) == three.elements());
  CHECK(is_comaximal(c6, two, three));

  auto q8 = make_dicyclic(2);
  auto i = generated_subgroup(q8, {1}), j = generated_subgroup(q8, {4}), m1 = generated_subgroup(q8, {2});
  CHECK(intersect(i, j) == m1);
  CHECK(product_size(i, j) == 8);
  CHECK(is_comaximal(q8, i, j));
  CHECK_FALSE(is_comaximal(q8, m1, i));

  auto c4 = make_cyclic(4);
  auto h = generated_subgroup(c4, {2});
  CHECK_FALSE(is_comaximal(c4, h, h));

  try {
    intersect(two, i);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::ambient_mismatch);
  }
}

TEST_CASE("product identity on random pairs")
{
  std::mt19937 rng(7);
  for (const auto &spec : {"D6", "Dic3", "A4", "S4", "C2xC2xC2xC2"}) {
    const auto g = realize(parse_spec(spec));
    const auto lat = all_subgroups(g);
    std::uniform_int_distribution<std::size_t> pick(0, lat.size() - 1);
    for (int t = 0; t < 1000; ++t) {
      const auto &a = lat[pick(rng)], &b = lat[pick(rng)];
      const auto size = setwise_product(g, a, b).count();
      CHECK(size == product_size(a, b));
      CHECK((size == g.order()) == is_comaximal(g, a, b));
    }
  }
}

TEST_CASE("normal maximal subgroups are co-maximal with everything outside them")
{
  for (const auto &spec : {"S4", "D10", "Dic5", "C6xC2", "SD(7,3,2)", "A4"}) {
    const auto g = realize(parse_spec(spec));
    const auto lat = all_subgroups(g);
    for (std::size_t m = 0; m < lat.size(); ++m) {
      if (!lat.maximal(m) || !is_normal(g, lat[m]))
        continue;
      for (const auto &h : lat.subgroups())
        if (!h.elements().is_subset_of(lat[m].elements()))
          CHECK(is_comaximal(g, lat[m], h));
    }
  }
}

TEST_CASE("frattini subgroup")
{
  CHECK(all_subgroups(make_dicyclic(2)).frattini().order() == 2);
  CHECK(all_subgroups(make_cyclic(12)).frattini().order() == 2);
  CHECK(all_subgroups(make_symmetric(4)).frattini().order() == 1);
  CHECK(all_subgroups(make_cyclic(1)).frattini().order() == 1);
}

TEST_CASE("caps")
{
  try {
    all_subgroups(make_cyclic(300));
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::resource_limit);
    CHECK(std::string(e.what()).find("order cap") != std::string::npos);
  }
  try {
    all_subgroups(realize(parse_spec("C2xC2xC2xC2xC2")), LatticeLimits{256, 100});
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::resource_limit);
    CHECK(std::string(e.what()).find("subgroup count cap") != std::string::npos);
  }
}

TEST_CASE("lattice cache")
{
  const auto dir = scratch_dir("cache");
  LatticeCache cache(dir);
  const auto g = realize(parse_spec("Dic3"));
  const auto fresh = all_subgroups(g);

  const auto doc = lattice_to_json(fresh);
  auto back = lattice_from_json(g, doc);
  REQUIRE(back);
  CHECK(back->subgroups() == fresh.subgroups());
  CHECK_FALSE(lattice_from_json(make_dihedral(6), doc));
  CHECK_FALSE(lattice_from_json(g, "{not json"));

  CHECK_FALSE(cache.load(g));
  const auto first = cache.get_or_compute(g, {});
  std::ifstream in(cache.path_for("Dic3"));
  std::stringstream bytes;
  bytes << in.rdbuf();
  CHECK(bytes.str() == doc);
  const auto second = cache.get_or_compute(g, {});
  CHECK(first.subgroups() == second.subgroups());
  CHECK(cache.stat().entries == 1);

  // a corrupt entry is ignored and replaced
  std::ofstream(cache.path_for("Dic3")) << "{\"spec\": \"Dic3\"}";
  CHECK_FALSE(cache.load(g));
  CHECK(cache.get_or_compute(g, {}).subgroups() == fresh.subgroups());

  cache.clear();
  CHECK(cache.stat().entries == 0);
  std::filesystem::remove_all(dir);
}

} // TEST_SUITE
