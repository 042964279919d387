#include "doctest.h"

#include "comax/error.hpp"
#include "comax/group_spec.hpp"
#include "comax/harness.hpp"
#include "comax/number_theory.hpp"
#include "comax/predictors.hpp"

#include "json.hpp"

#include <map>

using namespace comax;
using GC = GraphClass;

namespace
{

Errc code_of(auto &&f)
{
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::internal;
}

GroupTable group(const char *spec) { return realize(parse_spec(spec)); }

} // namespace

TEST_SUITE("harness")
{

TEST_CASE("dihedral predictor")
{
  CHECK(predict_dihedral(GC::cograph, 9));
  CHECK(predict_dihedral(GC::chordal, 4));
  CHECK_FALSE(predict_dihedral(GC::cluster, 5));
  CHECK(predict_dihedral(GC::claw_free, 4));
  CHECK_FALSE(predict_dihedral(GC::claw_free, 8));
  CHECK_FALSE(predict_dihedral(GC::triangle_free, 6));
  CHECK(predict_dihedral(GC::triangle_free, 25));
  CHECK(code_of([] { predict_dihedral(GC::split, 5); }) == Errc::unsupported_class);
  CHECK(code_of([] { predict_dihedral(GC::cograph, 2); }) == Errc::out_of_scope);
}

TEST_CASE("dicyclic predictor")
{
  CHECK(predict_dicyclic(GC::triangle_free, 3));
  CHECK_FALSE(predict_dicyclic(GC::cograph, 6));
  CHECK_FALSE(predict_dicyclic(GC::claw_free, 5));
  CHECK_FALSE(predict_dicyclic(GC::cluster, 4));
  CHECK(predict_dicyclic(GC::chordal, 8));
  CHECK(code_of([] { predict_dicyclic(GC::cograph, 2); }) == Errc::out_of_scope);
}

TEST_CASE("nilpotent structure")
{
  const auto s = nilpotent_structure(group("C4xC2xC3"));
  REQUIRE(s);
  REQUIRE(s->size() == 2);
  CHECK((*s)[0].prime == 2);
  CHECK((*s)[0].type == std::vector<std::size_t>{2, 1});
  CHECK_FALSE((*s)[0].cyclic);
  CHECK((*s)[1].cyclic);

  const auto q = nilpotent_structure(group("Q16"));
  REQUIRE(q);
  CHECK_FALSE((*q)[0].abelian);
  CHECK((*q)[0].unique_minimal);
  CHECK((*q)[0].log_exponent == 3);

  CHECK_FALSE(nilpotent_structure(group("S3")));
  CHECK(nilpotent_structure(group("D8")));
  CHECK(code_of([] { predict_nilpotent(GC::cograph, group("A4")); }) == Errc::out_of_scope);
}

TEST_CASE("nilpotent predictor examples")
{
  CHECK(predict_nilpotent(GC::cluster, parse_spec("Q8")) == true);
  CHECK(predict_nilpotent(GC::split, parse_spec("C2xC2xC3")) == true);
  CHECK(predict_nilpotent(GC::cograph, parse_spec("C4xC8")) == true);
  CHECK(predict_nilpotent(GC::cluster, parse_spec("C3xC3")) == true);
  CHECK(predict_nilpotent(GC::triangle_free, parse_spec("C36")) == true);
  CHECK(predict_nilpotent(GC::triangle_free, parse_spec("C30")) == false);
  CHECK(predict_nilpotent(GC::claw_free, parse_spec("Q8")) == true);
  CHECK(predict_nilpotent(GC::chordal, parse_spec("C2xC2xC2")) == true);
  CHECK(predict_nilpotent(GC::chordal, parse_spec("C4xC4")) == false);
  CHECK(predict_nilpotent(GC::threshold, parse_spec("C12")) == true);
  CHECK(predict_nilpotent(GC::split, parse_spec("D8")) == std::nullopt);
}

TEST_CASE("element-order predicates")
{
  CHECK(is_epo_group(group("C2xC2")));
  CHECK_FALSE(is_epo_group(group("C4")));
  CHECK(is_epo_group(make_semidirect(7, 3, 2)));
  CHECK(is_eppo_group(group("Q8")));
  CHECK_FALSE(is_eppo_group(group("C6")));
  CHECK(is_eppo_group(group("A4")));
  CHECK(is_two_generated(group("S4")));
  CHECK_FALSE(is_two_generated(group("C2xC2xC2")));
}

TEST_CASE("small-order predictors")
{
  for (const auto *spec : {"C6", "S3", "C15", "C21", "SD(7,3,2)"})
    CHECK(predict_order_pq(GC::cograph, group(spec)) == true);
  CHECK(predict_order_pq(GC::cograph, group("C12")) == std::nullopt);

  CHECK(predict_order_p2q(GC::cograph, group("A4")) == true);
  CHECK(predict_order_p2q(GC::cograph, group("Dic3")) == true);
  CHECK(predict_order_p2q(GC::cograph, group("D6")) == false);
  CHECK(predict_order_p2q(GC::cograph, group("C12")) == true);
  CHECK(predict_order_p2q(GC::cograph, group("D10")) == false);
  CHECK(predict_order_p2q(GC::cograph, group("C30")) == std::nullopt);

  CHECK(predict_epo(GC::cograph, group("S3")) == true);
  CHECK(predict_epo(GC::cograph, group("C2xC2xC2")) == false);
  CHECK(predict_epo(GC::cograph, group("C4")) == std::nullopt);
}

TEST_CASE("abelian enumeration against the partition-count oracle")
{
  const auto specs = enumerate_abelian(128);
  std::map<std::size_t, std::size_t> per_order;
  for (const auto &s : specs) {
    ++per_order[spec_order(s)];
    const auto g = realize(s);
    CHECK(g.is_abelian());
  }
  for (std::size_t n = 2; n <= 128; ++n) {
    std::size_t expected = 1;
    for (auto [p, e] : factorize(n))
      expected *= partition_count(e);
    CAPTURE(n);
    CHECK(per_order[n] == expected);
  }
  const auto at = [&](std::size_t n) {
    std::vector<std::string> out;
    for (const auto &s : specs)
      if (spec_order(s) == n)
        out.push_back(render(s));
    return out;
  };
  CHECK(at(4) == std::vector<std::string>{"C4", "C2xC2"});
  CHECK(at(12) == std::vector<std::string>{"C4xC3", "C2xC2xC3"});
  CHECK(at(8).size() == 3);
  CHECK(enumerate_abelian(64, 100).size() < enumerate_abelian(64).size());
  CHECK(code_of([] { enumerate_abelian(129); }) == Errc::invalid_parameter);
}

TEST_CASE("proposition check")
{
  const auto records = check_proposition_1_1(3, 6);
  REQUIRE(records.size() == 4);
  for (const auto &r : records) {
    CHECK(r.status == VerificationRecord::Status::match);
    CHECK(r.detail.find("mismatches=0") != std::string::npos);
  }
  CHECK_THROWS_AS(check_proposition_1_1(3, 7), Error);
}

TEST_CASE("dihedral sweep for cographs")
{
  FamilySweep sweep;
  sweep.family = FamilySweep::Family::dihedral;
  sweep.label = "dihedral";
  sweep.first = 3;
  sweep.last = 20;
  sweep.classes = {GC::cograph};
  std::vector<std::size_t> yes;
  for (const auto &r : run_sweep(sweep)) {
    CHECK(r.status == VerificationRecord::Status::match);
    if (r.computed == true)
      yes.push_back(r.parameter);
  }
  CHECK(yes == std::vector<std::size_t>{3, 5, 7, 9, 11, 13, 17, 19});
}

TEST_CASE("sweeps are deterministic across worker counts")
{
  FamilySweep sweep;
  sweep.family = FamilySweep::Family::abelian_all;
  sweep.theory = FamilySweep::Theory::nilpotent;
  sweep.label = "abelian";
  sweep.last = 48;
  sweep.classes = {GC::cograph, GC::chordal, GC::split};
  SweepOptions one, four;
  four.jobs = 4;
  const auto a = run_sweep(sweep, one), b = run_sweep(sweep, four);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_text(a) == report_text(b));
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK(a[i - 1].parameter <= a[i].parameter);
}

TEST_CASE("errors and uncovered groups are recorded, not thrown")
{
  FamilySweep sweep;
  sweep.family = FamilySweep::Family::catalog;
  sweep.theory = FamilySweep::Theory::nilpotent;
  sweep.label = "mixed";
  sweep.catalog = {parse_spec("C6"), parse_spec("D8"), parse_spec("S3"), parse_spec("C2xC2xC2xC2xC2xC2xC2")};
  sweep.classes = {GC::split};
  SweepOptions opts;
  opts.lattice_limits.max_subgroups = 1000;
  const auto records = run_sweep(sweep, opts);
  REQUIRE(records.size() == 4);
  CHECK(records[0].status == VerificationRecord::Status::match);
  CHECK(records[1].status == VerificationRecord::Status::uncovered);
  CHECK(records[2].status == VerificationRecord::Status::error);
  CHECK(records[2].error_code == Errc::out_of_scope);
  CHECK(records[3].status == VerificationRecord::Status::error);
  CHECK(records[3].error_code == Errc::resource_limit);

  const auto s = summarize(records);
  CHECK(s.total == 4);
  CHECK(s.matched == 1);
  CHECK(s.uncovered == 1);
  CHECK(s.errored == 2);
}

TEST_CASE("report formats")
{
  FamilySweep sweep;
  sweep.family = FamilySweep::Family::dihedral;
  sweep.label = "dihedral";
  sweep.first = 3;
  sweep.last = 4;
  sweep.classes = {GC::cluster, GC::claw_free};
  const auto records = run_sweep(sweep);
  const auto doc = nlohmann::json::parse(report_json(records));
  REQUIRE(doc["records"].size() == 4);
  const auto &first = doc["records"][0];
  CHECK(first["group"] == "D3");
  CHECK(first["class"] == "cluster");
  CHECK(first["theorem"] == "dihedral/cluster");
  CHECK(first["predicted"] == false);
  CHECK(first["status"] == "match");
  CHECK(first["witness"].is_string());
  CHECK(doc["summary"]["total"] == 4);

  const auto text = report_text(records);
  CHECK(text.find("D3") != std::string::npos);
  CHECK(text.find("total 4,") != std::string::npos);
}

TEST_CASE("suites")
{
  for (auto name : suite_names)
    CHECK(is_suite(name));
  CHECK_FALSE(is_suite("everything"));
  CHECK(suite_sweeps("prop11").empty());
  CHECK(code_of([] { suite_sweeps("nope"); }) == Errc::invalid_parameter);
  const auto specs = suite_specs("dihedral", {.max = 10});
  CHECK(specs.size() == 8);
  CHECK(render(specs.front()) == "D3");
}

} // TEST_SUITE
