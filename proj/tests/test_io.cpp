#include <sstream>

#include "doctest.h"
#include "maxsemi/io.hpp"
#include "maxsemi/registry.hpp"

using namespace maxsemi;

TEST_CASE("descriptor JSON") {
  auto M = FiniteMonoid::enumerate(Family::POI, 3);
  auto G = greens(M);
  auto r = theorem_registry(M, G);
  REQUIRE_FALSE(r.descriptors.empty());
  auto c = count_formula(Family::POI, 3);
  auto j = descriptor_json(M, r.descriptors.front(), count_json(c));
  CHECK(j["family"] == "POI");
  CHECK(j["degree"] == 3);
  CHECK(j["kind"] == "M1");
  CHECK(j["j_rank"] == 3);
  CHECK(j["count_context"]["value"] == 7);
  CHECK(j["count_context"]["formula"] == "2^n - 1");
  CHECK(j.contains("payload"));
}

TEST_CASE("verdict JSON carries witnesses") {
  auto M = FiniteMonoid::enumerate(Family::T, 2);
  auto G = greens(M);
  auto full = verdict_json(M, verify_maximal(M, G, M.full_set()));
  CHECK_FALSE(full["proper"].get<bool>());
  CHECK_FALSE(full["maximal"].get<bool>());
  CHECK_FALSE(full["witness_on_failure"].is_null());

  ElementSet only_identity(M.size());
  only_identity.set(M.identity());
  auto small = verdict_json(M, verify_maximal(M, G, only_identity));
  CHECK(small["proper"].get<bool>());
  CHECK(small["closed"].get<bool>());
  CHECK_FALSE(small["maximal"].get<bool>());
  CHECK(small["witness_on_failure"].contains("excluded"));

  auto r  = theorem_registry(M, G);
  auto ok = verdict_json(M, verify_maximal(M, G, r.descriptors.front().materialize(M, G)));
  CHECK(ok["maximal"].get<bool>());
  CHECK(ok["witness_on_failure"].is_null());
}

TEST_CASE("Green's summary") {
  auto M = FiniteMonoid::enumerate(Family::J, 4);
  auto j = greens_json(M, greens(M));
  CHECK(j["size"] == 14);
  REQUIRE(j["j_classes"].size() == 3);
  CHECK(j["j_classes"][1]["rank"] == 2);
  CHECK(j["j_classes"][1]["l_classes"] == 3);
  CHECK(j["j_classes"][1]["regular"].get<bool>());
}

TEST_CASE("Cayley CSV") {
  auto               M = FiniteMonoid::enumerate(Family::T, 2);
  std::ostringstream out;
  write_cayley_csv(out, M);
  std::string        line;
  std::istringstream in(out.str());
  std::size_t        rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == static_cast<long>(M.size()));
    CHECK(line.find('\n') == std::string::npos);
  }
  CHECK(rows == M.size() + 1);
}

TEST_CASE("element strings are single-line and parse back") {
  auto M = FiniteMonoid::enumerate(Family::PT, 3);
  for (index_t i = 0; i < M.size(); ++i) {
    auto s = M.element_string(i);
    CHECK(s.find('\n') == std::string::npos);
    CHECK(parse_transformation(s) == M.transformation(i));
  }
  auto P = FiniteMonoid::enumerate(Family::P, 2);
  for (index_t i = 0; i < P.size(); ++i) {
    CHECK(parse_partition(P.element_string(i)) == P.partition(i));
  }
}

TEST_CASE("oracle report JSON") {
  auto M      = FiniteMonoid::enumerate(Family::I, 2);
  auto G      = greens(M);
  auto sets   = exhaustive_maximal(M, Budgets{});
  auto report = compare_sets(M.name(), "exhaustive", sets, {sets.front()});
  auto j      = oracle_report_json(M, report);
  CHECK_FALSE(j["agreement"].get<bool>());
  CHECK(j["oracle_count"] == 2);
  CHECK(j["engine_count"] == 1);
  CHECK(j["only_oracle_complements"].size() == 1);
}
