#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "ultraball/iso.hpp"
#include "ultraball/json_io.hpp"
#include "ultraball/laminar.hpp"

using namespace helpers;
using nlohmann::json;
using ub::Rat;

TEST_CASE("space JSON roundtrip is exact") {
  ub::Rng rng(113);
  for (int round = 0; round < 20; ++round) {
    ub::GenOptions opt;
    opt.leaves = 1 + static_cast<int>(ub::rand_below(rng, 10));
    ub::Space s = ub::gen_space(opt, rng);
    ub::Space back = ub::parse_space(ub::space_json(s).dump());
    CHECK(back.points() == s.points());
    CHECK(ub::same_space(back, s));
    // Emission is deterministic.
    CHECK(ub::space_json(back).dump() == ub::space_json(s).dump());
  }
}

TEST_CASE("space JSON parse errors are parse-kind with stable codes") {
  auto expect_parse = [](const std::string& text, const std::string& code) {
    try {
      ub::parse_space(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ub::Error& e) {
      CHECK(e.kind() == ub::Error::Kind::parse);
      CHECK(e.code() == code);
    }
  };
  expect_parse("not json", "bad-json");
  expect_parse("{\"points\": [\"a\"]}", "bad-schema");
  expect_parse("{\"points\": [\"a\"], \"matrix\": [[0]]}", "bad-schema");
  expect_parse(
      "{\"points\": [\"a\",\"b\"], \"matrix\": [[\"0\",\"-1\"],[\"-1\",\"0\"]]}",
      "bad-schema");

  // An asymmetric matrix is well-formed JSON but an invalid space: domain.
  try {
    ub::parse_space(
        "{\"points\": [\"a\",\"b\"], \"matrix\": [[\"0\",\"1\"],[\"2\",\"0\"]]}");
    FAIL("expected a domain error");
  } catch (const ub::Error& e) {
    CHECK(e.kind() == ub::Error::Kind::domain);
  }
}

TEST_CASE("distances survive as exact strings") {
  ub::Space s = make_space({"a", "b"}, {{"0", "1/3"}, {"1/3", "0"}});
  json j = ub::space_json(s);
  CHECK(j["matrix"][0][1] == "1/3");
  ub::Space dec = make_space({"a", "b"}, {{"0", "0.25"}, {"0.25", "0"}});
  CHECK(ub::space_json(dec)["matrix"][0][1] == "0.25");
  CHECK(ub::parse_space(ub::space_json(dec).dump()).dist(0, 1) == Rat(1, 4));
}

TEST_CASE("tree JSON roundtrip, labeled") {
  ub::Rng rng(127);
  for (int round = 0; round < 20; ++round) {
    ub::GenOptions opt;
    opt.leaves = 1 + static_cast<int>(ub::rand_below(rng, 10));
    ub::LabeledTree t = ub::gen_tree(opt, rng);
    ub::LabeledTree back = ub::parse_tree(ub::tree_json(t).dump());
    CHECK(back.labeled);
    CHECK(ub::canonical_form(back, true) == ub::canonical_form(t, true));
    CHECK(ub::tree_json(back).dump() == ub::tree_json(t).dump());
  }
}

TEST_CASE("tree JSON without labels parses as unlabeled") {
  std::string text = R"({"ball": ["a", "b"], "children": [
      {"ball": ["a"], "children": []},
      {"ball": ["b"], "children": []}]})";
  ub::LabeledTree t = ub::parse_tree(text);
  CHECK_FALSE(t.labeled);
  CHECK(t.node_count() == 3);
  CHECK(ub::canonical_form(t, false) == "(()())");
}

TEST_CASE("tree JSON parse errors") {
  auto code_of = [](const std::string& text) {
    try {
      ub::parse_tree(text);
      return std::string("no-error");
    } catch (const ub::Error& e) {
      CHECK(e.kind() == ub::Error::Kind::parse);
      return e.code();
    }
  };
  CHECK(code_of("]") == "bad-json");
  CHECK(code_of("[1,2]") == "bad-schema");
  // Leaf without a singleton ball.
  CHECK(code_of(R"({"label": "1", "children": [
      {"children": []}, {"ball": ["b"], "children": []}]})") == "bad-schema");
  // Mixed labeled/unlabeled nodes.
  CHECK(code_of(R"({"label": "1", "children": [
      {"ball": ["a"], "children": []},
      {"ball": ["b"], "label": "0", "children": []}]})") == "bad-schema");
  // Duplicate leaf point.
  CHECK(code_of(R"({"label": "1", "children": [
      {"ball": ["a"], "label": "0", "children": []},
      {"ball": ["a"], "label": "0", "children": []}]})") == "duplicate-point");
}

TEST_CASE("DOT output is deterministic and well formed") {
  ub::Space s = twin_pairs();
  ub::LabeledTree t = ub::build_tree(s);
  std::string dot1 = ub::tree_dot(t);
  std::string dot2 = ub::tree_dot(ub::build_tree(s));
  CHECK(dot1 == dot2);
  CHECK(dot1.find("digraph") != std::string::npos);
  CHECK(dot1.find("n0") != std::string::npos);
  CHECK(dot1.find("x1") != std::string::npos);

  std::string rdot = ub::rooted_dot(ub::add_leaf_transform(t));
  CHECK(rdot.find("digraph") != std::string::npos);
  CHECK(rdot == ub::rooted_dot(ub::add_leaf_transform(t)));
}

TEST_CASE("rooted tree JSON carries the shape") {
  ub::RootedTree t = ub::add_leaf_transform(ub::build_tree(twin_pairs()));
  json j = ub::rooted_json(t);
  REQUIRE(j.contains("children"));
  // Recursive document: the root keeps its 2 original children plus 1 fresh
  // leaf, and the whole tree has 10 vertices.
  CHECK(j["children"].size() == 3);
  std::function<int(const json&)> count = [&](const json& node) {
    int total = 1;
    for (const json& kid : node["children"]) total += count(kid);
    return total;
  };
  CHECK(count(j) == 10);
}

TEST_CASE("family JSON roundtrip") {
  ub::Rng rng(131);
  for (int round = 0; round < 15; ++round) {
    ub::GenOptions opt;
    opt.leaves = 1 + static_cast<int>(ub::rand_below(rng, 10));
    ub::SetFamily f = ub::family_of(ub::gen_space(opt, rng));
    ub::SetFamily back = ub::parse_family(ub::family_json(f).dump());
    CHECK(ub::same_family(back, f));
    CHECK(ub::family_json(back).dump() == ub::family_json(f).dump());
  }
  try {
    ub::parse_family(R"({"points": ["a"], "family": [["b"]]})");
    FAIL("expected a parse error");
  } catch (const ub::Error& e) {
    CHECK(e.code() == "unknown-point");
  }
}

TEST_CASE("ballean document") {
  json j = ub::ballean_json(ub::ballean_space(twin_pairs()));
  REQUIRE(j.contains("balls"));
  CHECK(j["balls"].size() == 7);
  CHECK(j["hmatrix"].size() == 7);
  bool saw_whole = false;
  for (const auto& b : j["balls"])
    if (b["id"] == "{x1,x2,x3,x4}") saw_whole = true;
  CHECK(saw_whole);
}

TEST_CASE("report serializers expose the witnesses") {
  ub::Space bad = make_space(
      {"a", "b", "c"}, {{"0", "1", "2"}, {"1", "0", "1"}, {"2", "1", "0"}});
  json j = ub::metric_report_json(bad.report(), bad);
  CHECK(j["is_metric"] == true);
  CHECK(j["is_ultrametric"] == false);
  REQUIRE(j.contains("ultrametric_witness"));
  CHECK(j["ultrametric_witness"].size() == 3);

  ub::SetFamily f({"a", "b", "c"},
                  {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}});
  json fr = ub::family_report_json(ub::validate_family(f), f);
  CHECK(fr["is_ballean"] == false);
  REQUIRE(fr.contains("crossing_pair"));
}

TEST_CASE("parse_subset maps names to sorted indices") {
  ub::Space s = twin_pairs();
  CHECK(ub::parse_subset(s, R"(["x3", "x1"])") == std::vector<int>{0, 2});
  CHECK_THROWS_AS(ub::parse_subset(s, R"(["nope"])"), ub::Error);
  CHECK_THROWS_AS(ub::parse_subset(s, "{}"), ub::Error);
}
