// Exercises the shared library through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rainbowlab/rainbowlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rl_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and arithmetic") {
  CHECK(std::string(rl_version()) == "0.1.0");
  CHECK(rl_is_prime(97) == 1);
  CHECK(rl_is_prime(91) == 0);

  uint64_t primes[4];
  unsigned exps[4];
  size_t count = 0;
  REQUIRE(rl_factorize(360, primes, exps, 4, &count) == RL_OK);
  REQUIRE(count == 3);
  CHECK(primes[0] == 2);
  CHECK(exps[0] == 3);
  CHECK(rl_factorize(360, primes, exps, 2, &count) == RL_ERR_BUFFER);
  CHECK(count == 3);

  uint64_t order = 0;
  REQUIRE(rl_multiplicative_order(2, 7, &order) == RL_OK);
  CHECK(order == 3);
  CHECK(rl_multiplicative_order(0, 7, &order) == RL_ERR_DOMAIN);
  CHECK(std::string(rl_last_error()).size() > 0);
  CHECK(rl_multiplicative_order(2, 7, nullptr) == RL_ERR_ARGUMENT);

  uint64_t t = 0, w = 0;
  REQUIRE(rl_t_decomposition(12, 2, &t, &w) == RL_OK);
  CHECK(t == 3);
  CHECK(w == 4);

  int holds = -1;
  REQUIRE(rl_support_condition(17, 2, &holds) == RL_OK);
  CHECK(holds == 1);
  CHECK(rl_support_condition(9, 2, &holds) == RL_ERR_DOMAIN);

  int64_t bound = 0;
  REQUIRE(rl_frobenius_bound(3, 5, &bound) == RL_OK);
  CHECK(bound == 7);
  CHECK(rl_is_fermat_prime(17) == 1);
  CHECK(rl_is_fermat_prime(7) == 0);
}

TEST_CASE("digraph handles") {
  rl_digraph* g = nullptr;
  REQUIRE(rl_digraph_build(11, 2, &g) == RL_OK);
  CHECK(rl_digraph_order(g) == 11);
  CHECK(rl_digraph_component_count(g) == 3);
  CHECK(rl_digraph_cycle_vertex_count(g) == 6);
  uint64_t v = 0;
  REQUIRE(rl_digraph_successor(g, 3, &v) == RL_OK);
  CHECK(v == 9);
  REQUIRE(rl_digraph_component_of(g, 10, &v) == RL_OK);
  CHECK(v == 1);
  int cyc = -1;
  REQUIRE(rl_digraph_is_cycle_vertex(g, 2, &cyc) == RL_OK);
  CHECK(cyc == 0);
  CHECK(rl_digraph_successor(g, 11, &v) == RL_ERR_DOMAIN);

  char* text = nullptr;
  REQUIRE(rl_digraph_dot(g, 1, &text) == RL_OK);
  const std::string dot = take(text);
  CHECK(dot.find("subgraph cluster_2") != std::string::npos);
  CHECK(dot.find("subgraph cluster_3") == std::string::npos);
  REQUIRE(rl_digraph_json(g, &text) == RL_OK);
  CHECK(take(text).find("\"component_count\": 3") != std::string::npos);
  rl_digraph_free(g);

  CHECK(rl_digraph_build(1, 2, &g) == RL_ERR_DOMAIN);
  rl_component_kind kind;
  REQUIRE(rl_component_prediction(17, 2, &kind) == RL_OK);
  CHECK(kind == RL_EXACTLY_TWO);
  REQUIRE(rl_component_prediction(11, 3, &kind) == RL_OK);
  CHECK(kind == RL_OUT_OF_THEOREM_SCOPE);
}

TEST_CASE("coloring handles") {
  const uint8_t colors[] = {0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1};
  rl_coloring* c = nullptr;
  REQUIRE(rl_coloring_create(colors, 11, 3, &c) == RL_OK);
  CHECK(rl_coloring_size(c) == 11);
  CHECK(rl_coloring_is_exact(c) == 1);
  int found = -1;
  uint64_t xyz[3];
  REQUIRE(rl_coloring_find_rainbow(c, 2, &found, xyz) == RL_OK);
  CHECK(found == 0);
  char* text = nullptr;
  REQUIRE(rl_coloring_classify_json(c, 2, &text) == RL_OK);
  const std::string classify = take(text);
  CHECK(classify.find("\"overall\": true") != std::string::npos);
  CHECK(classify.find("\"classification_consistent\": true") != std::string::npos);

  char* csv = nullptr;
  REQUIRE(rl_prefix_analyze(c, 2, 33, &text, &csv) == RL_OK);
  CHECK(take(text).find("\"rainbow\": null") != std::string::npos);
  CHECK(take(csv).rfind("n,count_R,count_G,count_B\n1,0,1,0\n", 0) == 0);
  rl_coloring_free(c);

  REQUIRE(rl_coloring_from_json(R"({"n":7,"k":2,"colors":[0,1,2,0,0,0,0]})", &c) == RL_OK);
  REQUIRE(rl_coloring_find_rainbow(c, 2, &found, xyz) == RL_OK);
  CHECK(found == 1);
  CHECK(xyz[0] == 3);
  CHECK(xyz[1] == 2);
  CHECK(xyz[2] == 1);
  rl_coloring_free(c);

  const uint8_t bad[] = {0, 5};
  CHECK(rl_coloring_create(bad, 2, 3, &c) == RL_ERR_DOMAIN);
  CHECK(rl_coloring_from_json("{not json", &c) == RL_ERR_ARGUMENT);
}

TEST_CASE("rb table and enumeration") {
  rl_search_options opts;
  rl_search_options_default(&opts);
  char* json = nullptr;
  char* csv = nullptr;
  rl_rb_summary s;
  REQUIRE(rl_rb_table(5, 13, 1, 2, 2, 4, &opts, &json, &csv, &s) == RL_OK);
  CHECK(s.rows == 4);
  CHECK(s.agreements == 4);
  CHECK(s.disagreements == 0);
  take(json);
  const std::string table = take(csv);
  CHECK(table.find("\n5,2,3,3,yes,") != std::string::npos);
  CHECK(table.find("\n13,2,4,4,yes,") != std::string::npos);

  CHECK(rl_rb_table(8, 10, 1, 2, 2, 4, &opts, &json, &csv, &s) == RL_ERR_DOMAIN);
  CHECK(rl_rb_table(9, 5, 1, 2, 2, 4, &opts, &json, &csv, &s) == RL_ERR_DOMAIN);

  unsigned value = 0;
  int in_scope = -1;
  REQUIRE(rl_rb_predicted(13, 5, &value, &in_scope) == RL_OK);
  CHECK(in_scope == 1);
  CHECK(value == 4);

  size_t count = 0;
  REQUIRE(rl_enumerate_json(11, 2, 3, &opts, &json, &count) == RL_OK);
  CHECK(count == 1);
  CHECK(take(json).find("\"labeled_count\": 6") != std::string::npos);

  opts.node_budget = 3;
  CHECK(rl_enumerate_json(13, 2, 3, &opts, &json, &count) == RL_ERR_BUDGET);
}

TEST_CASE("density experiment and verify") {
  rl_density_config cfg{2, 200, 50, 7, 0.02, 0};
  char* json = nullptr;
  size_t exceptions = 99;
  REQUIRE(rl_density_experiment_json(&cfg, &json, &exceptions) == RL_OK);
  CHECK(exceptions == 0);
  CHECK(take(json).find("\"seed\": 7") != std::string::npos);

  rl_verify_config vc;
  rl_verify_config_default(&vc);
  vc.p_max = 30;
  vc.k_max = 6;
  vc.lift_length = 60;
  vc.density_trials = 20;
  int passed = -1;
  REQUIRE(rl_verify_all_json(&vc, &json, &passed) == RL_OK);
  CHECK(passed == 1);
  take(json);

  vc.self_test_negative = 1;
  REQUIRE(rl_verify_all_json(&vc, &json, &passed) == RL_OK);
  CHECK(passed == 0);
  take(json);
}
