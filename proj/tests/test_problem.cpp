#include <catch_amalgamated.hpp>

#include <set>

#include "secoh/errors.hpp"
#include "secoh/problem.hpp"

using namespace secoh;
using Catch::Matchers::ContainsSubstring;
using nlohmann::json;

namespace {

const char* kZ2 = R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [2]}, "degrees": [2, 3]})";

json result_at(const json& doc, int degree) {
  for (const auto& r : doc["results"])
    if (r["degree"] == degree) return r;
  return json();
}

}  // namespace

TEST_CASE("syntax errors report line and column") {
  CHECK_THROWS_WITH(parse_problem("{\n  \"variant\": \"abelian\",\n  \"A\": [2,,]\n}"),
                    ContainsSubstring("line 3"));
  CHECK_THROWS_WITH(parse_problem("[1, 2]"), ContainsSubstring("expected a JSON object"));
}

TEST_CASE("schema violations name the field") {
  CHECK_THROWS_WITH(parse_problem(R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [2]}})"),
                    ContainsSubstring("degrees"));
  CHECK_THROWS_WITH(parse_problem(R"({"variant": "cubic", "degrees": [1]})"), ContainsSubstring("unknown variant"));
  CHECK_THROWS_WITH(
      parse_problem(R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [2]}, "degrees": [1], "x": 1})"),
      ContainsSubstring("x: unknown field"));
  CHECK_THROWS_WITH(
      parse_problem(R"({"variant": "abelian", "A": {"invariants": [0]}, "B": {"invariants": [2]}, "degrees": [1]})"),
      ContainsSubstring("finite"));
  CHECK_THROWS_WITH(
      parse_problem(R"({"variant": "abelian", "A": {"invariants": [3, 2]}, "B": {"invariants": [2]}, "degrees": [1]})"),
      ContainsSubstring("A"));
  CHECK_THROWS_WITH(
      parse_problem(R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [2]}, "degrees": [17]})"),
      ContainsSubstring("degrees[0]"));
  CHECK_THROWS_WITH(
      parse_problem(R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [2]}, "degrees": [1], "mode": "fast"})"),
      ContainsSubstring("unknown mode"));
}

TEST_CASE("group and cocycle failures carry witnesses") {
  const char* loop = R"({"variant": "classical",
    "G": {"order": 5, "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]},
    "B": {"invariants": [2]}, "degrees": [1]})";
  CHECK_THROWS_WITH(parse_problem(loop), ContainsSubstring("not associative at (1, 1, 2)"));
  const char* cocycle = R"({"variant": "triple", "G": {"order": 2, "table": [0, 1, 1, 0]},
    "A": {"invariants": [2]}, "B": {"invariants": [2]},
    "kappa": {"values": [0, 0, 0, 0, 0, 0, 0, 0, 1]}, "degrees": [2]})";
  CHECK_THROWS_WITH(parse_problem(cocycle), ContainsSubstring("kappa"));
  const char* flipped = R"({"variant": "triple", "G": {"order": 2, "table": [0, 1, 1, 0]},
    "A": {"invariants": [2]}, "B": {"invariants": [2]},
    "kappa": {"values": [0, 0, 0, 0, 0, 0, 0, 0]}, "degrees": [2]})";
  CHECK_NOTHROW(parse_problem(flipped));
  const char* bad = R"({"variant": "triple", "G": {"order": 2, "table": [0, 1, 1, 0]},
    "A": {"invariants": [2]}, "B": {"invariants": [2]},
    "kappa": {"values": [0, 1, 0, 0, 0, 0, 0, 1]}, "degrees": [2]})";
  CHECK_THROWS_WITH(parse_problem(bad), ContainsSubstring("cocycle condition at ("));
  const char* action = R"({"variant": "classical", "G": {"order": 2, "table": [0, 1, 1, 0]},
    "B": {"invariants": [4], "action": [1, 2]}, "degrees": [1]})";
  CHECK_THROWS_WITH(parse_problem(action), ContainsSubstring("not an automorphism"));
}

TEST_CASE("hash is stable under formatting") {
  const auto a = parse_problem(kZ2);
  const auto b = parse_problem(R"({
      "variant": "abelian",
      "A": {"invariants": [2]},
      "B": {"invariants": [2]},
      "degrees": [2, 3]
  })");
  CHECK(a.input_hash == b.input_hash);
  CHECK(a.input_hash.size() == 16);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("cohomology mode results") {
  const auto spec = parse_problem(kZ2);
  const auto doc = run(spec, RunOptions{});
  CHECK(doc["mode"] == "cohomology");
  CHECK(result_at(doc, 2)["group"] == "Z2");
  CHECK(result_at(doc, 2)["invariant_factors"] == json::array({2}));
  CHECK(result_at(doc, 3)["source_rank"] == 8);
  CHECK(result_at(doc, 3)["target_rank"] == 64);
  RunOptions tight;
  tight.ceiling = 4;
  CHECK_THROWS_AS(run_cohomology(spec, tight), ScaleError);
}

TEST_CASE("verify mode runs every identity") {
  const auto spec = parse_problem(R"({"variant": "triple", "G": {"order": 2, "table": [0, 1, 1, 0]},
    "A": {"invariants": [2]}, "B": {"invariants": [0]},
    "kappa": {"values": [0, 0, 0, 0, 0, 0, 0, 1]}, "u": {"values": [1, 0, 1, 1]},
    "degrees": [1, 2], "mode": "verify"})");
  RunOptions opts;
  opts.samples = 100;
  const auto doc = run(spec, opts);
  CHECK(all_checks_pass(doc));
  std::set<std::string> names;
  for (const auto& c : doc["checks"]) names.insert(c["name"].get<std::string>());
  for (const char* n : {"delta_squared_pointwise", "delta_squared_matrix", "kappa_cocycle", "ternary_associativity",
                        "iota_chain_map", "rho_chain_map", "phi_chain_map", "phi_composition",
                        "phi_cohomology_invariance"}) {
    INFO(n);
    CHECK(names.count(n) == 1);
  }
  CHECK(doc["observations"].size() == 2);
}

TEST_CASE("oracle and faces modes") {
  const auto spec = parse_problem(kZ2);
  const auto doc = run_oracle(spec, RunOptions{});
  CHECK(all_checks_pass(doc));
  CHECK(result_at(doc, 2)["oracle"]["order"] == 2);
  RunOptions opts;
  opts.faces_degree = 2;
  const auto faces = run_faces(spec, opts);
  CHECK(faces["faces"].size() == 8);
  CHECK(faces["faces"][0]["faces"].size() == 4);
  const auto inf = parse_problem(R"({"variant": "abelian", "A": {"invariants": [2]}, "B": {"invariants": [0]}, "degrees": [2]})");
  CHECK_THROWS_AS(run_oracle(inf, RunOptions{}), ValidationError);
}

TEST_CASE("failing checks are reported, not thrown") {
  json doc{{"checks", json::array({json{{"name", "x"}, {"pass", true}}, json{{"name", "y"}, {"pass", false}}})}};
  CHECK_FALSE(all_checks_pass(doc));
  doc["checks"][1]["pass"] = true;
  CHECK(all_checks_pass(doc));
}
