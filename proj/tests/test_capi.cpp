#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "secoh/secoh.h"

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("SECOH_PROBLEMS");
  REQUIRE(dir);
  std::ifstream in(std::string(dir) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Problem {
  secoh_problem* p = nullptr;
  explicit Problem(const std::string& text) { status = secoh_problem_parse(text.data(), text.size(), &p); }
  ~Problem() { secoh_problem_free(p); }
  secoh_status status;
};

struct Out {
  char* s = nullptr;
  ~Out() { secoh_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse, compute and free through the C interface") {
  Problem pr(fixture("z2_z2.json"));
  REQUIRE(pr.status == SECOH_OK);
  CHECK(std::string(secoh_problem_hash(pr.p)).size() == 16);
  Out out;
  REQUIRE(secoh_compute(pr.p, 0, &out.s) == SECOH_OK);
  CHECK(out.str().find("\"group\": \"Z2\"") != std::string::npos);
  CHECK(std::string(secoh_version()).size() > 0);
}

TEST_CASE("errors map to status codes") {
  Problem bad(fixture("invalid_associativity.json"));
  CHECK(bad.status == SECOH_ERR_VALIDATION);
  CHECK(bad.p == nullptr);
  CHECK(std::string(secoh_last_error()).find("associative") != std::string::npos);

  Problem cocycle(fixture("invalid_cocycle.json"));
  CHECK(cocycle.status == SECOH_ERR_VALIDATION);

  const std::string broken = "{\"variant\": ";
  Problem syntax(broken);
  CHECK(syntax.status == SECOH_ERR_VALIDATION);

  CHECK(secoh_problem_parse(nullptr, 0, nullptr) == SECOH_ERR_INVALID_ARGUMENT);

  Problem pr(fixture("z2_z2.json"));
  Out out;
  CHECK(secoh_compute(pr.p, 4, &out.s) == SECOH_ERR_SCALE);
  CHECK(secoh_last_required_rank() == 8);
  CHECK(out.s == nullptr);
  CHECK(secoh_compute(nullptr, 0, &out.s) == SECOH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify, oracle, faces and run") {
  Problem s3(fixture("s3_z3_verify.json"));
  REQUIRE(s3.status == SECOH_OK);
  Out v;
  CHECK(secoh_verify(s3.p, 100, 7, &v.s) == SECOH_OK);
  CHECK(v.str().find("\"phi_chain_map\"") != std::string::npos);

  Problem z2(fixture("z2_z2.json"));
  Out o;
  CHECK(secoh_oracle(z2.p, &o.s) == SECOH_OK);
  CHECK(o.str().find("oracle_agreement") != std::string::npos);
  Out f;
  CHECK(secoh_faces(z2.p, -1, &f.s) == SECOH_OK);
  CHECK(f.str().find("\"faces\"") != std::string::npos);

  Problem tri(fixture("z2_triple_verify.json"));
  Out r;
  CHECK(secoh_run(tri.p, 0, &r.s) == SECOH_OK);
  CHECK(r.str().find("\"mode\": \"verify\"") != std::string::npos);

  Problem orc(fixture("z2_oracle_triple.json"));
  Out r2;
  CHECK(secoh_run(orc.p, 0, &r2.s) == SECOH_OK);
}
