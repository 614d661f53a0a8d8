#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "secoh/secoh.h"

namespace {

// Exit codes: 0 success, 1 validation error, 2 scale ceiling, 3 failed check.
int exit_code(secoh_status s) {
  switch (s) {
    case SECOH_OK:
      return 0;
    case SECOH_ERR_SCALE:
      return 2;
    case SECOH_ERR_VERIFY:
      return 3;
    default:
      return 1;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Write to a sibling temporary and rename over the target.
bool write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data << '\n';
    out.flush();
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

struct Common {
  std::string spec_path;
  std::string out_path;
};

template <class Call>
int execute(const Common& common, Call&& call) {
  std::string text;
  if (!read_file(common.spec_path, text)) {
    std::cerr << "error: cannot read " << common.spec_path << '\n';
    return 1;
  }
  secoh_problem* problem = nullptr;
  secoh_status st = secoh_problem_parse(text.data(), text.size(), &problem);
  if (st != SECOH_OK) {
    std::cerr << "error: " << secoh_last_error() << '\n';
    return exit_code(st);
  }
  char* json = nullptr;
  st = call(problem, &json);
  secoh_problem_free(problem);
  if (st == SECOH_ERR_SCALE) {
    std::cerr << "error: " << secoh_last_error() << " (required ambient rank " << secoh_last_required_rank()
              << "; raise --ceiling)\n";
    return 2;
  }
  if (!json) {
    std::cerr << "error: " << secoh_last_error() << '\n';
    return exit_code(st);
  }
  const std::string doc(json);
  secoh_string_free(json);
  if (common.out_path.empty()) {
    std::cout << doc << '\n';
  } else if (!write_atomically(common.out_path, doc)) {
    std::cerr << "error: cannot write " << common.out_path << '\n';
    return 1;
  }
  if (st == SECOH_ERR_VERIFY) std::cerr << "verification failed: see the checks array\n";
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secondary and classical cohomology of finite groups with abelian coefficients"};
  app.set_version_flag("--version", std::string(secoh_version()));
  app.require_subcommand(1);

  Common common;
  std::uint64_t ceiling = 0;
  std::uint32_t samples = 0;
  std::uint64_t seed = 20240611;
  int degree = -1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", common.spec_path, "Problem document (JSON)")->required();
    sub->add_option("--out,-o", common.out_path, "Write the result document here instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "Cohomology groups for every listed degree");
  add_common(compute);
  compute->add_option("--ceiling", ceiling, "Largest ambient rank to assemble (default 1000000)");

  auto* verify = app.add_subcommand("verify", "Check the complex identities at random points");
  add_common(verify);
  verify->add_option("--samples", samples, "Random points per identity (default 1000)");
  verify->add_option("--seed", seed, "Random seed");

  auto* oracle = app.add_subcommand("oracle", "Compare against exhaustive enumeration");
  add_common(oracle);

  auto* faces = app.add_subcommand("faces", "Dump the face maps of one degree");
  add_common(faces);
  faces->add_option("--degree", degree, "Degree n of the faces d_n^k")->required();

  auto* run = app.add_subcommand("run", "Run the mode named in the document");
  add_common(run);
  run->add_option("--ceiling", ceiling, "Largest ambient rank to assemble (default 1000000)");

  CLI11_PARSE(app, argc, argv);

  if (*compute) {
    return execute(common, [&](secoh_problem* p, char** out) { return secoh_compute(p, ceiling, out); });
  }
  if (*verify) {
    return execute(common, [&](secoh_problem* p, char** out) { return secoh_verify(p, samples, seed, out); });
  }
  if (*oracle) {
    return execute(common, [&](secoh_problem* p, char** out) { return secoh_oracle(p, out); });
  }
  if (*faces) {
    return execute(common, [&](secoh_problem* p, char** out) { return secoh_faces(p, degree, out); });
  }
  return execute(common, [&](secoh_problem* p, char** out) { return secoh_run(p, ceiling, out); });
}
