#include "secoh/secoh.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "secoh/errors.hpp"
#include "secoh/problem.hpp"

struct secoh_problem {
  secoh::ProblemSpec spec;
};

namespace {

thread_local std::string g_last_error;
thread_local std::uint64_t g_required_rank = 0;

secoh_status set_error(secoh_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
secoh_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const secoh::ScaleError& e) {
    g_required_rank = e.required_rank();
    return set_error(SECOH_ERR_SCALE, e.what());
  } catch (const secoh::ValidationError& e) {
    return set_error(SECOH_ERR_VALIDATION, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(SECOH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(SECOH_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SECOH_ERR_INTERNAL, "unknown failure");
  }
}

secoh_status emit(const nlohmann::json& doc, char** out_json) {
  *out_json = copy_out(doc.dump(2));
  return secoh::all_checks_pass(doc) ? SECOH_OK : set_error(SECOH_ERR_VERIFY, "identity check failed");
}

template <class Run>
secoh_status run_with(const secoh_problem* problem, char** out_json, Run&& run) {
  if (!problem || !out_json) return set_error(SECOH_ERR_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] { return emit(run(problem->spec), out_json); });
}

}  // namespace

extern "C" {

const char* secoh_version(void) { return "0.1.0"; }

const char* secoh_last_error(void) { return g_last_error.c_str(); }

uint64_t secoh_last_required_rank(void) { return g_required_rank; }

secoh_status secoh_problem_parse(const char* text, size_t length, secoh_problem** out) {
  if (!text || !out) return set_error(SECOH_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<secoh_problem>();
    p->spec = secoh::parse_problem(std::string_view(text, length));
    *out = p.release();
    return SECOH_OK;
  });
}

void secoh_problem_free(secoh_problem* problem) { delete problem; }

const char* secoh_problem_hash(const secoh_problem* problem) {
  return problem ? problem->spec.input_hash.c_str() : "";
}

secoh_status secoh_run(const secoh_problem* problem, uint64_t ceiling, char** out_json) {
  return run_with(problem, out_json, [&](const secoh::ProblemSpec& spec) {
    secoh::RunOptions opts;
    if (ceiling) opts.ceiling = ceiling;
    return secoh::run(spec, opts);
  });
}

secoh_status secoh_compute(const secoh_problem* problem, uint64_t ceiling, char** out_json) {
  return run_with(problem, out_json, [&](const secoh::ProblemSpec& spec) {
    secoh::RunOptions opts;
    if (ceiling) opts.ceiling = ceiling;
    return secoh::run_cohomology(spec, opts);
  });
}

secoh_status secoh_verify(const secoh_problem* problem, uint32_t samples, uint64_t seed, char** out_json) {
  return run_with(problem, out_json, [&](const secoh::ProblemSpec& spec) {
    secoh::RunOptions opts;
    if (samples) opts.samples = samples;
    opts.seed = seed;
    return secoh::run_verify(spec, opts);
  });
}

secoh_status secoh_oracle(const secoh_problem* problem, char** out_json) {
  return run_with(problem, out_json,
                  [&](const secoh::ProblemSpec& spec) { return secoh::run_oracle(spec, secoh::RunOptions{}); });
}

secoh_status secoh_faces(const secoh_problem* problem, int degree, char** out_json) {
  return run_with(problem, out_json, [&](const secoh::ProblemSpec& spec) {
    secoh::RunOptions opts;
    opts.faces_degree = degree;
    return secoh::run_faces(spec, opts);
  });
}

void secoh_string_free(char* s) { std::free(s); }

}  // extern "C"
