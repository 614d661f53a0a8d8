#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "secoh/complexes.hpp"
#include "secoh/group.hpp"

namespace secoh {

enum class Mode { cohomology, verify, oracle, faces };

// A validated problem document.
struct ProblemSpec {
  Variant variant = Variant::abelian;
  std::string name;
  GAction action_a;
  GAction action_b;
  Cocycle3 kappa;
  std::optional<Cochain2> u;
  std::vector<int> degrees;
  Mode mode = Mode::cohomology;
  std::string input_hash;  // FNV-1a 64 of the canonical document, hex

  ComplexData complex_data() const;
};

// Throws ValidationError: syntax errors carry line and column, semantic
// errors name the offending field and witnesses.
ProblemSpec parse_problem(std::string_view text);

struct RunOptions {
  std::uint64_t ceiling = kDefaultCeiling;
  std::uint32_t samples = 1000;
  std::uint64_t seed = 20240611;
  int faces_degree = -1;  // faces mode: -1 uses the first listed degree
};

// Result documents. Integers beyond 2^53 are emitted as strings.
nlohmann::json run_cohomology(const ProblemSpec& spec, const RunOptions& opts);
nlohmann::json run_verify(const ProblemSpec& spec, const RunOptions& opts);
nlohmann::json run_oracle(const ProblemSpec& spec, const RunOptions& opts);
nlohmann::json run_faces(const ProblemSpec& spec, const RunOptions& opts);
// Dispatches on spec.mode.
nlohmann::json run(const ProblemSpec& spec, const RunOptions& opts);

// True when every entry of doc["checks"] passed.
bool all_checks_pass(const nlohmann::json& doc);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace secoh
