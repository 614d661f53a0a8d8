#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace secoh {

// Malformed input: group/action axioms, cocycle condition, schema violations.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An assembled operator would exceed the configured ambient-rank ceiling.
class ScaleError : public std::runtime_error {
 public:
  ScaleError(const std::string& what, std::uint64_t required, std::uint64_t ceiling)
      : std::runtime_error(what), required_(required), ceiling_(ceiling) {}
  // Saturates at UINT64_MAX.
  std::uint64_t required_rank() const noexcept { return required_; }
  std::uint64_t ceiling() const noexcept { return ceiling_; }

 private:
  std::uint64_t required_;
  std::uint64_t ceiling_;
};

// Inputs to the homology engine do not form a complex (a bug upstream).
class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace secoh
