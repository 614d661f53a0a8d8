#pragma once

// Exact integers with a machine-word fast path.
//
// Values that fit in int64_t are stored inline; any operation whose result
// would overflow is redone in GMP and the value is kept as an mpz until it
// fits again. Arithmetic never overflows.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace secoh {

class Integer {
 public:
  Integer() noexcept = default;

  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}

  template <std::unsigned_integral T>
  Integer(T v) {
    if (v <= static_cast<std::uint64_t>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<mpz_class>();
      mpz_set_ui(big_->get_mpz_t(), static_cast<unsigned long>(v));
    }
  }

  explicit Integer(const mpz_class& v);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  // Parses an optionally signed decimal string. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  bool fits_int64() const noexcept { return !big_; }
  // Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  mpz_class to_mpz() const;
  std::string str() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  Integer operator-() const;

  // Truncating division and remainder (C++ semantics). Throws on division by zero.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  // a -= q * b, the inner kernel of every elimination loop.
  void submul(const Integer& q, const Integer& b);
  // a += q * b
  void addmul(const Integer& q, const Integer& b);

  std::size_t hash() const noexcept;

 private:
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;  // engaged iff the value does not fit in int64_t
};

Integer abs(const Integer& a);
// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Remainder in [0, |m|) for m != 0.
Integer mod_floor(const Integer& a, const Integer& m);
// Floor division.
Integer floor_div(const Integer& a, const Integer& b);
// True when b is a multiple of a (0 divides only 0).
bool divides(const Integer& a, const Integer& b);

struct Xgcd {
  Integer g;  // >= 0
  Integer s;
  Integer t;  // g == s*a + t*b
};
Xgcd xgcd(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace secoh

template <>
struct std::hash<secoh::Integer> {
  std::size_t operator()(const secoh::Integer& v) const noexcept { return v.hash(); }
};
