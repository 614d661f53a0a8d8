#include "secoh/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace secoh {

namespace {

mpz_class as_mpz(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  mpz_class v;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer literal: " + s);
  return Integer(v);
}

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : as_mpz(small_); }

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() + o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() - o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() * o.to_mpz());
  normalize();
  return *this;
}

void Integer::submul(const Integer& q, const Integer& b) {
  if (!big_ && !q.big_ && !b.big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(q.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class acc = to_mpz();
  mpz_class qq = q.to_mpz(), bb = b.to_mpz();
  mpz_submul(acc.get_mpz_t(), qq.get_mpz_t(), bb.get_mpz_t());
  big_ = std::make_unique<mpz_class>(std::move(acc));
  normalize();
}

void Integer::addmul(const Integer& q, const Integer& b) {
  if (!big_ && !q.big_ && !b.big_) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(q.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
  }
  mpz_class acc = to_mpz();
  mpz_class qq = q.to_mpz(), bb = b.to_mpz();
  mpz_addmul(acc.get_mpz_t(), qq.get_mpz_t(), bb.get_mpz_t());
  big_ = std::make_unique<mpz_class>(std::move(acc));
  normalize();
}

Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) return Integer(a.small_ / b.small_);
  mpz_class q;
  mpz_class aa = a.to_mpz(), bb = b.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_class aa = a.to_mpz(), bb = b.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  return Integer(r);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_) == 0;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c;
  if (a.big_ && b.big_) {
    c = cmp(*a.big_, *b.big_);
  } else if (a.big_) {
    c = mpz_cmp_si(a.big_->get_mpz_t(), static_cast<long>(b.small_));
  } else {
    c = -mpz_cmp_si(b.big_->get_mpz_t(), static_cast<long>(a.small_));
  }
  return c <=> 0;
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    std::int64_t x = a.to_int64(), y = b.to_int64();
    if (x != INT64_MIN && y != INT64_MIN) {
      x = x < 0 ? -x : x;
      y = y < 0 ? -y : y;
      while (y != 0) {
        std::int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  mpz_class g;
  mpz_class aa = a.to_mpz(), bb = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (!(q * b == a) && ((a.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

bool divides(const Integer& a, const Integer& b) {
  if (a.is_zero()) return b.is_zero();
  return (b % a).is_zero();
}

Xgcd xgcd(const Integer& a, const Integer& b) {
  // Iterative extended Euclid on exact integers.
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r;
    tmp.submul(q, r);
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s;
    tmp.submul(q, s);
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t;
    tmp.submul(q, t);
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace secoh
