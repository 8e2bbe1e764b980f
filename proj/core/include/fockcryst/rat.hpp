#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fockcryst {

// Exact rational number in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq_class; the whole engine computes with
// these, floating point never enters.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, integers embed
  Rat(long n, long d);
  Rat(const mpz_class& n, const mpz_class& d);

  // Accepts "p", "-p", "p/q" with optional leading '-' on p; q > 0.
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const;
  mpz_class floor() const;

  std::string str() const;  // "p/q", or "p" when integral

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// r reduced modulo m into [0, m); requires m > 0.
Rat mod_reduce(const Rat& r, const Rat& m);

// Whether r is an integer multiple of m; requires m > 0.
bool is_multiple_of(const Rat& r, const Rat& m);

}  // namespace fockcryst
