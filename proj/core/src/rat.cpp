#include "fockcryst/rat.hpp"

#include <cctype>
#include <ostream>

#include "fockcryst/errors.hpp"

namespace fockcryst {

Rat::Rat(long n, long d) : v_(n, d) {
  if (d == 0) throw ComputationError("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw ComputationError("rational with zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Rat {
    throw ParseError("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) return fail("empty");
  size_t slash = text.find('/');
  auto check_int = [&](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    size_t k = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!check_int(text, true)) return fail("not an integer");
    mpz_class num{std::string(text)};
    return Rat(num, mpz_class(1));
  }
  std::string_view n = text.substr(0, slash);
  std::string_view d = text.substr(slash + 1);
  if (!check_int(n, true)) return fail("bad numerator");
  if (!check_int(d, false)) return fail("bad denominator");
  mpz_class num{std::string(n)};
  mpz_class den{std::string(d)};
  if (den == 0) return fail("zero denominator");
  return Rat(num, den);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw ComputationError("rational division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat mod_reduce(const Rat& r, const Rat& m) {
  if (m.sign() <= 0) throw ComputationError("mod_reduce needs a positive modulus");
  Rat q = r / m;
  return r - Rat(q.floor(), mpz_class(1)) * m;
}

bool is_multiple_of(const Rat& r, const Rat& m) {
  if (m.sign() <= 0) throw ComputationError("is_multiple_of needs a positive modulus");
  return (r / m).is_integer();
}

}  // namespace fockcryst
