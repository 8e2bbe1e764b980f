#pragma once

#include <vector>

#include "fockcryst/rat.hpp"

namespace fockcryst {

// Exact arithmetic in Q(zeta_n), elements represented as polynomials in zeta
// reduced modulo the n-th cyclotomic polynomial.
class CycloField {
 public:
  explicit CycloField(long n);
  long order() const { return n_; }
  long degree() const { return static_cast<long>(phi_.size()) - 1; }
  const std::vector<Rat>& minimal_polynomial() const { return phi_; }

 private:
  long n_;
  std::vector<Rat> phi_;  // monic, ascending powers
  friend class Cyclo;
};

class Cyclo {
 public:
  Cyclo(const CycloField& f, Rat rational_value);
  static Cyclo zeta_power(const CycloField& f, long k);

  const CycloField& field() const { return *field_; }
  bool is_zero() const;
  bool is_rational() const;  // lives in the degree-0 part
  Rat rational_part() const; // requires is_rational()

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a);
  friend bool operator==(const Cyclo& a, const Cyclo& b);

  std::string str() const;

 private:
  Cyclo(const CycloField& f, std::vector<Rat> coeffs);
  void reduce();
  const CycloField* field_;
  std::vector<Rat> c_;  // ascending powers of zeta, size <= degree
};

}  // namespace fockcryst
