#include "fockcryst/cyclotomic.hpp"

#include <algorithm>

#include "fockcryst/errors.hpp"

namespace fockcryst {

namespace {

using Poly = std::vector<Rat>;  // ascending powers

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division of polynomials over Q; remainder must vanish.
Poly exact_div(Poly num, const Poly& den) {
  Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rat lead = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (size_t k = 0; k < den.size(); ++k)
      num[shift + k] -= lead * den[k];
    trim(num);
  }
  if (!num.empty()) throw InternalError("cyclotomic polynomial division left a remainder");
  return q;
}

// Phi_n via (T^n - 1) / prod_{d | n, d < n} Phi_d.
Poly cyclotomic_poly(long n) {
  Poly num(static_cast<size_t>(n) + 1, Rat(0));
  num[0] = Rat(-1);
  num[static_cast<size_t>(n)] = Rat(1);
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = exact_div(std::move(num), cyclotomic_poly(d));
  return num;
}

}  // namespace

CycloField::CycloField(long n) : n_(n) {
  if (n < 1) throw ComputationError("cyclotomic order must be >= 1");
  phi_ = cyclotomic_poly(n);
}

Cyclo::Cyclo(const CycloField& f, Rat rational_value) : field_(&f), c_{std::move(rational_value)} {
  reduce();
}

Cyclo::Cyclo(const CycloField& f, std::vector<Rat> coeffs) : field_(&f), c_(std::move(coeffs)) {
  reduce();
}

Cyclo Cyclo::zeta_power(const CycloField& f, long k) {
  long n = f.order();
  long kk = ((k % n) + n) % n;
  std::vector<Rat> c(static_cast<size_t>(kk) + 1, Rat(0));
  c[static_cast<size_t>(kk)] = Rat(1);
  return Cyclo(f, std::move(c));
}

void Cyclo::reduce() {
  const auto& phi = field_->phi_;
  const size_t deg = phi.size() - 1;
  while (c_.size() > deg) {
    Rat lead = c_.back() / phi.back();
    size_t shift = c_.size() - phi.size();
    for (size_t k = 0; k < phi.size(); ++k)
      c_[shift + k] -= lead * phi[k];
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Cyclo::is_zero() const { return c_.empty(); }

bool Cyclo::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

Rat Cyclo::rational_part() const {
  if (!is_rational()) throw ComputationError("cyclotomic value is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.field_ != b.field_ && a.field_->order() != b.field_->order())
    throw ComputationError("cyclotomic arithmetic across different fields");
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Cyclo(*a.field_, std::move(c));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator-(const Cyclo& a) {
  std::vector<Rat> c = a.c_;
  for (auto& v : c) v = -v;
  return Cyclo(*a.field_, std::move(c));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.field_ != b.field_ && a.field_->order() != b.field_->order())
    throw ComputationError("cyclotomic arithmetic across different fields");
  if (a.c_.empty() || b.c_.empty()) return Cyclo(*a.field_, Rat(0));
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Cyclo(*a.field_, std::move(c));
}

bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }

std::string Cyclo::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k >= 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace fockcryst
