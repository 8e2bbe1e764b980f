#include "fockcryst/supports.hpp"

#include <algorithm>

#include "fockcryst/cyclotomic.hpp"
#include "fockcryst/errors.hpp"

namespace fockcryst {

namespace {

std::string class_str(const std::vector<int>& cls) {
  std::string out = "{";
  for (size_t k = 0; k < cls.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(cls[k] + 1);
  }
  return out + "}";
}

}  // namespace

std::vector<Rat> rank1_lowering_scalars(const FockParam& p, int comp, long count) {
  if (!p.zero_kappa())
    throw ComputationError("rank-one scalars are defined on the kappa = 0 branch");
  if (comp < 0 || comp >= p.ell()) throw ComputationError("component index out of range");
  const long ell = p.ell();
  CycloField field(ell);
  auto zeta = [&](long k) { return Cyclo::zeta_power(field, k); };

  // h_j for j = 0..ell-1 with h_0 = h_ell; charges are the h-values here.
  auto h = [&](long j) -> const Rat& {
    long jj = ((j % ell) + ell) % ell;
    return p.charge(static_cast<int>(jj == 0 ? ell - 1 : jj - 1));
  };

  // Reflection coefficients from the h-values: the reflection eta^k enters
  // the commutation relation with weight 2*c_k.
  std::vector<Cyclo> c;  // index k-1 holds c_k, k = 1..ell-1
  for (long k = 1; k < ell; ++k) {
    Cyclo ck(field, Rat(0));
    for (long j = 1; j < ell; ++j) {
      Cyclo w = (Cyclo(field, Rat(1)) - zeta(k * j)) * Cyclo(field, Rat(1, 2));
      ck = ck + w * Cyclo(field, h(j) - h(j - 1));
    }
    c.push_back(ck);
  }

  // Degree-by-degree action of the lowering generator on x^m tensor chi_i:
  // a_m = a_{m-1} + 1 - 2 * sum_k c_k zeta^{k(m-1+i)}, character exponent
  // i = comp + 1. Every a_m collapses to a rational.
  const long i = comp + 1;
  std::vector<Rat> out;
  Cyclo a(field, Rat(0));
  for (long m = 1; m <= count; ++m) {
    Cyclo step(field, Rat(1));
    for (long k = 1; k < ell; ++k)
      step = step - Cyclo(field, Rat(2)) * c[static_cast<size_t>(k - 1)] * zeta(k * (m - 1 + i));
    a = a + step;
    if (!a.is_rational())
      throw InternalError("rank-one lowering scalar a_" + std::to_string(m) +
                          " is not rational: " + a.str());
    out.push_back(a.rational_part());
  }
  return out;
}

std::vector<int> rank1_full_support_components(const FockParam& p) {
  const long ell = p.ell();
  std::vector<int> full;
  for (int comp = 0; comp < ell; ++comp) {
    auto a = rank1_lowering_scalars(p, comp, 3 * ell);
    // Periodicity certificate: a_{m+ell} - a_m = ell on a 2*ell window.
    for (long m = 1; m + ell <= 3 * ell; ++m)
      if (a[static_cast<size_t>(m + ell - 1)] - a[static_cast<size_t>(m - 1)] != Rat(ell))
        throw InternalError("rank-one scalars are not ell-periodic at m=" + std::to_string(m));
    // a_m = m + b_r for m congruent to r mod ell, so a vanishing scalar means
    // -b_r is a positive integer congruent to r.
    bool has_zero = false;
    for (long r = 1; r <= ell; ++r) {
      Rat candidate = Rat(r) - a[static_cast<size_t>(r - 1)];  // -b_r
      if (!candidate.is_integer() || candidate.sign() <= 0) continue;
      mpz_class diff = candidate.num() - r;
      mpz_class rem, mod(ell);
      mpz_fdiv_r(rem.get_mpz_t(), diff.get_mpz_t(), mod.get_mpz_t());
      if (rem == 0) has_zero = true;
    }
    if (!has_zero) full.push_back(comp);
  }
  return full;
}

long kappa_zero_q(const Multipartition& lam, const FockParam& p) {
  if (!p.zero_kappa()) throw ComputationError("kappa_zero_q needs kappa = 0");
  long q = 0;
  for (int comp : rank1_full_support_components(p)) q += lam.comp(comp).boxes();
  return q;
}

SupportResult support(const Multipartition& lam, const FockParam& p) {
  if (lam.level() != p.ell())
    throw ComputationError("multipartition level does not match parameter");
  SupportResult res;
  res.n = lam.boxes();

  if (p.zero_kappa()) {
    auto full = rank1_full_support_components(p);
    std::string comps = "{";
    for (size_t k = 0; k < full.size(); ++k) {
      if (k) comps += ",";
      comps += std::to_string(full[k] + 1);
    }
    comps += "}";
    res.p = 0;
    res.q = kappa_zero_q(lam, p);
    res.trace.push_back("kappa=0: p=0 by convention; full-support components " + comps +
                        " from rank-one lowering scalars");
    res.finite_dim = (res.p == 0 && res.q == 0);
    return res;
  }

  if (!p.rational_kappa()) {
    res.p = depth(lam, p);
    res.q = 0;
    res.trace.push_back("kappa irrational: p = sl_inf depth, q = 0");
    res.finite_dim = (res.p == 0 && res.q == 0);
    return res;
  }

  if (p.kappa().sign() > 0) {
    SupportResult inner = support(lam.transpose(), p.flipped());
    res.p = inner.p;
    res.q = inner.q;
    res.trace.push_back("kappa>0: flipped to (-kappa, -s) with transposed label " +
                        lam.transpose().str());
    res.trace.insert(res.trace.end(), inner.trace.begin(), inner.trace.end());
    res.finite_dim = (res.p == 0 && res.q == 0);
    return res;
  }

  // kappa < 0 rational: decompose into component classes, each contributing
  // additively.
  const long e = p.denominator_e();
  auto classes = component_classes(p);
  if (classes.size() > 1) {
    std::string all;
    for (const auto& cls : classes) all += class_str(cls);
    res.trace.push_back("split into component classes " + all);
  }
  for (const auto& cls : classes) {
    auto [sub, sub_lam] = restrict_to_class(p, lam, cls);
    Rat lowest = sub.charge(0);
    for (int i = 1; i < sub.ell(); ++i)
      if (sub.charge(i) < lowest) lowest = sub.charge(i);
    Rat shift = -lowest;
    FockParam norm = sub.shifted(shift);
    if (!shift.is_zero())
      res.trace.push_back("class " + class_str(cls) + ": charges shifted by " + shift.str());

    long d = depth(sub_lam, norm);
    long p_class = d;
    if (e == 1) {
      p_class = 0;
      res.trace.push_back("class " + class_str(cls) + ": e=1 convention p:=0 (crystal depth " +
                          std::to_string(d) + ")");
      if (sub.ell() > 1)
        res.trace.push_back("class " + class_str(cls) +
                            ": convention-extension (e=1 with more than one component)");
    }
    std::vector<std::string> qtrace;
    long q_class = q_depth(sub_lam, norm, &qtrace);
    res.p += p_class;
    res.q += q_class;
    res.trace.push_back("class " + class_str(cls) + ": p=" + std::to_string(p_class) +
                        " q=" + std::to_string(q_class));
    for (auto& t : qtrace) res.trace.push_back("class " + class_str(cls) + ": " + t);
  }
  res.finite_dim = (res.p == 0 && res.q == 0);
  return res;
}

std::vector<Multipartition> finite_dims(const FockParam& p, long n) {
  std::vector<Multipartition> out;
  for (const auto& lam : multipartitions_of(p.ell(), n))
    if (support(lam, p).finite_dim) out.push_back(lam);
  return out;
}

std::vector<TableRow> support_table(const FockParam& p, long n_max) {
  std::vector<TableRow> rows;
  for (const auto& lam : multipartitions_up_to(p.ell(), n_max))
    rows.push_back(TableRow{lam, support(lam, p)});
  return rows;
}

}  // namespace fockcryst
