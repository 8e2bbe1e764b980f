#pragma once

#include <string>
#include <vector>

#include "fockcryst/heisenberg.hpp"

namespace fockcryst {

struct SupportResult {
  long p = 0;
  long q = 0;
  long n = 0;
  bool finite_dim = false;            // p == q == 0
  std::vector<std::string> trace;     // ordered pipeline decisions
  long dim() const { return p + q; }
};

// Full support computation. Dispatch: kappa = 0 uses the rank-one criterion;
// formal irrational kappa takes the sl_inf depth with q = 0; rational
// kappa > 0 flips to (-kappa, -s, lambda^t); rational kappa < 0 splits into
// component classes, normalizes each class's charges to minimum 0, and sums
// depths and q-depths over the classes. For e = 1 the Kac-Moody depth is
// overridden to p = 0 (both values appear in the trace).
SupportResult support(const Multipartition& lam, const FockParam& p);

// Lowering scalars of the rank-one algebra: a_m is the scalar by which the
// lowering generator maps degree m of the standard module of component
// `comp` to degree m-1. Computed degree-by-degree from the defining
// commutation relation in exact cyclotomic arithmetic (every a_m comes out
// rational); at kappa = 0 the charges are read directly as the rank-one
// h-values h_1..h_ell. c = 0 (all h equal) gives a_m = m.
std::vector<Rat> rank1_lowering_scalars(const FockParam& p, int comp, long count);

// Components whose rank-one standard module stays simple forever
// (a_m != 0 for all m >= 1), decided exactly via the ell-periodicity of
// a_m - m certified on a 2*ell window.
std::vector<int> rank1_full_support_components(const FockParam& p);

// q at kappa = 0: total size over the components in rank1_full_support_components.
long kappa_zero_q(const Multipartition& lam, const FockParam& p);

// All of P_ell(n) with support point {0}.
std::vector<Multipartition> finite_dims(const FockParam& p, long n);

struct TableRow {
  Multipartition lam;
  SupportResult res;
};

// Rows for all multipartitions of size <= n_max, in enumeration order.
std::vector<TableRow> support_table(const FockParam& p, long n_max);

}  // namespace fockcryst
