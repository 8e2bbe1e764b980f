#pragma once

#include <string>
#include <vector>

#include "fockcryst/supports.hpp"

namespace fockcryst {

struct VerifyReport {
  std::string suite;
  std::string bounds;
  long checks = 0;
  std::vector<std::string> violations;  // unexpected diffs / broken axioms
  std::vector<std::string> notes;       // expected, allowlisted diffs etc.
  bool ok() const { return violations.empty(); }
  std::string render() const;
};

// Partial-inverse axioms, depth path-independence (every maximal annihilation
// chain has the same length) and block compatibility, exhaustively over all
// multipartitions of size <= n_max.
VerifyReport verify_crystal_axioms(const FockParam& p, long n_max);

// #{p=0, q=q0 at n} = P(q0) * #{p=q=0 at n - e*q0} for all n <= n_max.
VerifyReport verify_counting(const FockParam& p, long n_max);

// One-row reduction: pipeline (p, q) against (|rem|, |quot|) of division by e.
VerifyReport verify_wilcox(long e, long n_max);

// Recompute every datum of the hand-computed ell=2, e=2 four-chamber example
// (crystal arrows, support lists, wall-crossing tables) and diff against the
// transcribed values. Known transcription errors live in a frozen allowlist;
// the report fails on any diff outside it AND on any allowlisted diff that
// fails to show up.
VerifyReport example_report(int chamber);

struct AllowlistEntry {
  int chamber;
  std::string id;           // stable datum id, e.g. "arrow f1(-|2)"
  std::string claimed;      // transcribed value
  std::string computed;     // engine value
  std::string justification;
};
const std::vector<AllowlistEntry>& example_allowlist();

// Flipping any single signature-rule convention (content sign, listing order,
// cancellation direction) must break at least one calibration arrow.
VerifyReport verify_mutation_selftest();

// Reference chamber parameters of the calibration example, 1-based.
FockParam example_chamber_param(int chamber);

}  // namespace fockcryst
