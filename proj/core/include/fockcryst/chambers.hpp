#pragma once

#include <vector>

#include "fockcryst/fock.hpp"

namespace fockcryst {

// Essential hyperplane h_i - h_j = kappa*m between components i < j (0-based
// here, 1-based in all output). In charge coordinates the wall sits at
// s_i - s_j = m + (i - j)/(kappa*ell); the residue condition
// s_i - s_j - m in kappa^{-1}Z selects the lattice cosets that see it.
struct Wall {
  int i = 0;
  int j = 0;
  long m = 0;
  long n_scope = 0;  // the size bound the wall was enumerated under; |m| < n_scope
};
inline bool operator==(const Wall& a, const Wall& b) {
  return a.i == b.i && a.j == b.j && a.m == b.m;
}

// Signed distance (s_i - s_j) - (m + (i - j)/(kappa*ell)); zero on the wall.
Rat wall_position(const Wall& w, const FockParam& p);

// All walls (i, j, m), i < j, |m| < n, whose residue condition holds at p.
std::vector<Wall> essential_walls(const FockParam& p, long n);

// s_j < s_i - n for all i != j (vacuous for ell = 1); 0-based j.
bool is_asymptotic(const FockParam& p, int j, long n);

// One wall met while moving charges along a straight lattice segment.
// source_s/target_s are the segment's lattice endpoints; when a segment meets
// several walls, its steps share endpoints and are ordered by the crossing
// parameter t in (0,1). position_before is the sign of wall_position at the
// source side of this wall; direction is the sign of the change of s_i - s_j.
struct CrossingStep {
  Wall wall;
  int direction = 0;
  int position_before = 0;
  Rat t_cross;
  std::vector<Rat> source_s;
  std::vector<Rat> target_s;
};

// A planned walk: the crossing steps met on the way plus the final charges
// (moves that cross no wall leave no step but still displace the charges).
struct PlannedPath {
  std::vector<CrossingStep> steps;
  std::vector<Rat> target_s;
};

// Plan lattice moves s_j -= e until is_asymptotic(p', j, n), decomposing each
// move into crossing steps. Fails if two walls are met at the same t.
PlannedPath plan_path(const FockParam& p, int j, long n);

// The same walk backwards: order reversed, endpoints swapped, signs flipped.
std::vector<CrossingStep> reverse_path(const std::vector<CrossingStep>& path);

}  // namespace fockcryst
