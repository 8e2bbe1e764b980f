#include "fockcryst/chambers.hpp"

#include <algorithm>

#include "fockcryst/errors.hpp"

namespace fockcryst {

Rat wall_position(const Wall& w, const FockParam& p) {
  if (!p.rational_kappa() || p.zero_kappa())
    throw ComputationError("wall positions need a nonzero rational kappa");
  Rat offset = Rat(w.i - w.j) / (p.kappa() * Rat(p.ell()));
  return (p.charge(w.i) - p.charge(w.j)) - (Rat(w.m) + offset);
}

std::vector<Wall> essential_walls(const FockParam& p, long n) {
  if (!p.rational_kappa() || p.zero_kappa())
    throw ComputationError("essential walls need a nonzero rational kappa");
  std::vector<Wall> out;
  const Rat mod = p.modulus();
  for (int i = 0; i < p.ell(); ++i)
    for (int j = i + 1; j < p.ell(); ++j)
      for (long m = -(n - 1); m <= n - 1; ++m)
        if (is_multiple_of(p.charge(i) - p.charge(j) - Rat(m), mod))
          out.push_back(Wall{i, j, m, n});
  return out;
}

bool is_asymptotic(const FockParam& p, int j, long n) {
  if (j < 0 || j >= p.ell()) throw ComputationError("component index out of range");
  for (int i = 0; i < p.ell(); ++i) {
    if (i == j) continue;
    if (!(p.charge(j) < p.charge(i) - Rat(n))) return false;
  }
  return true;
}

PlannedPath plan_path(const FockParam& p, int j, long n) {
  if (!p.rational_kappa() || p.zero_kappa())
    throw ComputationError("path planning needs a nonzero rational kappa");
  const long e = p.denominator_e();
  const auto walls = essential_walls(p, n);
  std::vector<CrossingStep> path;
  std::vector<Rat> cur = p.charges();

  auto position_at = [&](const Wall& w, const std::vector<Rat>& s) {
    return wall_position(w, p.with_charges(s));
  };

  while (!is_asymptotic(p.with_charges(cur), j, n)) {
    std::vector<Rat> next = cur;
    next[static_cast<size_t>(j)] -= Rat(e);

    struct Hit {
      Rat t;
      Wall wall;
      int direction;
      int before;
    };
    std::vector<Hit> hits;
    for (const auto& w : walls) {
      if (w.i != j && w.j != j) continue;
      Rat p0 = position_at(w, cur);
      Rat p1 = position_at(w, next);
      if (p0.is_zero() || p1.is_zero())
        throw InternalError("lattice parameter lies on wall (" + std::to_string(w.i + 1) + "," +
                            std::to_string(w.j + 1) + "," + std::to_string(w.m) + ")");
      if (p0.sign() == p1.sign()) continue;  // no sign change: wall not met
      // position is affine in t, so the crossing parameter is p0/(p0 - p1)
      Rat t = p0 / (p0 - p1);
      hits.push_back(Hit{t, w, (w.j == j) ? +1 : -1, p0.sign()});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
    for (size_t k = 0; k + 1 < hits.size(); ++k)
      if (hits[k].t == hits[k + 1].t)
        throw ComputationError("two essential walls met at the same segment parameter t=" +
                               hits[k].t.str());
    for (const auto& h : hits) {
      CrossingStep step;
      step.wall = h.wall;
      step.direction = h.direction;
      step.position_before = h.before;
      step.t_cross = h.t;
      step.source_s = cur;
      step.target_s = next;
      path.push_back(std::move(step));
    }
    cur = std::move(next);
  }
  return PlannedPath{std::move(path), std::move(cur)};
}

std::vector<CrossingStep> reverse_path(const std::vector<CrossingStep>& path) {
  std::vector<CrossingStep> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    CrossingStep step = *it;
    std::swap(step.source_s, step.target_s);
    step.direction = -step.direction;
    step.position_before = -step.position_before;
    step.t_cross = Rat(1) - step.t_cross;
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace fockcryst
