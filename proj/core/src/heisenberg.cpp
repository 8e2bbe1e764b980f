#include "fockcryst/heisenberg.hpp"

#include "fockcryst/errors.hpp"

namespace fockcryst {

namespace {

void require_negative_rational(const FockParam& p, const char* who) {
  if (!p.rational_kappa() || p.zero_kappa() || p.kappa().sign() >= 0)
    throw ComputationError(std::string(who) + " needs rational kappa < 0");
}

void require_single_class(const FockParam& p, const char* who) {
  if (component_classes(p).size() != 1)
    throw ComputationError(std::string(who) + " needs a single component class");
}

Partition exact_quotient(const Partition& part, long e, const char* who) {
  auto [quot, rem] = div_rem_e(part, e);
  if (!rem.empty())
    throw ComputationError(std::string(who) + ": component " + part.str() +
                           " is not divisible by " + std::to_string(e));
  return quot;
}

std::string wall_str(const Wall& w) {
  return "(" + std::to_string(w.i + 1) + "," + std::to_string(w.j + 1) + "," +
         std::to_string(w.m) + ")";
}

}  // namespace

int asymptotic_target(const FockParam& p) {
  int best = 0;
  for (int i = 1; i < p.ell(); ++i)
    if (p.charge(i) < p.charge(best)) best = i;
  return best;
}

std::optional<Multipartition> asym_e_inf(const Multipartition& lam, long i, const FockParam& p,
                                         int j) {
  require_negative_rational(p, "asym_e_inf");
  if (!is_asymptotic(p, j, lam.boxes()))
    throw ComputationError("asym_e_inf: parameter is not asymptotic for this size");
  if (!is_singular(lam, p)) throw ComputationError("asym_e_inf: input is not singular");
  const long e = p.denominator_e();
  Partition quot = exact_quotient(lam.comp(j), e, "asym_e_inf");
  for (const auto& b : removable_boxes(quot))
    if (unshifted_content(b) == i)
      return lam.with_comp(j, scale(remove_box(quot, b.col, b.row), e));
  return std::nullopt;
}

std::optional<Multipartition> asym_f_inf(const Multipartition& lam, long i, const FockParam& p,
                                         int j) {
  require_negative_rational(p, "asym_f_inf");
  if (!is_asymptotic(p, j, lam.boxes() + p.denominator_e()))
    throw ComputationError("asym_f_inf: parameter is not asymptotic for the grown size");
  if (!is_singular(lam, p)) throw ComputationError("asym_f_inf: input is not singular");
  const long e = p.denominator_e();
  Partition quot = exact_quotient(lam.comp(j), e, "asym_f_inf");
  for (const auto& b : addable_boxes(quot))
    if (unshifted_content(b) == i)
      return lam.with_comp(j, scale(add_box(quot, b.col, b.row), e));
  return std::nullopt;
}

Multipartition asym_a_mu(const Multipartition& lam, const Partition& mu, const FockParam& p,
                         int j) {
  require_negative_rational(p, "asym_a_mu");
  const long e = p.denominator_e();
  if (!lam.comp(j).empty())
    throw ComputationError("asym_a_mu: distinguished component must be empty");
  if (!is_singular(lam, p)) throw ComputationError("asym_a_mu: input is not singular");
  if (!is_asymptotic(p, j, lam.boxes() + e * mu.boxes()))
    throw ComputationError("asym_a_mu: parameter is not asymptotic for the grown size");
  return lam.with_comp(j, scale(mu, e));
}

namespace {

std::optional<Multipartition> general_op(const Multipartition& lam, long i, const FockParam& p,
                                         bool creation) {
  require_negative_rational(p, "sl_inf operator");
  require_single_class(p, "sl_inf operator");
  const int j = asymptotic_target(p);
  const long grown = lam.boxes() + (creation ? p.denominator_e() : 0);
  PlannedPath path = plan_path(p, j, grown);
  FockParam pt = p.with_charges(path.target_s);
  Multipartition moved = transport(lam, path.steps, p);
  AscentResult up = ascend_to_singular(moved, pt);
  std::optional<Multipartition> acted = creation ? asym_f_inf(up.head, i, pt, j)
                                                 : asym_e_inf(up.head, i, pt, j);
  if (!acted) return std::nullopt;
  Multipartition redressed = replay_word(*acted, up.word, pt);
  return transport(redressed, reverse_path(path.steps), p);
}

}  // namespace

std::optional<Multipartition> e_inf(const Multipartition& lam, long i, const FockParam& p) {
  return general_op(lam, i, p, false);
}

std::optional<Multipartition> f_inf(const Multipartition& lam, long i, const FockParam& p) {
  return general_op(lam, i, p, true);
}

long q_depth(const Multipartition& lam, const FockParam& p, std::vector<std::string>* trace) {
  require_negative_rational(p, "q_depth");
  require_single_class(p, "q_depth");
  const int j = asymptotic_target(p);
  const long e = p.denominator_e();
  PlannedPath path = plan_path(p, j, lam.boxes());
  FockParam pt = p.with_charges(path.target_s);
  Multipartition moved = transport(lam, path.steps, p);
  auto [quot, rem] = div_rem_e(moved.comp(j), e);
  long q = quot.boxes();

  // Independent route: strip the Kac-Moody word first, then transport; the
  // transported head's distinguished component must divide exactly.
  AscentResult up = ascend_to_singular(lam, p);
  Multipartition head_moved = transport(up.head, path.steps, p);
  auto [hq, hrem] = div_rem_e(head_moved.comp(j), e);
  if (!hrem.empty())
    throw InternalError("q_depth: transported singular head not divisible by e: " +
                        head_moved.str());
  if (hq.boxes() != q)
    throw InternalError("q_depth: route mismatch for " + lam.str() + ": quotient route " +
                        std::to_string(q) + ", singular route " + std::to_string(hq.boxes()));

  if (trace) {
    if (!path.steps.empty()) {
      std::string walls;
      for (const auto& s : path.steps) {
        if (!walls.empty()) walls += " ";
        walls += wall_str(s.wall);
      }
      trace->push_back("crossed walls " + walls + " toward component " + std::to_string(j + 1));
      trace->push_back("transported label " + moved.str());
    }
    trace->push_back("quotient of component " + std::to_string(j + 1) + ": " + quot.str() +
                     " (q=" + std::to_string(q) + ")");
  }
  return q;
}

}  // namespace fockcryst
