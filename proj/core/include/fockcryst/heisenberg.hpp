#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockcryst/wallcross.hpp"

namespace fockcryst {

// Distinguished component for the asymptotic picture: argmin of the charges,
// ties to the smallest index.
int asymptotic_target(const FockParam& p);

// Asymptotic-chamber operators. The distinguished component j satisfies
// lambda^(j) = e*quot; the operator acts on quot by removing (adding) the
// unique corner of unshifted content i, then rescaling. Labels are the
// unshifted contents of quot's boxes; depth never depends on the labeling.
// Preconditions (asymptotic chamber, singular input, divisibility) are
// errors, not nulls: they indicate pipeline misuse.
std::optional<Multipartition> asym_e_inf(const Multipartition& lam, long i, const FockParam& p,
                                         int j);
std::optional<Multipartition> asym_f_inf(const Multipartition& lam, long i, const FockParam& p,
                                         int j);

// Replace the empty distinguished component by e*mu.
Multipartition asym_a_mu(const Multipartition& lam, const Partition& mu, const FockParam& p,
                         int j);

// General-chamber operators: transport to an asymptotic chamber, strip the
// Kac-Moody word, act there, re-dress and pull back.
std::optional<Multipartition> e_inf(const Multipartition& lam, long i, const FockParam& p);
std::optional<Multipartition> f_inf(const Multipartition& lam, long i, const FockParam& p);

// Depth in the level-1 crystal, computed without iterating operators:
// transport to an asymptotic chamber and take |quot| of the distinguished
// component. Cross-checked against the singular route (ascend, transport,
// exact division); a mismatch is a hard error.
long q_depth(const Multipartition& lam, const FockParam& p,
             std::vector<std::string>* trace = nullptr);

}  // namespace fockcryst
