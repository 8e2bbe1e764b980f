#pragma once

#include <optional>
#include <vector>

#include "fockcryst/fock.hpp"

namespace fockcryst {

// Signature-rule crystal on charged multipartitions. e_op removes the box of
// the leftmost '-' of the reduced z-signature, f_op adds the box of the
// rightmost '+'; null when the reduced signature has no '-' (resp. '+').
std::optional<Multipartition> e_op(const Multipartition& lam, const Rat& z, const FockParam& p);
std::optional<Multipartition> f_op(const Multipartition& lam, const Rat& z, const FockParam& p);

// Killed by every annihilation operator whose residue occurs among the
// addable/removable boxes.
bool is_singular(const Multipartition& lam, const FockParam& p);

// Residues of applied annihilation operators, in application order.
// Replaying the reversed word with f_op from the head reproduces the start.
struct CrystalWord {
  std::vector<Rat> residues;
  long length() const { return static_cast<long>(residues.size()); }
};

struct AscentResult {
  Multipartition head;
  CrystalWord word;
};

// Repeated e_op at the smallest applicable residue representative. Any
// deterministic choice is sound: depth is path-independent (asserted by the
// verification suite, not assumed).
AscentResult ascend_to_singular(const Multipartition& lam, const FockParam& p);

// Apply f_op along the reversed word starting from head; a null step is an
// internal error.
Multipartition replay_word(const Multipartition& head, const CrystalWord& word,
                           const FockParam& p);

// Depth of lambda: the length of a maximal annihilation chain.
long depth(const Multipartition& lam, const FockParam& p);

// The unique self-map of the e-co-restricted partitions with M(empty) = empty
// and M(f_i x) = f_{-i} M(x), computed through the ell = 1, charge 0,
// kappa = -1/e crystal. Rejects partitions that are not e-co-restricted.
Partition mullineux(const Partition& lam, long e);

// Test seam: the load-bearing conventions, flippable one at a time so the
// verification suite can show each flip breaks the calibration example.
struct CrystalConventions {
  bool content_x_minus_y = true;  // false: use y - x + s_i
  bool ascending_v = true;        // false: list signatures descending in v
  bool cancel_minus_plus = true;  // false: cancel "+-" instead
};
std::optional<Multipartition> f_op_with(const Multipartition& lam, const Rat& z,
                                        const FockParam& p, const CrystalConventions& conv);

}  // namespace fockcryst
