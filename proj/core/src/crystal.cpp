#include "fockcryst/crystal.hpp"

#include <algorithm>

#include "fockcryst/errors.hpp"

namespace fockcryst {

namespace {

const SignedBox* leftmost_minus(const ZSignature& reduced) {
  for (const auto& e : reduced.entries)
    if (!e.addable) return &e;
  return nullptr;
}

const SignedBox* rightmost_plus(const ZSignature& reduced) {
  for (auto it = reduced.entries.rbegin(); it != reduced.entries.rend(); ++it)
    if (it->addable) return &*it;
  return nullptr;
}

}  // namespace

std::optional<Multipartition> e_op(const Multipartition& lam, const Rat& z, const FockParam& p) {
  ZSignature sig = reduce_signature(z_signature(lam, z, p));
  const SignedBox* b = leftmost_minus(sig);
  if (!b) return std::nullopt;
  return lam.remove_box(b->box);
}

std::optional<Multipartition> f_op(const Multipartition& lam, const Rat& z, const FockParam& p) {
  ZSignature sig = reduce_signature(z_signature(lam, z, p));
  const SignedBox* b = rightmost_plus(sig);
  if (!b) return std::nullopt;
  return lam.add_box(b->box);
}

bool is_singular(const Multipartition& lam, const FockParam& p) {
  for (const Rat& z : residues_present(lam, p))
    if (e_op(lam, z, p)) return false;
  return true;
}

AscentResult ascend_to_singular(const Multipartition& lam, const FockParam& p) {
  AscentResult res{lam, {}};
  for (;;) {
    bool moved = false;
    for (const Rat& z : residues_present(res.head, p)) {
      if (auto next = e_op(res.head, z, p)) {
        res.word.residues.push_back(z);
        res.head = std::move(*next);
        moved = true;
        break;
      }
    }
    if (!moved) return res;
  }
}

Multipartition replay_word(const Multipartition& head, const CrystalWord& word,
                           const FockParam& p) {
  Multipartition cur = head;
  for (auto it = word.residues.rbegin(); it != word.residues.rend(); ++it) {
    auto next = f_op(cur, *it, p);
    if (!next)
      throw InternalError("crystal word replay hit a null creation step at z=" + it->str());
    cur = std::move(*next);
  }
  return cur;
}

long depth(const Multipartition& lam, const FockParam& p) {
  return ascend_to_singular(lam, p).word.length();
}

Partition mullineux(const Partition& lam, long e) {
  if (e < 2) throw ComputationError("mullineux needs e >= 2");
  if (!is_e_corestricted(lam, e))
    throw ComputationError("mullineux: " + lam.str() + " is not " + std::to_string(e) +
                           "-co-restricted");
  FockParam p = FockParam::rational(Rat(-1, e), {Rat(0)});
  Multipartition m(std::vector<Partition>{lam});
  AscentResult up = ascend_to_singular(m, p);
  if (up.head.boxes() != 0)
    throw InternalError("mullineux: co-restricted partition did not ascend to empty");
  CrystalWord twisted;
  twisted.residues.reserve(up.word.residues.size());
  // Reversing the recorded word and negating residues mod e, then replaying
  // (which reverses again), applies f at -i_k, ..., -i_1.
  const Rat mod = p.modulus();
  for (auto it = up.word.residues.rbegin(); it != up.word.residues.rend(); ++it)
    twisted.residues.push_back(mod_reduce(-*it, mod));
  std::reverse(twisted.residues.begin(), twisted.residues.end());
  return replay_word(up.head, twisted, p).comp(0);
}

std::optional<Multipartition> f_op_with(const Multipartition& lam, const Rat& z,
                                        const FockParam& p, const CrystalConventions& conv) {
  // Rebuild the signature from scratch honoring the (possibly flipped)
  // conventions; only the verification mutation self-test calls this.
  struct Entry {
    BoxRef box;
    bool addable;
    Rat key;
  };
  auto mut_content = [&](const BoxRef& b) {
    long raw = conv.content_x_minus_y ? (b.col - b.row) : (b.row - b.col);
    return Rat(raw) + p.charge(b.comp);
  };
  std::vector<Entry> entries;
  for (int c = 0; c < lam.level(); ++c) {
    for (const auto& b : addable_boxes(lam.comp(c), c))
      if (residue_of_content(mut_content(b), p) == z)
        entries.push_back(Entry{b, true, p.kappa() * Rat(p.ell()) * mut_content(b) - Rat(c + 1)});
    for (const auto& b : removable_boxes(lam.comp(c), c))
      if (residue_of_content(mut_content(b), p) == z)
        entries.push_back(Entry{b, false, p.kappa() * Rat(p.ell()) * mut_content(b) - Rat(c + 1)});
  }
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    return conv.ascending_v ? (a.key < b.key) : (b.key < a.key);
  });
  std::vector<Entry> reduced;
  for (auto& en : entries) {
    bool cancels = conv.cancel_minus_plus ? (en.addable && !reduced.empty() && !reduced.back().addable)
                                          : (!en.addable && !reduced.empty() && reduced.back().addable);
    if (cancels)
      reduced.pop_back();
    else
      reduced.push_back(en);
  }
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
    if (it->addable) return lam.add_box(it->box);
  return std::nullopt;
}

}  // namespace fockcryst
