#include "fockcryst/wallcross.hpp"

#include <algorithm>
#include <set>

#include "fockcryst/errors.hpp"

namespace fockcryst {

PairSide other_side(PairSide s) {
  return s == PairSide::FirstSlot ? PairSide::SecondSlot : PairSide::FirstSlot;
}

namespace {

struct PairEntry {
  int slot;  // 0 = A, 1 = B
  BoxRef box;
  bool addable;
};

long slot_label(int slot, const BoxRef& b, long m) {
  return unshifted_content(b) + (slot == 1 ? m : 0);
}

// At most two entries: one per slot (a partition's profile meets each
// diagonal in at most one corner). Listed in side order.
std::vector<PairEntry> pair_signature(const PartitionPair& pr, long label, long m, PairSide side) {
  std::vector<PairEntry> per_slot[2];
  const Partition* slots[2] = {&pr.first, &pr.second};
  for (int slot = 0; slot < 2; ++slot) {
    for (const auto& b : addable_boxes(*slots[slot], slot))
      if (slot_label(slot, b, m) == label) per_slot[slot].push_back(PairEntry{slot, b, true});
    for (const auto& b : removable_boxes(*slots[slot], slot))
      if (slot_label(slot, b, m) == label) per_slot[slot].push_back(PairEntry{slot, b, false});
    if (per_slot[slot].size() > 1)
      throw InternalError("two corners on one diagonal in a pair signature");
  }
  std::vector<PairEntry> out;
  int first = (side == PairSide::FirstSlot) ? 0 : 1;
  for (int slot : {first, 1 - first})
    for (auto& e : per_slot[slot]) out.push_back(e);
  return out;
}

std::vector<PairEntry> reduce_pair(std::vector<PairEntry> sig) {
  std::vector<PairEntry> out;
  for (auto& e : sig) {
    if (e.addable && !out.empty() && !out.back().addable)
      out.pop_back();  // cancel "-+"
    else
      out.push_back(e);
  }
  return out;
}

PartitionPair apply_to_slot(const PartitionPair& pr, const PairEntry& e, bool add) {
  PartitionPair out = pr;
  Partition& target = (e.slot == 0) ? out.first : out.second;
  target = add ? add_box(target, e.box.col, e.box.row) : remove_box(target, e.box.col, e.box.row);
  return out;
}

std::vector<long> pair_labels_present(const PartitionPair& pr, long m) {
  std::set<long> labels;
  const Partition* slots[2] = {&pr.first, &pr.second};
  for (int slot = 0; slot < 2; ++slot) {
    for (const auto& b : addable_boxes(*slots[slot], slot)) labels.insert(slot_label(slot, b, m));
    for (const auto& b : removable_boxes(*slots[slot], slot))
      labels.insert(slot_label(slot, b, m));
  }
  return {labels.begin(), labels.end()};
}

Partition rectangle(long width, long height) {
  if (width <= 0 || height <= 0) return Partition();
  return Partition(std::vector<long>(static_cast<size_t>(height), width));
}

// (width, height) of a rectangle partition, or nullopt.
std::optional<std::pair<long, long>> as_rectangle(const Partition& p) {
  if (p.empty()) return std::nullopt;
  for (long part : p.parts())
    if (part != p.parts().front()) return std::nullopt;
  return std::make_pair(p.parts().front(), p.rows());
}

}  // namespace

std::optional<PartitionPair> pair_e_op(const PartitionPair& pr, long label, long m,
                                       PairSide side) {
  auto sig = reduce_pair(pair_signature(pr, label, m, side));
  for (const auto& e : sig)
    if (!e.addable) return apply_to_slot(pr, e, false);
  return std::nullopt;
}

std::optional<PartitionPair> pair_f_op(const PartitionPair& pr, long label, long m,
                                       PairSide side) {
  auto sig = reduce_pair(pair_signature(pr, label, m, side));
  for (auto it = sig.rbegin(); it != sig.rend(); ++it)
    if (it->addable) return apply_to_slot(pr, *it, true);
  return std::nullopt;
}

bool pair_is_singular(const PartitionPair& pr, long m, PairSide side) {
  for (long label : pair_labels_present(pr, m))
    if (pair_e_op(pr, label, m, side)) return false;
  return true;
}

PairAscent pair_ascend(const PartitionPair& pr, long m, PairSide side) {
  PairAscent res{pr, {}};
  for (;;) {
    bool moved = false;
    for (long label : pair_labels_present(res.head, m)) {
      if (auto next = pair_e_op(res.head, label, m, side)) {
        res.word.push_back(label);
        res.head = std::move(*next);
        moved = true;
        break;
      }
    }
    if (!moved) return res;
  }
}

PartitionPair singular_partner(const PartitionPair& head, long m, PairSide from) {
  const bool first = (from == PairSide::FirstSlot);
  const Partition& full = first ? head.first : head.second;
  const Partition& empty_slot = first ? head.second : head.first;
  if (!empty_slot.empty())
    throw InternalError("singular head has a nonempty passive slot: (" + head.first.str() + " ; " +
                        head.second.str() + ")");
  if (full.empty()) return {Partition(), Partition()};
  auto rect = as_rectangle(full);
  if (!rect)
    throw InternalError("singular head is not a rectangle: (" + head.first.str() + " ; " +
                        head.second.str() + ")");
  auto [w, h] = *rect;
  // FirstSlot singulars have their unique removable box at slot-A label m,
  // SecondSlot singulars at slot-B label 0; either way w - h is pinned.
  long expect = first ? m : -m;
  if (w - h != expect)
    throw InternalError("singular rectangle has wrong diagonal: (" + head.first.str() + " ; " +
                        head.second.str() + "), m=" + std::to_string(m));
  Partition partner = rectangle(h, w);
  return first ? PartitionPair{Partition(), partner} : PartitionPair{partner, Partition()};
}

PartitionPair wc_pair(const PartitionPair& pr, long m, PairSide from) {
  PairAscent up = pair_ascend(pr, m, from);
  PartitionPair cur = singular_partner(up.head, m, from);
  PairSide to = other_side(from);
  for (auto it = up.word.rbegin(); it != up.word.rend(); ++it) {
    auto next = pair_f_op(cur, *it, m, to);
    if (!next)
      throw InternalError("wall-crossing descent hit a null creation step at label " +
                          std::to_string(*it));
    cur = std::move(*next);
  }
  if (cur.first.boxes() + cur.second.boxes() != pr.first.boxes() + pr.second.boxes())
    throw InternalError("wall-crossing did not preserve the box count");
  return cur;
}

Multipartition wc_wall(const Multipartition& lam, const CrossingStep& step,
                       const FockParam& base) {
  const Wall& w = step.wall;
  FockParam src = base.with_charges(step.source_s);
  if (!src.rational_kappa() || src.zero_kappa())
    throw ComputationError("wall crossing needs a nonzero rational kappa");
  if (step.position_before == 0) throw ComputationError("crossing step without source side");

  // Listing order of a comp-j vs comp-i box at equal pair label, from the
  // v-order at the source charges: v(b_j) - v(b_i) = -kappa*ell*D with D the
  // source wall position, which is strictly nonzero off the wall.
  int sgn = src.kappa().sign() * step.position_before;
  PairSide from = (sgn > 0) ? PairSide::FirstSlot : PairSide::SecondSlot;

  // Witness cross-check with concrete equal-label boxes.
  long c = std::max(0L, w.m);
  BoxRef bj{w.j, c + 1, 1};          // slot-A label c
  BoxRef bi{w.i, c - w.m + 1, 1};    // slot-B label (c - m) + m = c
  bool j_first = order_key(bj, src) < order_key(bi, src);
  if (j_first != (from == PairSide::FirstSlot))
    throw InternalError("side rule disagrees with witness box order at " + src.str());

  PartitionPair pr{lam.comp(w.j), lam.comp(w.i)};
  PartitionPair out = wc_pair(pr, w.m, from);
  return lam.with_comp(w.j, out.first).with_comp(w.i, out.second);
}

Multipartition transport(const Multipartition& lam, const std::vector<CrossingStep>& path,
                         const FockParam& base) {
  Multipartition cur = lam;
  for (const auto& step : path) cur = wc_wall(cur, step, base);
  return cur;
}

Partition wc_type_a(const Partition& lam, long e) {
  if (e < 2) throw ComputationError("type A crossing needs e >= 2");
  auto [quot, rem] = div_rem_e(lam, e);
  return add_rows(scale(quot.transpose(), e), mullineux(rem, e)).transpose();
}

}  // namespace fockcryst
