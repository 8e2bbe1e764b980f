#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fockcryst/chambers.hpp"
#include "fockcryst/crystal.hpp"

namespace fockcryst {

// Two-slot crystal behind the wall-crossing bijections. A pair (A, B) carries
// integer labels: boxes of A are labeled x - y, boxes of B are labeled
// x - y + m. The two sides differ only in the listing order of the two boxes
// sharing a label: FirstSlot lists A's box first, SecondSlot lists B's first.
using PartitionPair = std::pair<Partition, Partition>;

enum class PairSide { FirstSlot = 1, SecondSlot = 2 };
PairSide other_side(PairSide s);

std::optional<PartitionPair> pair_e_op(const PartitionPair& pr, long label, long m, PairSide side);
std::optional<PartitionPair> pair_f_op(const PartitionPair& pr, long label, long m, PairSide side);
bool pair_is_singular(const PartitionPair& pr, long m, PairSide side);

struct PairAscent {
  PartitionPair head;
  std::vector<long> word;  // labels of applied annihilation steps, in order
};
PairAscent pair_ascend(const PartitionPair& pr, long m, PairSide side);

// Singular elements of one side are (empty, empty) and one rectangle pair per
// achievable size; this returns the equal-size singular of the other side and
// throws if the head does not match the rectangle classification.
PartitionPair singular_partner(const PartitionPair& head, long m, PairSide from);

// The unique size-preserving bijection intertwining the two sides' operators:
// ascend on `from`, replace the head by its partner, descend on the other
// side with the reversed word.
PartitionPair wc_pair(const PartitionPair& pr, long m, PairSide from);

// Crossing one essential wall (i, j, m): components other than i, j are kept;
// (lambda'^(j), lambda'^(i)) = wc_m(lambda^(j), lambda^(i)). The ascent side
// is the listing order of a comp-j vs comp-i box at equal label under the
// v-order at the step's source charges; it is derived, never hardcoded, and
// cross-checked against witness boxes.
Multipartition wc_wall(const Multipartition& lam, const CrossingStep& step, const FockParam& base);

// Left-to-right composition of wc_wall along a planned path.
Multipartition transport(const Multipartition& lam, const std::vector<CrossingStep>& path,
                         const FockParam& base);

// One-row crossing: lambda = e*quot + rem goes to (e*(quot^t) + M(rem))^t.
Partition wc_type_a(const Partition& lam, long e);

}  // namespace fockcryst
