#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockcryst {

// Integer partition: weakly decreasing list of positive parts. Row y has
// length parts()[y-1]; cells are addressed (x, y) with column x >= 1 and
// row y >= 1, so the cell set is { (x, y) : 1 <= x <= part(y) }.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  // "3,1"; "-" or "" denote the empty partition. Strict: rejects
  // non-decreasing sequences, zeros and junk, with position diagnostics.
  static Partition parse(std::string_view text);

  const std::vector<long>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  long rows() const { return static_cast<long>(parts_.size()); }
  long boxes() const;
  long part(long y) const;  // 1-based row length, 0 past the last row

  Partition transpose() const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<long> parts_;
};

// One cell (or corner) of one component of a multipartition.
// comp is 0-based internally; col = x and row = y are 1-based.
// All user-facing text renders comp 1-based.
struct BoxRef {
  int comp = 0;
  long col = 0;
  long row = 0;
};
inline bool operator==(const BoxRef& a, const BoxRef& b) {
  return a.comp == b.comp && a.col == b.col && a.row == b.row;
}
inline long unshifted_content(const BoxRef& b) { return b.col - b.row; }

// Corners, in increasing column order. A partition has at most one addable
// and one removable corner per unshifted content x - y.
std::vector<BoxRef> addable_boxes(const Partition& p, int comp = 0);
std::vector<BoxRef> removable_boxes(const Partition& p, int comp = 0);

Partition add_box(const Partition& p, long col, long row);
Partition remove_box(const Partition& p, long col, long row);

// Part-wise operations (rows padded with zeros).
Partition scale(const Partition& p, long e);
Partition add_rows(const Partition& a, const Partition& b);

// lambda = e*quot + rem part-wise with |quot| maximal; rem comes out
// e-co-restricted. Computed column-wise: a column height with multiplicity c
// contributes floor(c/e) columns to quot and c mod e columns to rem.
std::pair<Partition, Partition> div_rem_e(const Partition& p, long e);

// Every column-height multiplicity is < e.
bool is_e_corestricted(const Partition& p, long e);

class Multipartition {
 public:
  explicit Multipartition(std::vector<Partition> comps);
  static Multipartition empty(int ell);

  // Components joined by '|', e.g. "1,1,1|-" or "-|3".
  static Multipartition parse(std::string_view text);

  int level() const { return static_cast<int>(comps_.size()); }
  long boxes() const { return boxes_; }
  const Partition& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
  const std::vector<Partition>& comps() const { return comps_; }

  Multipartition with_comp(int i, Partition p) const;
  Multipartition add_box(const BoxRef& b) const;
  Multipartition remove_box(const BoxRef& b) const;
  Multipartition transpose() const;  // componentwise

  std::string str() const;

  friend bool operator==(const Multipartition& a, const Multipartition& b) {
    return a.comps_ == b.comps_;
  }
  friend bool operator!=(const Multipartition& a, const Multipartition& b) {
    return a.comps_ != b.comps_;
  }
  friend bool operator<(const Multipartition& a, const Multipartition& b) {
    return a.comps_ < b.comps_;
  }

 private:
  std::vector<Partition> comps_;
  long boxes_ = 0;
};

// Deterministic enumerations (ascending lexicographic within each size).
std::vector<Partition> partitions_of(long n);
std::vector<Partition> partitions_up_to(long n);
std::vector<Multipartition> multipartitions_of(int ell, long n);
std::vector<Multipartition> multipartitions_up_to(int ell, long n);
unsigned long long partition_count(long n);

}  // namespace fockcryst
