#include "fockcryst/partition.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

#include "fockcryst/errors.hpp"

namespace fockcryst {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1)
      throw ComputationError("partition parts must be positive");
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
      throw ComputationError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "-") return Partition();
  std::vector<long> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    if (tok.empty())
      throw ParseError("partition '" + std::string(text) + "': empty part at offset " +
                       std::to_string(pos));
    for (size_t k = 0; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw ParseError("partition '" + std::string(text) + "': bad character at offset " +
                         std::to_string(pos + k));
    long v = std::stol(std::string(tok));
    if (v < 1)
      throw ParseError("partition '" + std::string(text) + "': zero part at offset " +
                       std::to_string(pos));
    if (!parts.empty() && parts.back() < v)
      throw ParseError("partition '" + std::string(text) +
                       "': parts must be weakly decreasing at offset " + std::to_string(pos));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size())
      throw ParseError("partition '" + std::string(text) + "': trailing comma");
  }
  return Partition(std::move(parts));
}

long Partition::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

long Partition::part(long y) const {
  if (y < 1 || y > rows()) return 0;
  return parts_[static_cast<size_t>(y - 1)];
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<long> cols(static_cast<size_t>(parts_[0]), 0);
  for (long x = 1; x <= parts_[0]; ++x) {
    long h = 0;
    while (h < rows() && parts_[static_cast<size_t>(h)] >= x) ++h;
    cols[static_cast<size_t>(x - 1)] = h;
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::vector<BoxRef> addable_boxes(const Partition& p, int comp) {
  std::vector<BoxRef> out;
  long prev = std::numeric_limits<long>::max();
  for (long y = 1; y <= p.rows(); ++y) {
    long len = p.part(y);
    if (len < prev) out.push_back(BoxRef{comp, len + 1, y});
    prev = len;
  }
  out.push_back(BoxRef{comp, 1, p.rows() + 1});
  std::sort(out.begin(), out.end(), [](const BoxRef& a, const BoxRef& b) { return a.col < b.col; });
  return out;
}

std::vector<BoxRef> removable_boxes(const Partition& p, int comp) {
  std::vector<BoxRef> out;
  for (long y = 1; y <= p.rows(); ++y) {
    long len = p.part(y);
    if (len > p.part(y + 1)) out.push_back(BoxRef{comp, len, y});
  }
  std::sort(out.begin(), out.end(), [](const BoxRef& a, const BoxRef& b) { return a.col < b.col; });
  return out;
}

Partition add_box(const Partition& p, long col, long row) {
  if (row < 1 || col < 1 || col != p.part(row) + 1 || (row > 1 && p.part(row - 1) < col))
    throw ComputationError("add_box: (" + std::to_string(col) + "," + std::to_string(row) +
                           ") is not an addable corner of " + p.str());
  std::vector<long> parts = p.parts();
  if (row > p.rows())
    parts.push_back(1);
  else
    parts[static_cast<size_t>(row - 1)] += 1;
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& p, long col, long row) {
  if (row < 1 || col != p.part(row) || col < 1 || p.part(row + 1) >= col)
    throw ComputationError("remove_box: (" + std::to_string(col) + "," + std::to_string(row) +
                           ") is not a removable corner of " + p.str());
  std::vector<long> parts = p.parts();
  parts[static_cast<size_t>(row - 1)] -= 1;
  if (parts.back() == 0) parts.pop_back();
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition scale(const Partition& p, long e) {
  if (e < 0) throw ComputationError("scale needs e >= 0");
  if (e == 0) return Partition();
  std::vector<long> parts = p.parts();
  for (auto& v : parts) v *= e;
  return Partition(std::move(parts));
}

Partition add_rows(const Partition& a, const Partition& b) {
  std::vector<long> parts(static_cast<size_t>(std::max(a.rows(), b.rows())), 0);
  for (long y = 1; y <= static_cast<long>(parts.size()); ++y)
    parts[static_cast<size_t>(y - 1)] = a.part(y) + b.part(y);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

namespace {
// Multiset of column heights, i.e. the parts of the transpose.
std::map<long, long, std::greater<long>> column_multiplicities(const Partition& p) {
  std::map<long, long, std::greater<long>> mult;
  Partition cols = p.transpose();
  for (long h : cols.parts()) mult[h] += 1;
  return mult;
}

Partition from_column_multiplicities(const std::map<long, long, std::greater<long>>& mult) {
  std::vector<long> cols;
  for (const auto& [h, c] : mult)
    for (long k = 0; k < c; ++k) cols.push_back(h);
  return Partition(std::move(cols)).transpose();
}
}  // namespace

std::pair<Partition, Partition> div_rem_e(const Partition& p, long e) {
  if (e < 1) throw ComputationError("div_rem_e needs e >= 1");
  std::map<long, long, std::greater<long>> quot, rem;
  for (const auto& [h, c] : column_multiplicities(p)) {
    if (c / e > 0) quot[h] = c / e;
    if (c % e > 0) rem[h] = c % e;
  }
  return {from_column_multiplicities(quot), from_column_multiplicities(rem)};
}

bool is_e_corestricted(const Partition& p, long e) {
  if (e < 1) throw ComputationError("is_e_corestricted needs e >= 1");
  for (const auto& [h, c] : column_multiplicities(p))
    if (c >= e) return false;
  return true;
}

Multipartition::Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw ComputationError("multipartition needs at least one component");
  for (const auto& c : comps_) boxes_ += c.boxes();
}

Multipartition Multipartition::empty(int ell) {
  return Multipartition(std::vector<Partition>(static_cast<size_t>(ell)));
}

Multipartition Multipartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  size_t pos = 0;
  while (true) {
    size_t bar = text.find('|', pos);
    std::string_view tok =
        text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
    comps.push_back(Partition::parse(tok));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::with_comp(int i, Partition p) const {
  std::vector<Partition> comps = comps_;
  comps.at(static_cast<size_t>(i)) = std::move(p);
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::add_box(const BoxRef& b) const {
  return with_comp(b.comp, fockcryst::add_box(comp(b.comp), b.col, b.row));
}

Multipartition Multipartition::remove_box(const BoxRef& b) const {
  return with_comp(b.comp, fockcryst::remove_box(comp(b.comp), b.col, b.row));
}

Multipartition Multipartition::transpose() const {
  std::vector<Partition> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_) comps.push_back(c.transpose());
  return Multipartition(std::move(comps));
}

std::string Multipartition::str() const {
  std::string out;
  for (size_t k = 0; k < comps_.size(); ++k) {
    if (k) out += '|';
    out += comps_[k].str();
  }
  return out;
}

std::vector<Partition> partitions_of(long n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<long> cur;
  // Descending-first recursive generation, then sorted for a stable order.
  auto rec = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(long n) {
  std::vector<Partition> out;
  for (long k = 0; k <= n; ++k) {
    auto pk = partitions_of(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

std::vector<Multipartition> multipartitions_of(int ell, long n) {
  std::vector<Multipartition> out;
  std::vector<Partition> cur(static_cast<size_t>(ell));
  auto rec = [&](auto&& self, int comp, long rest) -> void {
    if (comp == ell - 1) {
      for (const auto& p : partitions_of(rest)) {
        cur[static_cast<size_t>(comp)] = p;
        out.emplace_back(cur);
      }
      return;
    }
    for (long k = 0; k <= rest; ++k)
      for (const auto& p : partitions_of(k)) {
        cur[static_cast<size_t>(comp)] = p;
        self(self, comp + 1, rest - k);
      }
  };
  if (ell < 1) throw ComputationError("multipartitions need ell >= 1");
  rec(rec, 0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitions_up_to(int ell, long n) {
  std::vector<Multipartition> out;
  for (long k = 0; k <= n; ++k) {
    auto mk = multipartitions_of(ell, k);
    out.insert(out.end(), mk.begin(), mk.end());
  }
  return out;
}

unsigned long long partition_count(long n) {
  if (n < 0) return 0;
  std::vector<unsigned long long> p(static_cast<size_t>(n + 1), 0);
  p[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
  return p[static_cast<size_t>(n)];
}

}  // namespace fockcryst
