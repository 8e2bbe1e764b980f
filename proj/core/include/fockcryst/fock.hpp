#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockcryst/partition.hpp"
#include "fockcryst/rat.hpp"

namespace fockcryst {

enum class KappaKind {
  Rational,        // exact rational kappa (zero allowed; most machinery needs it nonzero)
  GenericNegative  // a formal transcendental kappa < 0; modulus is infinite
};

// Charged Fock space parameter (kappa, s_1..s_ell). Charges are never
// normalized implicitly; the supports pipeline shifts them explicitly so that
// reported traces match user input.
class FockParam {
 public:
  static FockParam rational(Rat kappa, std::vector<Rat> charges);
  static FockParam generic_negative(std::vector<Rat> charges);

  // kappa_text: "p/q", "p", "0" or "generic-neg"; charges_text: "0,-4".
  static FockParam parse(std::string_view kappa_text, std::string_view charges_text);

  int ell() const { return static_cast<int>(charges_.size()); }
  KappaKind kind() const { return kind_; }
  bool rational_kappa() const { return kind_ == KappaKind::Rational; }
  bool zero_kappa() const { return kind_ == KappaKind::Rational && kappa_.is_zero(); }
  const Rat& kappa() const;          // requires rational kappa
  long denominator_e() const;        // e >= 1; requires rational nonzero kappa
  Rat modulus() const;               // positive generator |e/a| of kappa^{-1}Z
  const Rat& charge(int comp) const; // 0-based component index
  const std::vector<Rat>& charges() const { return charges_; }

  FockParam flipped() const;                       // (-kappa, -s)
  FockParam with_charges(std::vector<Rat>) const;  // same kappa
  FockParam shifted(const Rat& c) const;           // common summand on charges

  std::string str() const;

 private:
  FockParam() = default;
  KappaKind kind_ = KappaKind::Rational;
  Rat kappa_;
  std::vector<Rat> charges_;
};

// Shifted content of a box: x - y + s_comp.
Rat content(const BoxRef& b, const FockParam& p);

// Canonical residue representative: content mod modulus in [0, modulus) for
// rational nonzero kappa; the exact content for generic kappa.
Rat residue_of_content(const Rat& content, const FockParam& p);
Rat residue(const BoxRef& b, const FockParam& p);
bool equivalent(const BoxRef& a, const BoxRef& b, const FockParam& p);

// Total order key v(b) = kappa*ell*cont(b) - i with i the 1-based component.
// The source order on equivalent boxes is descending in v, so signatures are
// listed in ascending v. For generic kappa, v is the formal affine expression
// lin*kappa + cst compared with kappa treated as a large negative irrational.
struct OrderKey {
  bool formal = false;
  Rat lin;  // coefficient of kappa (formal case only)
  Rat cst;  // full value when not formal, constant term otherwise
};
OrderKey order_key(const BoxRef& b, const FockParam& p);
bool operator<(const OrderKey& a, const OrderKey& b);
bool operator==(const OrderKey& a, const OrderKey& b);

struct SignedBox {
  BoxRef box;
  bool addable = false;  // '+' for addable, '-' for removable
  OrderKey key;
};

// Addable and removable z-boxes of lambda, strictly ascending in v.
// Equivalent boxes never tie in v; a tie is reported, never broken silently.
struct ZSignature {
  std::vector<SignedBox> entries;
  std::string word() const;  // e.g. "++-"
};
ZSignature z_signature(const Multipartition& lam, const Rat& z, const FockParam& p);

// Repeatedly delete adjacent (-,+) pairs; the result has shape +...+-...-.
ZSignature reduce_signature(ZSignature sig);

// Sorted multiset of the residues of all boxes; a block invariant.
std::vector<Rat> block_id(const Multipartition& lam, const FockParam& p);

// Sorted distinct residues of all addable/removable boxes of lambda.
std::vector<Rat> residues_present(const Multipartition& lam, const FockParam& p);

// i ~ j iff s_i - s_j lies in Z + kappa^{-1}Z (just Z for generic kappa).
// Classes are listed by smallest member, members ascending, 0-based.
std::vector<std::vector<int>> component_classes(const FockParam& p);

// Sub-parameter and sub-multipartition over one class, components kept in
// their original order.
std::pair<FockParam, Multipartition> restrict_to_class(const FockParam& p,
                                                       const Multipartition& lam,
                                                       const std::vector<int>& cls);

}  // namespace fockcryst
