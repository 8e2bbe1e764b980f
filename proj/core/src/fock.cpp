#include "fockcryst/fock.hpp"

#include <algorithm>

#include "fockcryst/errors.hpp"

namespace fockcryst {

FockParam FockParam::rational(Rat kappa, std::vector<Rat> charges) {
  if (charges.empty()) throw ComputationError("parameter needs ell >= 1 charges");
  FockParam p;
  p.kind_ = KappaKind::Rational;
  p.kappa_ = std::move(kappa);
  p.charges_ = std::move(charges);
  return p;
}

FockParam FockParam::generic_negative(std::vector<Rat> charges) {
  if (charges.empty()) throw ComputationError("parameter needs ell >= 1 charges");
  FockParam p;
  p.kind_ = KappaKind::GenericNegative;
  p.charges_ = std::move(charges);
  return p;
}

FockParam FockParam::parse(std::string_view kappa_text, std::string_view charges_text) {
  std::vector<Rat> charges;
  size_t pos = 0;
  while (pos <= charges_text.size()) {
    size_t comma = charges_text.find(',', pos);
    std::string_view tok = charges_text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    charges.push_back(Rat::parse(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (charges.empty()) throw ParseError("no charges given");
  if (kappa_text == "generic-neg") return generic_negative(std::move(charges));
  return rational(Rat::parse(kappa_text), std::move(charges));
}

const Rat& FockParam::kappa() const {
  if (kind_ != KappaKind::Rational)
    throw ComputationError("kappa is a formal irrational here");
  return kappa_;
}

long FockParam::denominator_e() const {
  if (kind_ != KappaKind::Rational || kappa_.is_zero())
    throw ComputationError("denominator e needs a nonzero rational kappa");
  mpz_class d = kappa_.den();
  if (!d.fits_slong_p())
    throw ComputationError("denominator of kappa too large");
  return d.get_si();
}

Rat FockParam::modulus() const {
  if (kind_ != KappaKind::Rational || kappa_.is_zero())
    throw ComputationError("modulus needs a nonzero rational kappa");
  return (Rat(1) / kappa_).abs();
}

const Rat& FockParam::charge(int comp) const {
  if (comp < 0 || comp >= ell()) throw ComputationError("component index out of range");
  return charges_[static_cast<size_t>(comp)];
}

FockParam FockParam::flipped() const {
  if (kind_ != KappaKind::Rational)
    throw ComputationError("flip needs a rational kappa");
  std::vector<Rat> neg;
  neg.reserve(charges_.size());
  for (const auto& s : charges_) neg.push_back(-s);
  return rational(-kappa_, std::move(neg));
}

FockParam FockParam::with_charges(std::vector<Rat> charges) const {
  if (charges.size() != charges_.size())
    throw ComputationError("with_charges must preserve ell");
  FockParam p = *this;
  p.charges_ = std::move(charges);
  return p;
}

FockParam FockParam::shifted(const Rat& c) const {
  std::vector<Rat> sh;
  sh.reserve(charges_.size());
  for (const auto& s : charges_) sh.push_back(s + c);
  return with_charges(std::move(sh));
}

std::string FockParam::str() const {
  std::string out = "kappa=";
  out += (kind_ == KappaKind::Rational) ? kappa_.str() : std::string("generic-neg");
  out += " s=";
  for (size_t k = 0; k < charges_.size(); ++k) {
    if (k) out += ',';
    out += charges_[k].str();
  }
  return out;
}

Rat content(const BoxRef& b, const FockParam& p) {
  return Rat(b.col - b.row) + p.charge(b.comp);
}

Rat residue_of_content(const Rat& c, const FockParam& p) {
  if (!p.rational_kappa()) return c;
  return mod_reduce(c, p.modulus());
}

Rat residue(const BoxRef& b, const FockParam& p) { return residue_of_content(content(b, p), p); }

bool equivalent(const BoxRef& a, const BoxRef& b, const FockParam& p) {
  if (!p.rational_kappa()) return content(a, p) == content(b, p);
  return is_multiple_of(content(a, p) - content(b, p), p.modulus());
}

OrderKey order_key(const BoxRef& b, const FockParam& p) {
  OrderKey k;
  Rat lin = Rat(p.ell()) * content(b, p);
  Rat cst = Rat(-(b.comp + 1));
  if (p.rational_kappa()) {
    k.formal = false;
    k.cst = p.kappa() * lin + cst;
  } else {
    k.formal = true;
    k.lin = lin;
    k.cst = cst;
  }
  return k;
}

bool operator<(const OrderKey& a, const OrderKey& b) {
  if (a.formal != b.formal) throw InternalError("order keys from different parameter kinds");
  if (!a.formal) return a.cst < b.cst;
  // kappa treated as a large negative irrational: the kappa-coefficient
  // dominates with reversed sign.
  if (a.lin != b.lin) return a.lin > b.lin;
  return a.cst < b.cst;
}

bool operator==(const OrderKey& a, const OrderKey& b) {
  if (a.formal != b.formal) return false;
  if (!a.formal) return a.cst == b.cst;
  return a.lin == b.lin && a.cst == b.cst;
}

std::string ZSignature::word() const {
  std::string w;
  w.reserve(entries.size());
  for (const auto& e : entries) w += e.addable ? '+' : '-';
  return w;
}

ZSignature z_signature(const Multipartition& lam, const Rat& z, const FockParam& p) {
  if (lam.level() != p.ell())
    throw ComputationError("multipartition level does not match parameter");
  ZSignature sig;
  for (int c = 0; c < lam.level(); ++c) {
    for (const auto& b : addable_boxes(lam.comp(c), c))
      if (residue(b, p) == z) sig.entries.push_back(SignedBox{b, true, order_key(b, p)});
    for (const auto& b : removable_boxes(lam.comp(c), c))
      if (residue(b, p) == z) sig.entries.push_back(SignedBox{b, false, order_key(b, p)});
  }
  std::sort(sig.entries.begin(), sig.entries.end(),
            [](const SignedBox& a, const SignedBox& b) { return a.key < b.key; });
  for (size_t k = 0; k + 1 < sig.entries.size(); ++k)
    if (sig.entries[k].key == sig.entries[k + 1].key)
      throw InternalError("tied order keys in z-signature of " + lam.str() + " at z=" + z.str() +
                          " (" + p.str() + ")");
  return sig;
}

ZSignature reduce_signature(ZSignature sig) {
  std::vector<SignedBox> out;
  out.reserve(sig.entries.size());
  for (auto& e : sig.entries) {
    if (e.addable && !out.empty() && !out.back().addable)
      out.pop_back();  // cancel "-+"
    else
      out.push_back(e);
  }
  sig.entries = std::move(out);
  return sig;
}

std::vector<Rat> block_id(const Multipartition& lam, const FockParam& p) {
  std::vector<Rat> out;
  for (int c = 0; c < lam.level(); ++c) {
    const Partition& part = lam.comp(c);
    for (long y = 1; y <= part.rows(); ++y)
      for (long x = 1; x <= part.part(y); ++x)
        out.push_back(residue(BoxRef{c, x, y}, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> residues_present(const Multipartition& lam, const FockParam& p) {
  std::vector<Rat> out;
  for (int c = 0; c < lam.level(); ++c) {
    for (const auto& b : addable_boxes(lam.comp(c), c)) out.push_back(residue(b, p));
    for (const auto& b : removable_boxes(lam.comp(c), c)) out.push_back(residue(b, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> component_classes(const FockParam& p) {
  const int ell = p.ell();
  std::vector<int> root(static_cast<size_t>(ell));
  for (int i = 0; i < ell; ++i) root[static_cast<size_t>(i)] = i;
  auto related = [&](int i, int j) {
    Rat d = p.charge(i) - p.charge(j);
    if (!p.rational_kappa()) return d.is_integer();
    if (p.zero_kappa())
      throw ComputationError("component classes are not defined at kappa = 0");
    // Z + (e/a)Z = (1/a)Z for kappa = a/e in lowest terms.
    return (d * Rat(p.kappa().num(), mpz_class(1))).is_integer();
  };
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < i; ++j)
      if (related(i, j)) {
        int a = root[static_cast<size_t>(i)], b = root[static_cast<size_t>(j)];
        if (a != b)
          for (auto& r : root)
            if (r == a) r = b;
      }
  std::vector<std::vector<int>> classes;
  for (int r = 0; r < ell; ++r) {
    std::vector<int> cls;
    for (int i = 0; i < ell; ++i)
      if (root[static_cast<size_t>(i)] == root[static_cast<size_t>(r)]) cls.push_back(i);
    if (!cls.empty() && cls.front() == r) classes.push_back(std::move(cls));
  }
  return classes;
}

std::pair<FockParam, Multipartition> restrict_to_class(const FockParam& p,
                                                       const Multipartition& lam,
                                                       const std::vector<int>& cls) {
  if (cls.empty()) throw ComputationError("empty component class");
  std::vector<Rat> charges;
  std::vector<Partition> comps;
  for (int i : cls) {
    charges.push_back(p.charge(i));
    comps.push_back(lam.comp(i));
  }
  FockParam sub = p.rational_kappa() ? FockParam::rational(p.kappa(), std::move(charges))
                                     : FockParam::generic_negative(std::move(charges));
  return {std::move(sub), Multipartition(std::move(comps))};
}

}  // namespace fockcryst
