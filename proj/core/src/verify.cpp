#include "fockcryst/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fockcryst/errors.hpp"

namespace fockcryst {

std::string VerifyReport::render() const {
  std::string out = "suite: " + suite + "\nbounds: " + bounds + "\nchecks: " +
                    std::to_string(checks) + "\n";
  for (const auto& n : notes) out += "note: " + n + "\n";
  for (const auto& v : violations) out += "VIOLATION: " + v + "\n";
  out += ok() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

VerifyReport verify_crystal_axioms(const FockParam& p, long n_max) {
  VerifyReport rep;
  rep.suite = "axioms";
  rep.bounds = p.str() + " n<=" + std::to_string(n_max);

  std::map<Multipartition, long> depth_memo;
  // Depth via every maximal chain at once; unequal branch depths are
  // violations of crystal normality, not tolerated silently.
  auto chain_depth = [&](auto&& self, const Multipartition& lam) -> long {
    auto it = depth_memo.find(lam);
    if (it != depth_memo.end()) return it->second;
    std::set<long> branch;
    for (const Rat& z : residues_present(lam, p))
      if (auto down = e_op(lam, z, p)) branch.insert(self(self, *down) + 1);
    long d = branch.empty() ? 0 : *branch.begin();
    if (branch.size() > 1)
      rep.violations.push_back("depth is path-dependent at " + lam.str());
    depth_memo.emplace(lam, d);
    return d;
  };

  for (const auto& lam : multipartitions_up_to(p.ell(), n_max)) {
    auto residues = residues_present(lam, p);
    for (const Rat& z : residues) {
      ++rep.checks;
      if (auto down = e_op(lam, z, p)) {
        auto back = f_op(*down, z, p);
        if (!back || *back != lam)
          rep.violations.push_back("f_z e_z != id at " + lam.str() + " z=" + z.str());
        // e_z removes exactly one box of residue z from the block multiset.
        auto a = block_id(lam, p);
        auto b = block_id(*down, p);
        auto pos = std::find(a.begin(), a.end(), z);
        if (pos == a.end())
          rep.violations.push_back("block multiset misses removed residue at " + lam.str());
        else {
          a.erase(pos);
          if (a != b)
            rep.violations.push_back("block multiset not preserved at " + lam.str() +
                                     " z=" + z.str());
        }
      }
      if (auto up = f_op(lam, z, p)) {
        auto back = e_op(*up, z, p);
        if (!back || *back != lam)
          rep.violations.push_back("e_z f_z != id at " + lam.str() + " z=" + z.str());
      }
    }
    long d_all = chain_depth(chain_depth, lam);
    long d_canon = depth(lam, p);
    ++rep.checks;
    if (d_all != d_canon)
      rep.violations.push_back("canonical ascent length differs from chain depth at " +
                               lam.str());
  }
  return rep;
}

VerifyReport verify_counting(const FockParam& p, long n_max) {
  VerifyReport rep;
  rep.suite = "counting";
  rep.bounds = p.str() + " n<=" + std::to_string(n_max);
  const long e = p.denominator_e();

  std::map<long, std::map<long, long>> count;  // n -> q -> #{p=0, q}
  std::map<long, long> finite_count;           // n -> #{p=q=0}
  for (long n = 0; n <= n_max; ++n) {
    finite_count[n] = 0;
    for (const auto& lam : multipartitions_of(p.ell(), n)) {
      SupportResult s = support(lam, p);
      if (s.p != 0) continue;
      ++count[n][s.q];
      if (s.q == 0) ++finite_count[n];
    }
  }
  for (long n = 0; n <= n_max; ++n)
    for (long q0 = 0; e * q0 <= n; ++q0) {
      ++rep.checks;
      long lhs = count[n].count(q0) ? count[n][q0] : 0;
      long rhs = static_cast<long>(partition_count(q0)) * finite_count[n - e * q0];
      if (lhs != rhs)
        rep.violations.push_back("counting identity fails at n=" + std::to_string(n) +
                                 " q0=" + std::to_string(q0) + ": " + std::to_string(lhs) +
                                 " != " + std::to_string(rhs));
    }
  return rep;
}

VerifyReport verify_wilcox(long e, long n_max) {
  VerifyReport rep;
  rep.suite = "wilcox";
  rep.bounds = "e=" + std::to_string(e) + " n<=" + std::to_string(n_max);
  FockParam p = e == 1 ? FockParam::rational(Rat(-1), {Rat(0)})
                       : FockParam::rational(Rat(-1, e), {Rat(0)});
  for (const auto& part : partitions_up_to(n_max)) {
    ++rep.checks;
    auto [quot, rem] = div_rem_e(part, e);
    SupportResult s = support(Multipartition(std::vector<Partition>{part}), p);
    long expect_p = (e == 1) ? 0 : rem.boxes();
    if (s.p != expect_p || s.q != quot.boxes())
      rep.violations.push_back("one-row reduction fails at " + part.str() + ": got (p,q)=(" +
                               std::to_string(s.p) + "," + std::to_string(s.q) + "), expected (" +
                               std::to_string(expect_p) + "," + std::to_string(quot.boxes()) +
                               ")");
  }
  return rep;
}

FockParam example_chamber_param(int chamber) {
  static const long s2[] = {-4, -2, 0, 2};
  if (chamber < 1 || chamber > 4) throw ComputationError("chamber must be 1..4");
  return FockParam::rational(Rat(-1, 2), {Rat(0), Rat(s2[chamber - 1])});
}

namespace {

struct ArrowDatum {
  const char* src;
  int z;
  const char* claimed;  // "" means the operator is claimed to vanish
};

// Transcribed chamber-(1) creation table: sixteen arrows.
const ArrowDatum kChamber1Arrows[] = {
    {"-|-", 0, "-|1"},      {"-|-", 1, ""},
    {"-|1", 0, "1|1"},      {"-|1", 1, "-|1,1"},
    {"1|-", 0, ""},         {"1|-", 1, "1,1|-"},
    {"-|1,1", 0, "-|1,1,1"},{"-|1,1", 1, "-|2,1"},
    {"-|2", 0, "-|3"},      {"-|2", 1, "-|2,1"},
    {"1|1", 0, ""},         {"1|1", 1, "1|1,1"},
    {"1,1|-", 0, "1,1|1"},  {"1,1|-", 1, "2,1|-"},
    {"2|-", 0, "2|1"},      {"2|-", 1, ""},
};

// Transcribed chamber-(1) support table for |lambda| <= 3.
const std::map<std::string, std::pair<long, long>>& chamber1_supports() {
  static const std::map<std::string, std::pair<long, long>> table = {
      {"-|-", {0, 0}},      {"-|1", {1, 0}},      {"1|-", {0, 0}},
      {"-|1,1", {2, 0}},    {"-|2", {0, 1}},      {"1|1", {2, 0}},
      {"1,1|-", {1, 0}},    {"2|-", {0, 0}},      {"-|1,1,1", {3, 0}},
      {"-|2,1", {3, 0}},    {"-|3", {1, 1}},      {"1|1,1", {3, 0}},
      {"1|2", {0, 1}},      {"1,1|1", {2, 0}},    {"2|1", {1, 0}},
      {"2,1|-", {2, 0}},    {"3|-", {0, 0}},      {"1,1,1|-", {0, 0}},
  };
  return table;
}

std::string swap_key(const std::string& key) {
  size_t bar = key.find('|');
  return key.substr(bar + 1) + "|" + key.substr(0, bar);
}

std::map<std::string, std::pair<long, long>> swap_table(
    const std::map<std::string, std::pair<long, long>>& t) {
  std::map<std::string, std::pair<long, long>> out;
  for (const auto& [k, v] : t) out[swap_key(k)] = v;
  return out;
}

// Transcribed support claims per chamber.
std::map<std::string, std::pair<long, long>> claimed_supports(int chamber) {
  auto t = chamber1_supports();
  if (chamber == 1) return t;
  if (chamber == 4) return swap_table(t);
  // chamber 2: two labels restated, the rest as in chamber 1
  t["1,1,1|-"] = {0, 1};
  t["-|3"] = {0, 0};
  if (chamber == 2) return t;
  return swap_table(t);  // chamber 3 = chamber 2 with components swapped
}

CrossingStep make_step(const FockParam& base, const std::vector<Rat>& src,
                       const std::vector<Rat>& tgt, const Wall& w) {
  CrossingStep step;
  step.wall = w;
  step.source_s = src;
  step.target_s = tgt;
  step.position_before = wall_position(w, base.with_charges(src)).sign();
  Rat before = src[static_cast<size_t>(w.i)] - src[static_cast<size_t>(w.j)];
  Rat after = tgt[static_cast<size_t>(w.i)] - tgt[static_cast<size_t>(w.j)];
  step.direction = (after - before).sign();
  step.t_cross = Rat(1, 2);
  return step;
}

// Transcribed wall-crossing claims for the wall between `chamber` and
// chamber+1, read in the chamber -> chamber+1 direction.
std::map<std::string, std::string> claimed_wc(int chamber) {
  std::map<std::string, std::string> out;
  for (const auto& lam : multipartitions_up_to(2, 3)) out[lam.str()] = lam.str();
  if (chamber == 1) {
    out["1,1,1|-"] = "-|3";
    out["-|3"] = "1,1,1|-";
  } else if (chamber == 2) {
    for (auto& [k, v] : out) v = swap_key(k);
  } else if (chamber == 3) {
    out["-|1,1,1"] = "3|-";
    out["3|-"] = "-|1,1,1";
  }
  return out;
}

const Wall kExampleWalls[3] = {Wall{0, 1, 2}, Wall{0, 1, 0}, Wall{0, 1, -2}};

void diff_against_allowlist(VerifyReport& rep, int chamber,
                            std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
                                diffs /* id -> (claimed, computed) */) {
  std::set<std::string> expected;
  for (const auto& e : example_allowlist())
    if (e.chamber == chamber) expected.insert(e.id);
  std::set<std::string> seen;
  for (const auto& [id, vals] : diffs) {
    seen.insert(id);
    if (expected.count(id))
      rep.notes.push_back("allowlisted diff " + id + ": transcribed " + vals.first +
                          ", computed " + vals.second);
    else
      rep.violations.push_back("unexpected diff " + id + ": transcribed " + vals.first +
                               ", computed " + vals.second);
  }
  for (const auto& id : expected)
    if (!seen.count(id))
      rep.violations.push_back("allowlisted diff did not occur: " + id);
}

}  // namespace

const std::vector<AllowlistEntry>& example_allowlist() {
  static const std::vector<AllowlistEntry> list = {
      {1, "arrow f1(-|2)", "-|2,1", "0",
       "Crystal creation operators are injective, and the table also asserts f1(-|1,1) = -|2,1. "
       "Two distinct sources cannot share the image -|2,1, and the residue-1 signature of -|2 "
       "is '-+', which cancels completely, so f1(-|2) must vanish. The other fifteen arrows "
       "confirm the conventions that force this."},
      {2, "p(1|2)", "0", "1",
       "Crossing the wall between chambers 1 and 2 intertwines the annihilation operators, and "
       "the crossing sends -|3 (depth 1 in chamber 1) to 1|2. Direct signature computation at "
       "s=(0,-2) confirms e_0(1|2) = -|2 there, so 1|2 cannot be singular in chamber 2."},
      {2, "p(1,1|1)", "2", "0",
       "The chamber 1 -> 2 crossing sends 1|2 (singular in chamber 1) to 1,1|1, so 1,1|1 is "
       "singular in chamber 2; its residue-0 and residue-1 signatures at s=(0,-2) reduce to "
       "all-plus, confirming depth 0."},
      {2, "q(1,1|1)", "0", "1",
       "The crossing preserves the level-1 crystal depth and q(1|2) = 1 in chamber 1. "
       "Independently, transporting 1,1|1 to the asymptotic chamber yields 1|2 whose second "
       "component (2) = 2*(1) has quotient size 1."},
      {2, "p(1,1,1|-)", "0", "2",
       "At s=(0,-2) the residue-0 signature of 1,1,1|- is '+-' (addable box of the empty "
       "second component before the removable box at content -2), so e_0 applies twice: "
       "1,1,1|- -> 1,1|- -> 1|-. The transcribed depth 0 contradicts the signature rule that "
       "reproduces all chamber-1 arrows."},
      {2, "q(1,1,1|-)", "1", "0",
       "Transport of 1,1,1|- across the wall to the asymptotic chamber gives 1,1|1 whose "
       "second component (1) is not divisible by 2; its quotient is empty. The transcribed "
       "q = 1 would violate the counting identity at n=3 as well, since 1|2 and 1,1|1 already "
       "account for the unique q=1 class."},
      {3, "p(2|1)", "0", "1", "Mirror image of the chamber-2 entry p(1|2) under component swap."},
      {3, "p(1|1,1)", "2", "0",
       "Mirror image of the chamber-2 entry p(1,1|1) under component swap."},
      {3, "q(1|1,1)", "0", "1",
       "Mirror image of the chamber-2 entry q(1,1|1) under component swap."},
      {3, "p(-|1,1,1)", "0", "2",
       "Mirror image of the chamber-2 entry p(1,1,1|-) under component swap."},
      {3, "q(-|1,1,1)", "1", "0",
       "Mirror image of the chamber-2 entry q(1,1,1|-) under component swap."},
      {1, "wc 1->2 (-|3)", "1,1,1|-", "1|2",
       "The crossing is a bijection intertwining the annihilation operators, so it must map "
       "the chamber-1 singulars {3|-, 1,1,1|-, 1|2} onto the chamber-2 singulars "
       "{3|-, -|3, 1,1|1}; -|3 has depth 1 in chamber 1 and is NOT singular there, so it "
       "cannot map to the singular 1,1,1|- claim. Following e_0 of -|3 through the crossing "
       "pins its image to 1|2. The transcribed two-cycle holds one direction at a time: the "
       "chamber 2 -> 1 crossing does send -|3 to 1,1,1|-."},
      {1, "wc 1->2 (1|2)", "1|2", "1,1|1",
       "1|2 is singular of q-depth 1 in chamber 1; its image must be singular of q-depth 1 in "
       "chamber 2, and 1,1|1 is the unique such label. Fixing 1|2 would contradict the "
       "intertwining property since 1|2 is not singular in chamber 2."},
      {1, "wc 1->2 (1,1|1)", "1,1|1", "1,1,1|-",
       "Forced by bijectivity once the other three size-3 images are pinned: the crossing "
       "restricted to size 3 is the four-cycle (1,1,1|- -> -|3 -> 1|2 -> 1,1|1 -> 1,1,1|-)."},
      {3, "wc 3->4 (-|1,1,1)", "3|-", "1|1,1",
       "Mirror image of the chamber-1 entry for -|3 under component swap; the transcribed "
       "exchange holds in the chamber 4 -> 3 direction."},
      {3, "wc 3->4 (1|1,1)", "1|1,1", "2|1",
       "Mirror image of the chamber-1 entry for 1|2 under component swap."},
      {3, "wc 3->4 (2|1)", "2|1", "3|-",
       "Mirror image of the chamber-1 entry for 1,1|1 under component swap."},
  };
  return list;
}

VerifyReport example_report(int chamber) {
  VerifyReport rep;
  rep.suite = "example";
  rep.bounds = "chamber " + std::to_string(chamber) + ", |lambda| <= 3";
  FockParam p = example_chamber_param(chamber);
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> diffs;

  if (chamber == 1) {
    // Wall layout and asymptotic flags.
    auto walls = essential_walls(p, 3);
    std::string got;
    for (const auto& w : walls) got += std::to_string(w.m) + " ";
    ++rep.checks;
    if (got != "-2 0 2 ")
      rep.violations.push_back("essential wall list is not m=-2,0,2: " + got);
    ++rep.checks;
    if (!is_asymptotic(p, 1, 3) ||
        !is_asymptotic(example_chamber_param(4).with_charges({Rat(0), Rat(4)}), 0, 3) ||
        is_asymptotic(example_chamber_param(2), 1, 3))
      rep.violations.push_back("asymptotic chamber flags disagree");

    // Sixteen creation arrows.
    for (const auto& a : kChamber1Arrows) {
      ++rep.checks;
      auto lam = Multipartition::parse(a.src);
      auto got_arrow = f_op(lam, Rat(a.z), p);
      std::string computed = got_arrow ? got_arrow->str() : "0";
      std::string claimed = *a.claimed ? a.claimed : "0";
      if (computed != claimed)
        diffs.push_back({"arrow f" + std::to_string(a.z) + "(" + a.src + ")",
                         {claimed, computed}});
    }
  }

  // Support table of the chamber.
  for (const auto& [key, pq] : claimed_supports(chamber)) {
    ++rep.checks;
    SupportResult s = support(Multipartition::parse(key), p);
    if (s.p != pq.first)
      diffs.push_back({"p(" + key + ")",
                       {std::to_string(pq.first), std::to_string(s.p)}});
    if (s.q != pq.second)
      diffs.push_back({"q(" + key + ")",
                       {std::to_string(pq.second), std::to_string(s.q)}});
  }

  // Wall-crossing table between this chamber and the next.
  if (chamber <= 3) {
    FockParam pn = example_chamber_param(chamber + 1);
    CrossingStep fwd = make_step(p, p.charges(), pn.charges(), kExampleWalls[chamber - 1]);
    for (const auto& [key, claimed] : claimed_wc(chamber)) {
      ++rep.checks;
      std::string computed = wc_wall(Multipartition::parse(key), fwd, p).str();
      if (computed != claimed)
        diffs.push_back({"wc " + std::to_string(chamber) + "->" + std::to_string(chamber + 1) +
                             " (" + key + ")",
                         {claimed, computed}});
    }
    // The transcribed exchanges do hold, one per crossing direction.
    CrossingStep back = make_step(p, pn.charges(), p.charges(), kExampleWalls[chamber - 1]);
    auto check_back = [&](const std::string& from, const std::string& to) {
      ++rep.checks;
      std::string computed = wc_wall(Multipartition::parse(from), back, p).str();
      if (computed != to)
        rep.violations.push_back("reverse crossing " + std::to_string(chamber + 1) + "->" +
                                 std::to_string(chamber) + " does not send " + from + " to " +
                                 to);
    };
    if (chamber == 1) check_back("-|3", "1,1,1|-");
    if (chamber == 2)
      for (const auto& lam : multipartitions_up_to(2, 3))
        check_back(lam.str(), swap_key(lam.str()));
    if (chamber == 3) check_back("-|1,1,1", "3|-");
  }

  diff_against_allowlist(rep, chamber, std::move(diffs));
  return rep;
}

VerifyReport verify_mutation_selftest() {
  VerifyReport rep;
  rep.suite = "mutation-selftest";
  rep.bounds = "chamber 1 arrows";
  FockParam p = example_chamber_param(1);

  // Engine truth for the sixteen arrows (with the corrected f1(-|2) = 0).
  auto engine_arrow = [&](const ArrowDatum& a, const CrystalConventions& conv) {
    auto lam = Multipartition::parse(a.src);
    auto r = f_op_with(lam, Rat(a.z), p, conv);
    return r ? r->str() : std::string("0");
  };
  CrystalConventions base;
  std::vector<std::pair<std::string, CrystalConventions>> mutations;
  {
    CrystalConventions m = base;
    m.content_x_minus_y = false;
    mutations.push_back({"content sign", m});
    m = base;
    m.ascending_v = false;
    mutations.push_back({"listing order", m});
    m = base;
    m.cancel_minus_plus = false;
    mutations.push_back({"cancellation direction", m});
  }
  // The unmutated seam must agree with the production operator everywhere.
  for (const auto& a : kChamber1Arrows) {
    ++rep.checks;
    auto lam = Multipartition::parse(a.src);
    auto prod = f_op(lam, Rat(a.z), p);
    if (engine_arrow(a, base) != (prod ? prod->str() : "0"))
      rep.violations.push_back("convention seam diverges from production at " +
                               std::string(a.src));
  }
  for (const auto& [name, conv] : mutations) {
    long broken = 0;
    for (const auto& a : kChamber1Arrows)
      if (engine_arrow(a, conv) != engine_arrow(a, base)) ++broken;
    ++rep.checks;
    if (broken == 0)
      rep.violations.push_back("flipping " + name + " breaks no calibration arrow");
    else
      rep.notes.push_back("flipping " + name + " breaks " + std::to_string(broken) +
                          " of 16 arrows");
  }
  return rep;
}

}  // namespace fockcryst
