#include "fockcryst/emit.hpp"

#include <json.hpp>

#include "fockcryst/errors.hpp"

namespace fockcryst {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "fockcryst/1";

json param_json(const FockParam& p) {
  json j;
  j["kappa"] = p.rational_kappa() ? p.kappa().str() : std::string("generic-neg");
  std::vector<std::string> charges;
  for (const auto& s : p.charges()) charges.push_back(s.str());
  j["s"] = charges;
  return j;
}

json row_json(const TableRow& row) {
  json j;
  j["lambda"] = row.lam.str();
  j["n"] = row.res.n;
  j["p"] = row.res.p;
  j["q"] = row.res.q;
  j["dim"] = row.res.dim();
  j["finite_dim"] = row.res.finite_dim;
  j["trace"] = row.res.trace;
  return j;
}

}  // namespace

std::vector<long> heisenberg_creation_labels(const Multipartition& lam, const FockParam& p) {
  // Candidate labels are the addable contents of the transported head's
  // quotient; f_inf re-derives the same data, so just probe those.
  const int j = asymptotic_target(p);
  PlannedPath path = plan_path(p, j, lam.boxes() + p.denominator_e());
  FockParam pt = p.with_charges(path.target_s);
  Multipartition moved = transport(lam, path.steps, p);
  AscentResult up = ascend_to_singular(moved, pt);
  auto [quot, rem] = div_rem_e(up.head.comp(j), p.denominator_e());
  std::vector<long> labels;
  if (rem.empty())
    for (const auto& b : addable_boxes(quot)) labels.push_back(unshifted_content(b));
  return labels;
}

std::string emit_crystal_dot(const FockParam& p, long n_max, CrystalFlavor which) {
  std::string name = which == CrystalFlavor::KacMoody ? "km_crystal" : "heis_crystal";
  std::string out = "digraph " + name + " {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  auto nodes = multipartitions_up_to(p.ell(), n_max);
  for (const auto& lam : nodes) out += "  \"" + lam.str() + "\";\n";
  for (const auto& lam : nodes) {
    if (which == CrystalFlavor::KacMoody) {
      if (lam.boxes() + 1 > n_max) continue;
      for (const Rat& z : residues_present(lam, p))
        if (auto up = f_op(lam, z, p))
          out += "  \"" + lam.str() + "\" -> \"" + up->str() + "\" [label=\"" + z.str() +
                 "\"];\n";
    } else {
      if (lam.boxes() + p.denominator_e() > n_max) continue;
      for (long i : heisenberg_creation_labels(lam, p))
        if (auto up = f_inf(lam, i, p))
          out += "  \"" + lam.str() + "\" -> \"" + up->str() + "\" [label=\"" +
                 std::to_string(i) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string support_json(const FockParam& p, const Multipartition& lam,
                         const SupportResult& res) {
  json j;
  j["schema"] = kSchema;
  j["parameter"] = param_json(p);
  j["lambda"] = lam.str();
  j["n"] = res.n;
  j["p"] = res.p;
  j["q"] = res.q;
  j["dim"] = res.dim();
  j["finite_dim"] = res.finite_dim;
  j["trace"] = res.trace;
  return j.dump(2) + "\n";
}

std::string table_tsv(const std::vector<TableRow>& rows) {
  std::string out = "lambda\tn\tp\tq\tdim\tfinite_dim\n";
  for (const auto& r : rows)
    out += r.lam.str() + "\t" + std::to_string(r.res.n) + "\t" + std::to_string(r.res.p) + "\t" +
           std::to_string(r.res.q) + "\t" + std::to_string(r.res.dim()) + "\t" +
           (r.res.finite_dim ? "true" : "false") + "\n";
  return out;
}

std::string table_json(const FockParam& p, const std::vector<TableRow>& rows) {
  json j;
  j["schema"] = kSchema;
  j["parameter"] = param_json(p);
  j["rows"] = json::array();
  for (const auto& r : rows) j["rows"].push_back(row_json(r));
  return j.dump(2) + "\n";
}

std::string walls_tsv(const FockParam& p, long n) {
  std::string out = "i\tj\tm\tposition\n";
  for (const auto& w : essential_walls(p, n))
    out += std::to_string(w.i + 1) + "\t" + std::to_string(w.j + 1) + "\t" + std::to_string(w.m) +
           "\t" + wall_position(w, p).str() + "\n";
  return out;
}

std::string walls_json(const FockParam& p, long n) {
  json j;
  j["schema"] = kSchema;
  j["parameter"] = param_json(p);
  j["walls"] = json::array();
  for (const auto& w : essential_walls(p, n)) {
    json wj;
    wj["i"] = w.i + 1;
    wj["j"] = w.j + 1;
    wj["m"] = w.m;
    wj["position"] = wall_position(w, p).str();
    j["walls"].push_back(wj);
  }
  return j.dump(2) + "\n";
}

std::string finite_dims_json(const FockParam& p, long n,
                             const std::vector<Multipartition>& out) {
  json j;
  j["schema"] = kSchema;
  j["parameter"] = param_json(p);
  j["n"] = n;
  j["finite_dimensional"] = json::array();
  for (const auto& lam : out) j["finite_dimensional"].push_back(lam.str());
  return j.dump(2) + "\n";
}

namespace {

std::vector<std::pair<std::string, std::string>> wc_pair_rows(long m, long n, int from_side) {
  if (from_side != 1 && from_side != 2) throw ComputationError("from-side must be 1 or 2");
  PairSide side = from_side == 1 ? PairSide::FirstSlot : PairSide::SecondSlot;
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& lam : multipartitions_of(2, n)) {
    PartitionPair pr{lam.comp(0), lam.comp(1)};
    PartitionPair img = wc_pair(pr, m, side);
    rows.push_back({lam.str(), img.first.str() + "|" + img.second.str()});
  }
  return rows;
}

}  // namespace

std::string wc_pair_tsv(long m, long n, int from_side) {
  std::string out = "lambda\timage\n";
  for (const auto& [k, v] : wc_pair_rows(m, n, from_side)) out += k + "\t" + v + "\n";
  return out;
}

std::string wc_pair_json(long m, long n, int from_side) {
  json j;
  j["schema"] = kSchema;
  j["m"] = m;
  j["n"] = n;
  j["from_side"] = from_side;
  j["map"] = json::array();
  for (const auto& [k, v] : wc_pair_rows(m, n, from_side)) {
    json e;
    e["lambda"] = k;
    e["image"] = v;
    j["map"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string report_json(const VerifyReport& rep) {
  json j;
  j["schema"] = kSchema;
  j["suite"] = rep.suite;
  j["bounds"] = rep.bounds;
  j["checks"] = rep.checks;
  j["notes"] = rep.notes;
  j["violations"] = rep.violations;
  j["ok"] = rep.ok();
  return j.dump(2) + "\n";
}

std::string multipartition_json(const Multipartition& lam) {
  json j;
  j["schema"] = kSchema;
  j["lambda"] = lam.str();
  j["n"] = lam.boxes();
  return j.dump(2) + "\n";
}

std::string dot_json(const std::string& dot) {
  json j;
  j["schema"] = kSchema;
  j["dot"] = dot;
  return j.dump(2) + "\n";
}

}  // namespace fockcryst
