// Command line front end: support / table / finite-dims / crystal / heis /
// wc / walls / verify. Exit codes: 0 ok, 1 usage, 2 computation error,
// 3 verification diff.

#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "fockcryst/emit.hpp"
#include "fockcryst/errors.hpp"
#include "fockcryst/verify.hpp"

using namespace fockcryst;

namespace {

struct ParamFlags {
  std::string kappa;
  std::string charges;
  FockParam parse() const { return FockParam::parse(kappa, charges); }
};

void add_param_flags(CLI::App* cmd, ParamFlags& out) {
  cmd->add_option("--kappa", out.kappa, "rational p/q, 0, or generic-neg")->required();
  cmd->add_option("--s", out.charges, "comma-separated rational charges")->required();
}

std::map<std::string, long> parse_bounds(const std::string& text) {
  std::map<std::string, long> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw fockcryst::ParseError("bad bounds entry '" + tok + "', expected key=value");
    out[tok.substr(0, eq)] = std::stol(tok.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string trace_text(const SupportResult& r) {
  std::string out;
  for (const auto& t : r.trace) out += "  " + t + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "support invariants, crystals and wall-crossing bijections on charged "
      "multipartitions"};
  app.require_subcommand(1);

  // ---- support ----
  ParamFlags sup_param;
  std::string sup_lambda;
  bool sup_json = false;
  auto* sup = app.add_subcommand("support", "compute (p, q) for one label");
  add_param_flags(sup, sup_param);
  sup->add_option("--lambda", sup_lambda, "multipartition, e.g. 1,1|3")->required();
  sup->add_flag("--json", sup_json, "emit a JSON document");

  // ---- table ----
  ParamFlags tab_param;
  long tab_n = 0;
  std::string tab_format = "tsv";
  auto* tab = app.add_subcommand("table", "tabulate supports for all |lambda| <= n");
  add_param_flags(tab, tab_param);
  tab->add_option("--n", tab_n, "size bound")->required();
  tab->add_option("--format", tab_format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  bool tab_json = false;
  tab->add_flag("--json", tab_json, "shorthand for --format json");

  // ---- finite-dims ----
  ParamFlags fd_param;
  long fd_n = 0;
  bool fd_json = false;
  auto* fd = app.add_subcommand("finite-dims", "labels of size n with support {0}");
  add_param_flags(fd, fd_param);
  fd->add_option("--n", fd_n, "size")->required();
  fd->add_flag("--json", fd_json, "emit a JSON document");

  // ---- crystal ----
  auto* cry = app.add_subcommand("crystal", "signature-rule crystal operations");
  cry->require_subcommand(1);
  ParamFlags cry_param;
  std::string cry_op = "e", cry_z = "0", cry_lambda;
  bool cry_json = false;
  auto* cry_apply = cry->add_subcommand("apply", "apply e or f at a residue");
  add_param_flags(cry_apply, cry_param);
  cry_apply->add_option("--op", cry_op, "e or f")->check(CLI::IsMember({"e", "f"}));
  cry_apply->add_option("--z", cry_z, "residue representative (rational)")->required();
  cry_apply->add_option("--lambda", cry_lambda)->required();
  cry_apply->add_flag("--json", cry_json);

  ParamFlags dep_param;
  std::string dep_lambda;
  bool dep_json = false;
  auto* cry_depth = cry->add_subcommand("depth", "depth in the signature-rule crystal");
  add_param_flags(cry_depth, dep_param);
  cry_depth->add_option("--lambda", dep_lambda)->required();
  cry_depth->add_flag("--json", dep_json);

  ParamFlags gr_param;
  long gr_n = 0;
  std::string gr_which = "km";
  bool gr_json = false;
  auto* cry_graph = cry->add_subcommand("graph", "emit the creation graph as DOT");
  add_param_flags(cry_graph, gr_param);
  cry_graph->add_option("--n", gr_n, "size bound")->required();
  cry_graph->add_option("--which", gr_which, "km or heis")->check(CLI::IsMember({"km", "heis"}));
  cry_graph->add_flag("--json", gr_json, "wrap the DOT text in a JSON envelope");

  // ---- heis ----
  auto* heis = app.add_subcommand("heis", "level-1 crystal operations");
  heis->require_subcommand(1);
  ParamFlags ha_param;
  std::string ha_op = "e", ha_lambda;
  long ha_i = 0;
  bool ha_json = false;
  auto* heis_apply = heis->add_subcommand("apply", "apply a level-1 operator");
  add_param_flags(heis_apply, ha_param);
  heis_apply->add_option("--op", ha_op, "e or f")->check(CLI::IsMember({"e", "f"}));
  heis_apply->add_option("--i", ha_i, "integer label")->required();
  heis_apply->add_option("--lambda", ha_lambda)->required();
  heis_apply->add_flag("--json", ha_json);

  ParamFlags hq_param;
  std::string hq_lambda;
  bool hq_json = false;
  auto* heis_q = heis->add_subcommand("q", "depth in the level-1 crystal");
  add_param_flags(heis_q, hq_param);
  heis_q->add_option("--lambda", hq_lambda)->required();
  heis_q->add_flag("--json", hq_json);

  // ---- wc ----
  auto* wc = app.add_subcommand("wc", "wall-crossing bijections");
  wc->require_subcommand(1);
  long wcp_m = 0, wcp_n = 0;
  int wcp_side = 1;
  bool wcp_json = false;
  auto* wc_pair_cmd = wc->add_subcommand("pair", "tabulate the two-slot bijection on size n");
  wc_pair_cmd->add_option("--m", wcp_m, "label shift of the second slot")->required();
  wc_pair_cmd->add_option("--n", wcp_n, "size")->required();
  wc_pair_cmd->add_option("--from-side", wcp_side, "listing order of the source, 1 or 2")
      ->check(CLI::Range(1, 2));
  wc_pair_cmd->add_flag("--json", wcp_json);

  long wt_e = 2;
  std::string wt_lambda;
  bool wt_json = false;
  auto* wc_typea = wc->add_subcommand("typea", "one-row crossing");
  wc_typea->add_option("--e", wt_e, "denominator")->required();
  wc_typea->add_option("--lambda", wt_lambda, "partition")->required();
  wc_typea->add_flag("--json", wt_json);

  ParamFlags tr_param;
  int tr_j = 1;
  std::string tr_lambda;
  bool tr_json = false;
  auto* wc_tr = wc->add_subcommand("transport", "carry a label to an asymptotic chamber");
  add_param_flags(wc_tr, tr_param);
  wc_tr->add_option("--to-asymptotic", tr_j, "distinguished component, 1-based")->required();
  wc_tr->add_option("--lambda", tr_lambda)->required();
  wc_tr->add_flag("--json", tr_json);

  // ---- walls ----
  ParamFlags wl_param;
  long wl_n = 0;
  bool wl_json = false;
  auto* wl = app.add_subcommand("walls", "essential walls as TSV");
  add_param_flags(wl, wl_param);
  wl->add_option("--n", wl_n, "size bound")->required();
  wl->add_flag("--json", wl_json);

  // ---- verify ----
  std::string vf_suite, vf_bounds;
  ParamFlags vf_param;
  int vf_chamber = 0;
  bool vf_json = false;
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("--suite", vf_suite, "axioms | counting | wilcox | example")
      ->required()
      ->check(CLI::IsMember({"axioms", "counting", "wilcox", "example"}));
  vf->add_option("--bounds", vf_bounds, "key=value list, e.g. e=2,n=8");
  vf->add_option("--kappa", vf_param.kappa, "parameter for axioms/counting");
  vf->add_option("--s", vf_param.charges, "charges for axioms/counting");
  vf->add_option("--chamber", vf_chamber, "calibration chamber 1..4 (example suite)");
  vf->add_flag("--json", vf_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sup) {
      FockParam p = sup_param.parse();
      Multipartition lam = Multipartition::parse(sup_lambda);
      SupportResult r = support(lam, p);
      if (sup_json) {
        std::cout << support_json(p, lam, r);
      } else {
        std::cout << "lambda " << lam.str() << "  n " << r.n << "  p " << r.p << "  q " << r.q
                  << "  dim " << r.dim() << "  finite_dim " << (r.finite_dim ? "true" : "false")
                  << "\n"
                  << trace_text(r);
      }
    } else if (*tab) {
      FockParam p = tab_param.parse();
      auto rows = support_table(p, tab_n);
      bool json = tab_json || tab_format == "json";
      std::cout << (json ? table_json(p, rows) : table_tsv(rows));
    } else if (*fd) {
      FockParam p = fd_param.parse();
      auto out = finite_dims(p, fd_n);
      if (fd_json) {
        std::cout << finite_dims_json(p, fd_n, out);
      } else {
        for (const auto& lam : out) std::cout << lam.str() << "\n";
      }
    } else if (*cry_apply) {
      FockParam p = cry_param.parse();
      Multipartition lam = Multipartition::parse(cry_lambda);
      Rat z = residue_of_content(Rat::parse(cry_z), p);
      auto r = cry_op == "e" ? e_op(lam, z, p) : f_op(lam, z, p);
      std::string text = r ? r->str() : "0";
      if (cry_json)
        std::cout << (r ? multipartition_json(*r) : std::string("{\"lambda\": null}\n"));
      else
        std::cout << text << "\n";
    } else if (*cry_depth) {
      FockParam p = dep_param.parse();
      Multipartition lam = Multipartition::parse(dep_lambda);
      long d = depth(lam, p);
      if (dep_json)
        std::cout << "{\"schema\": \"fockcryst/1\", \"depth\": " << d << "}\n";
      else
        std::cout << d << "\n";
    } else if (*cry_graph) {
      FockParam p = gr_param.parse();
      std::string dot = emit_crystal_dot(
          p, gr_n, gr_which == "km" ? CrystalFlavor::KacMoody : CrystalFlavor::Heisenberg);
      if (gr_json)
        std::cout << dot_json(dot);
      else
        std::cout << dot;
    } else if (*heis_apply) {
      FockParam p = ha_param.parse();
      Multipartition lam = Multipartition::parse(ha_lambda);
      auto r = ha_op == "e" ? e_inf(lam, ha_i, p) : f_inf(lam, ha_i, p);
      if (ha_json)
        std::cout << (r ? multipartition_json(*r) : std::string("{\"lambda\": null}\n"));
      else
        std::cout << (r ? r->str() : "0") << "\n";
    } else if (*heis_q) {
      FockParam p = hq_param.parse();
      Multipartition lam = Multipartition::parse(hq_lambda);
      long q = q_depth(lam, p);
      if (hq_json)
        std::cout << "{\"schema\": \"fockcryst/1\", \"q\": " << q << "}\n";
      else
        std::cout << q << "\n";
    } else if (*wc_pair_cmd) {
      std::cout << (wcp_json ? wc_pair_json(wcp_m, wcp_n, wcp_side)
                             : wc_pair_tsv(wcp_m, wcp_n, wcp_side));
    } else if (*wc_typea) {
      Partition lam = Partition::parse(wt_lambda);
      Partition r = wc_type_a(lam, wt_e);
      if (wt_json)
        std::cout << "{\"schema\": \"fockcryst/1\", \"image\": \"" << r.str() << "\"}\n";
      else
        std::cout << r.str() << "\n";
    } else if (*wc_tr) {
      FockParam p = tr_param.parse();
      Multipartition lam = Multipartition::parse(tr_lambda);
      if (tr_j < 1 || tr_j > p.ell()) throw fockcryst::ComputationError("component index out of range");
      PlannedPath path = plan_path(p, tr_j - 1, lam.boxes());
      Multipartition moved = transport(lam, path.steps, p);
      if (tr_json) {
        std::cout << multipartition_json(moved);
      } else {
        std::cout << moved.str() << "\n";
        std::string charges;
        for (size_t k = 0; k < path.target_s.size(); ++k) {
          if (k) charges += ",";
          charges += path.target_s[k].str();
        }
        std::cout << "target charges " << charges << " after " << path.steps.size()
                  << " crossing(s)\n";
      }
    } else if (*wl) {
      FockParam p = wl_param.parse();
      std::cout << (wl_json ? walls_json(p, wl_n) : walls_tsv(p, wl_n));
    } else if (*vf) {
      auto bounds = parse_bounds(vf_bounds);
      std::vector<VerifyReport> reports;
      if (vf_suite == "axioms") {
        FockParam p = vf_param.parse();
        reports.push_back(verify_crystal_axioms(p, bounds.count("n") ? bounds["n"] : 5));
      } else if (vf_suite == "counting") {
        FockParam p = vf_param.parse();
        reports.push_back(verify_counting(p, bounds.count("n") ? bounds["n"] : 6));
      } else if (vf_suite == "wilcox") {
        reports.push_back(verify_wilcox(bounds.count("e") ? bounds["e"] : 2,
                                        bounds.count("n") ? bounds["n"] : 8));
      } else {
        if (vf_chamber != 0)
          reports.push_back(example_report(vf_chamber));
        else
          for (int c = 1; c <= 4; ++c) reports.push_back(example_report(c));
        reports.push_back(verify_mutation_selftest());
      }
      bool ok = true;
      for (const auto& r : reports) {
        std::cout << (vf_json ? report_json(r) : r.render());
        ok = ok && r.ok();
      }
      if (!ok) return 3;
    }
  } catch (const fockcryst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
