#pragma once

#include <string>
#include <vector>

#include "fockcryst/verify.hpp"

namespace fockcryst {

enum class CrystalFlavor { KacMoody, Heisenberg };

// Directed creation graph on all multipartitions of size <= n_max. Nodes are
// multipartition strings; edges lambda -> f(lambda) are labeled by the
// residue (Kac-Moody) or by the quotient content (Heisenberg). Deterministic
// node and edge order.
std::string emit_crystal_dot(const FockParam& p, long n_max, CrystalFlavor which);

// Machine outputs. JSON documents carry "schema": "fockcryst/1".
std::string support_json(const FockParam& p, const Multipartition& lam, const SupportResult& res);
std::string table_tsv(const std::vector<TableRow>& rows);
std::string table_json(const FockParam& p, const std::vector<TableRow>& rows);
std::string walls_tsv(const FockParam& p, long n);
std::string walls_json(const FockParam& p, long n);
std::string finite_dims_json(const FockParam& p, long n, const std::vector<Multipartition>& out);
std::string wc_pair_tsv(long m, long n, int from_side);
std::string wc_pair_json(long m, long n, int from_side);
std::string report_json(const VerifyReport& rep);
std::string multipartition_json(const Multipartition& lam);
std::string dot_json(const std::string& dot);

// Labels i with f_inf(lam, i) != 0, in increasing order.
std::vector<long> heisenberg_creation_labels(const Multipartition& lam, const FockParam& p);

}  // namespace fockcryst
