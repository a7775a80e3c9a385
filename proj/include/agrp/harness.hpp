#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agrp/cayley.hpp"
#include "agrp/permgroup.hpp"

namespace agrp {

// -- construction DSL ----------------------------------------------------------
//
//   cyclic(n)  elab(p, k)  abelian(n1, ..., nk)  sym(n)  alt(n)      n <= 6 for sym/alt
//   direct(e1, e2, ...)
//   semidirect(eA, eH, pow(k))         every generator of H acts by a -> a^k
//   semidirect(eA, eH, mat(M1, ...))   one matrix per generator of H, rows are
//                                      the images of the coordinate generators
//                                      of A (which must be cyclic/elab/abelian)
//   table("file")  relabel(e)  relabel(e, seed)
//
// Generators of H are small_generating_set(H).

struct BuildOptions {
  int max_order = 4096;
  /// Seed for relabel(e) without an explicit seed.
  std::uint64_t seed = 1;
  /// Directory for relative table() paths.
  std::string base_dir;
};

/// InvalidInput on parse errors, invalid actions and bad tables;
/// ResourceExhausted past max_order.
CayleyGroup build_group(const std::string& expr, const BuildOptions& opts = {});

// -- brute-force oracles -------------------------------------------------------

struct OracleStats {
  std::uint64_t nodes = 0;
  std::vector<Elem> generators;
};

/// Backtracking over images of a short generating sequence of G (at most
/// log2|G| elements). Exact, or ResourceExhausted past `budget` nodes.
std::optional<std::vector<Elem>> oracle_iso(const CayleyGroup& G, const CayleyGroup& H, std::uint64_t budget,
                                            OracleStats* stats = nullptr);
PermGroup oracle_aut(const CayleyGroup& G, std::uint64_t budget);

// -- manifests and acceptance ----------------------------------------------------

/// `expr ; key=value ; ...` per line, `#` comments. A line `!criteria all`
/// or `!criteria 1,3` selects acceptance criteria.
struct ManifestEntry {
  int line = 0;
  std::string expr;
  std::map<std::string, std::string> expect;
};
struct Manifest {
  std::vector<ManifestEntry> entries;
  std::vector<int> criteria;
  std::string base_dir;
};
Manifest parse_manifest(std::istream& in, const std::string& base_dir = {});
Manifest read_manifest_file(const std::string& path);

struct ReportLine {
  std::string id;  // "entry:<line>" or "criterion:<k>"
  bool pass = false;
  std::string detail;
  double seconds = 0;
};
struct AcceptanceReport {
  std::vector<ReportLine> lines;
  bool ok() const;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  /// Node budget for the oracle side of the scaling check.
  std::uint64_t oracle_budget = 100000000;
  /// Executable used by the determinism check; in-process when empty.
  std::string cli_path;
  /// Run criteria concurrently.
  bool parallel = true;
};
AcceptanceReport run_acceptance(const Manifest& m, const AcceptanceOptions& opts = {});

/// The `agrp` command line. Exit codes: 0 success, 1 invalid input or
/// usage, 3 resource exhausted, 4 acceptance failure, 5 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agrp
