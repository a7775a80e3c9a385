#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "agrp/autgroup.hpp"
#include "agrp/harness.hpp"
#include "agrp/reductions.hpp"

namespace agrp {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  int max_order = 4096;
  std::uint64_t oracle_budget = 100000000;
};

CayleyGroup load(const std::string& arg, const Globals& g) {
  if (std::filesystem::is_regular_file(arg)) {
    CayleyGroup G = read_group_file(arg);
    if (G.order() > g.max_order) throw ResourceExhausted(arg + ": order exceeds --max-order");
    return G;
  }
  BuildOptions bo;
  bo.max_order = g.max_order;
  bo.seed = g.seed;
  return build_group(arg, bo);
}

void print_images(std::ostream& out, const std::vector<Elem>& f) {
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
  out << "\n";
}

AgenOracle seeded_agen(const Globals& g) {
  return [seed = g.seed](const CayleyGroup& X) {
    if (!is_agroup(X)) return aut_bruteforce(X);
    AutOptions o;
    o.intertwiner.seed = seed;
    return aut_agroup(X, o).aut;
  };
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups and isomorphism of A-groups given by Cayley tables", "agrp"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for relabel() and randomized substitutes");
  app.add_option("--max-order", g.max_order, "largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--oracle-budget", g.oracle_budget, "node budget for the brute-force oracles");

  std::string expr, out_file, manifest, cli_path;
  std::vector<std::string> groups;
  bool sequential = false;

  auto* gen = app.add_subcommand("gen", "build a group from a DSL expression");
  gen->add_option("expr", expr, "DSL expression")->required();
  gen->add_option("-o,--output", out_file, "table file to write");

  auto pair_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("groups", groups, "two table files or DSL expressions")->required()->expected(2);
    return c;
  };
  auto single_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("group", groups, "table file or DSL expression")->required()->expected(1);
    return c;
  };
  auto* iso = pair_cmd("iso", "decide isomorphism");
  auto* imap = pair_cmd("imap", "find an isomorphism");
  auto* icount = pair_cmd("icount", "count isomorphisms");
  auto* acount = single_cmd("acount", "order of Aut(G)");
  auto* apart = single_cmd("apart", "orbits of Aut(G) on G");
  auto* aut = single_cmd("aut", "generators of Aut(G)");
  auto* oiso = pair_cmd("oracle-iso", "brute-force isomorphism search");
  auto* oaut = single_cmd("oracle-aut", "brute-force automorphism group");
  auto* accept = app.add_subcommand("accept", "run an acceptance manifest");
  accept->add_option("manifest", manifest, "manifest file")->required();
  accept->add_option("--cli", cli_path, "executable for the determinism check (default: this one)");
  accept->add_flag("--sequential", sequential, "run criteria one at a time");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "agrp: " << e.what() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) {
      BuildOptions bo;
      bo.max_order = g.max_order;
      bo.seed = g.seed;
      const CayleyGroup G = build_group(expr, bo);
      if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw InvalidInput("cannot write " + out_file);
        write_group(f, G);
        if (g.json) emit(out, {{"file", out_file}, {"order", G.order()}, {"agroup", is_agroup(G)}});
        else out << "wrote " << out_file << " (order " << G.order() << ")\n";
      } else if (g.json) {
        emit(out, {{"order", G.order()}, {"agroup", is_agroup(G)}, {"table", G.table()}});
      } else {
        write_group(out, G);
      }
      return 0;
    }
    const auto agen = seeded_agen(g);
    const auto count = acount_from(agen);
    if (iso->parsed() || icount->parsed()) {
      const CayleyGroup G = load(groups[0], g), H = load(groups[1], g);
      if (iso->parsed()) {
        const bool r = grp_iso(G, H, count);
        if (g.json) emit(out, {{"isomorphic", r}});
        else out << (r ? "isomorphic" : "not isomorphic") << "\n";
      } else {
        const std::uint64_t n = grp_icount(G, H, count);
        if (g.json) emit(out, {{"isomorphisms", n}});
        else out << n << "\n";
      }
      return 0;
    }
    if (imap->parsed() || oiso->parsed()) {
      const CayleyGroup G = load(groups[0], g), H = load(groups[1], g);
      OracleStats st;
      const auto f = imap->parsed() ? grp_imap(G, H, agen) : oracle_iso(G, H, g.oracle_budget, &st);
      if (g.json) {
        json j{{"isomorphic", f.has_value()}};
        if (f) j["images"] = *f;
        if (oiso->parsed()) j["nodes"] = st.nodes;
        emit(out, j);
      } else {
        out << (f ? "isomorphic" : "not isomorphic") << "\n";
        if (f) print_images(out, *f);
        if (oiso->parsed()) out << "nodes " << st.nodes << "\n";
      }
      return 0;
    }
    if (acount->parsed()) {
      const std::uint64_t n = grp_acount(load(groups[0], g), agen);
      if (g.json) emit(out, {{"order", n}});
      else out << n << "\n";
      return 0;
    }
    if (apart->parsed()) {
      const auto parts = grp_apart(load(groups[0], g), agen);
      if (g.json) {
        emit(out, {{"orbits", parts}});
      } else {
        out << parts.size() << " orbits\n";
        for (const auto& o : parts) print_images(out, o);
      }
      return 0;
    }
    if (aut->parsed() || oaut->parsed()) {
      const CayleyGroup G = load(groups[0], g);
      PermGroup P;
      std::string method = "brute-force";
      bool randomized = false;
      json levels = json::array();
      if (aut->parsed() && is_agroup(G)) {
        AutOptions o;
        o.intertwiner.seed = g.seed;
        AutResult r = aut_agroup(G, o);
        P = std::move(r.aut);
        method = method_name(r.method);
        randomized = r.randomized;
        for (const auto& l : r.levels)
          levels.push_back({{"order", l.order}, {"method", method_name(l.method)}, {"complement", l.complement_order}});
      } else {
        P = oaut->parsed() ? oracle_aut(G, g.oracle_budget) : aut_bruteforce(G);
      }
      if (g.json) {
        emit(out, {{"order", P.order()}, {"method", method}, {"randomized", randomized}, {"levels", levels},
                   {"generators", P.generators()}});
      } else {
        out << "order " << P.order() << "\nmethod " << method << (randomized ? " (randomized)" : "") << "\n";
        out << P.generators().size() << " generators\n";
        for (const auto& f : P.generators()) print_images(out, f);
      }
      return 0;
    }
    if (accept->parsed()) {
      const Manifest m = read_manifest_file(manifest);
      AcceptanceOptions o;
      o.seed = g.seed;
      o.oracle_budget = g.oracle_budget;
      o.parallel = !sequential;
      o.cli_path = cli_path;
      if (o.cli_path.empty() && std::filesystem::exists("/proc/self/exe"))
        o.cli_path = std::filesystem::read_symlink("/proc/self/exe").string();
      const AcceptanceReport r = run_acceptance(m, o);
      if (g.json) {
        json j = json::array();
        for (const auto& l : r.lines)
          j.push_back({{"id", l.id}, {"pass", l.pass}, {"detail", l.detail}, {"seconds", l.seconds}});
        emit(out, {{"ok", r.ok()}, {"results", j}});
      } else {
        for (const auto& l : r.lines)
          out << (l.pass ? "PASS " : "FAIL ") << l.id << "  " << l.detail << "  [" << l.seconds << " s]\n";
      }
      return r.ok() ? 0 : 4;
    }
  } catch (const InvalidInput& e) {
    err << "agrp: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const ResourceExhausted& e) {
    err << "agrp: resource exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "agrp: internal error: " << e.what() << "\n";
    return 5;
  }
  return 1;
}

}  // namespace agrp
