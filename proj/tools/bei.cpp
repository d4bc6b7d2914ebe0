#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bei/conjecture.hpp"
#include "bei/corner.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/koszul.hpp"
#include "bei/lcm_lattice.hpp"
#include "bei/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;    // verification failure or conjecture inequality
constexpr int kExitUndecided = 3;  // cap refusal

struct GraphSource {
  std::string family;
  int n = 0;
  int m = 0;
  std::string edges_file;
};

struct CommonOpts {
  long long field = 32003;
  long long caps = 20000;
  int threads = 1;
  std::string format = "text";
};

struct ResolvedGraph {
  bei::Graph g;
  bool is_cycle = false;
  bool is_kmn = false;
  int m = 0;
  int n = 0;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family, "graph family: cycle or kmn")
      ->check(CLI::IsMember({"cycle", "kmn"}));
  cmd->add_option("--n", src.n, "cycle length, or n of K_{m,n}");
  cmd->add_option("--m", src.m, "m of K_{m,n} (m >= n)");
  cmd->add_option("--edges", src.edges_file, "graph file: line 1 is the vertex count, then 'u v' lines");
}

void add_common_options(CLI::App* cmd, CommonOpts& opts, bool with_format = true) {
  cmd->add_option("--field", opts.field, "prime modulus for the oracles (default 32003)");
  cmd->add_option("--caps", opts.caps, "max Koszul spot dimension in columns (default 20000)");
  cmd->add_option("--threads", opts.threads, "worker threads; never changes output bytes")
      ->check(CLI::Range(1, 256));
  if (with_format)
    cmd->add_option("--format", opts.format, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

ResolvedGraph resolve_graph(const CLI::App* cmd, const GraphSource& src) {
  const bool has_family = cmd->count("--family") > 0;
  const bool has_edges = cmd->count("--edges") > 0;
  if (has_family == has_edges)
    throw bei::Error("exactly one graph source is required: --family cycle|kmn or --edges FILE");

  ResolvedGraph r;
  if (has_edges) {
    if (cmd->count("--n") || cmd->count("--m"))
      throw bei::Error("--n/--m cannot be combined with --edges");
    r.g = bei::load_graph_file(src.edges_file);
    return r;
  }
  if (src.family == "cycle") {
    if (!cmd->count("--n")) throw bei::Error("--family cycle requires --n");
    if (cmd->count("--m")) throw bei::Error("--m applies only to --family kmn");
    r.g = bei::make_cycle(src.n);
    r.is_cycle = true;
    r.n = src.n;
  } else {
    if (!cmd->count("--m") || !cmd->count("--n")) throw bei::Error("--family kmn requires --m and --n");
    r.g = bei::make_complete_bipartite(src.m, src.n);
    r.is_kmn = true;
    r.m = src.m;
    r.n = src.n;
  }
  return r;
}

bei::OracleConfig oracle_config(const CommonOpts& opts) {
  bei::OracleConfig cfg;
  cfg.field = bei::FieldPrime{opts.field};
  cfg.spot_cap = opts.caps;
  cfg.threads = opts.threads;
  return cfg;
}

bei::BettiTable trivial_table(const std::string& subject) {
  bei::BettiTable t;
  t.subject = subject;
  t.add(0, 0, 1);
  return t;
}

struct BettiOpts {
  GraphSource src;
  CommonOpts common;
  std::string side = "initial";
  std::string method;
  int i_max = -1;
  int j_max = -1;
};

bei::BettiTable initial_side_table(const ResolvedGraph& rg, const std::string& method,
                                   const BettiOpts& o, const bei::OracleConfig& cfg) {
  if (method == "formula") {
    if (!rg.is_kmn) throw bei::Error("--method formula applies only to --family kmn");
    bei::BettiTable t = bei::betti_numbers_closed_form(rg.m, rg.n);
    t.subject = "S/ini(J_G)";
    return t;
  }
  if (rg.g.edges.empty()) return trivial_table("S/ini(J_G)");
  if (method == "lcm") {
    bei::BettiTable t = bei::lcm_lattice_betti(bei::initial_ideal(rg.g), cfg);
    t.subject = "S/ini(J_G)";
    return t;
  }
  // koszul, lead-only
  const bei::KoszulInput in = bei::koszul_input_from_monomial_ideal(bei::initial_ideal(rg.g));
  const int nv = 2 * rg.g.n;
  bei::BettiTable t =
      bei::koszul_betti(in, o.i_max >= 0 ? o.i_max : nv, o.j_max >= 0 ? o.j_max : nv - 2, cfg);
  t.subject = "S/ini(J_G)";
  return t;
}

bei::BettiTable binomial_side_table(const ResolvedGraph& rg, const BettiOpts& o,
                                    const bei::OracleConfig& cfg) {
  if (rg.g.edges.empty()) return trivial_table("S/J_G");
  const bei::KoszulInput in = bei::koszul_input_from_graph(rg.g);
  const int nv = 2 * rg.g.n;
  bei::BettiTable t =
      bei::koszul_betti(in, o.i_max >= 0 ? o.i_max : nv, o.j_max >= 0 ? o.j_max : nv - 2, cfg);
  t.subject = "S/J_G";
  return t;
}

int cmd_betti(const CLI::App* cmd, const BettiOpts& o) {
  const ResolvedGraph rg = resolve_graph(cmd, o.src);
  const bei::OracleConfig cfg = oracle_config(o.common);
  const bei::OutputFormat fmt = bei::parse_output_format(o.common.format);

  std::string method = o.method;
  if (method.empty()) method = (o.side == "initial") ? "lcm" : "koszul";

  if (o.side != "initial" && method != "koszul")
    throw bei::Error("--side " + o.side + " supports only --method koszul");
  if ((o.i_max >= 0 || o.j_max >= 0) && method != "koszul")
    throw bei::Error("--i-max/--j-max apply only to --method koszul");

  if (method == "mapping-cone") {
    if (!rg.is_cycle) throw bei::Error("--method mapping-cone applies only to --family cycle");
    if (o.side != "initial") throw bei::Error("--method mapping-cone computes the initial side");
    std::cout << bei::render_corner(bei::cycle_corner_betti(rg.n), fmt);
    return kExitOk;
  }

  if (o.side == "initial") {
    std::cout << bei::render_betti(initial_side_table(rg, method, o, cfg), fmt);
  } else if (o.side == "binomial") {
    std::cout << bei::render_betti(binomial_side_table(rg, o, cfg), fmt);
  } else {
    const bei::BettiTable ini = initial_side_table(rg, method, o, cfg);
    const bei::BettiTable bin = binomial_side_table(rg, o, cfg);
    std::cout << bei::render_betti_pair(ini, bin, fmt);
  }
  return kExitOk;
}

struct ConjectureOpts {
  GraphSource src;
  CommonOpts common;
};

int cmd_conjecture(const CLI::App* cmd, const ConjectureOpts& o) {
  const ResolvedGraph rg = resolve_graph(cmd, o.src);
  const bei::OracleConfig cfg = oracle_config(o.common);
  const bei::OutputFormat fmt = bei::parse_output_format(o.common.format);

  const bei::ConjectureReport rep = rg.is_kmn ? bei::check_conjecture_kmn(rg.m, rg.n, cfg)
                                              : bei::check_conjecture(rg.g, cfg);
  std::cout << bei::render_conjecture(rep, fmt);
  switch (rep.verdict) {
    case bei::ConjectureReport::Verdict::equal: return kExitOk;
    case bei::ConjectureReport::Verdict::unequal: return kExitFailure;
    default: return kExitUndecided;
  }
}

struct VerifyOpts {
  GraphSource src;
  CommonOpts common;
  std::string basis_file;
};

int cmd_verify_gb(const CLI::App* cmd, const VerifyOpts& o) {
  const ResolvedGraph rg = resolve_graph(cmd, o.src);
  const bei::OutputFormat fmt = bei::parse_output_format(o.common.format);

  bei::VerifyReport rep;
  if (!o.basis_file.empty()) {
    int n = 0;
    const std::vector<bei::Polynomial> basis = bei::load_basis_file(o.basis_file, n);
    if (n != rg.g.n)
      throw bei::Error("basis file is over " + std::to_string(n) + " vertices but the graph has " +
                       std::to_string(rg.g.n));
    rep = bei::verify_basis(rg.g, basis);
  } else {
    rep = bei::verify_groebner(rg.g);
  }
  std::cout << bei::render_verify(rep, fmt);
  return rep.pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideals: Groebner bases, Betti tables, extremal corners"};
  app.require_subcommand(1);

  BettiOpts betti_opts;
  CLI::App* betti = app.add_subcommand("betti", "Betti table of S/J_G and/or S/ini(J_G)");
  add_graph_options(betti, betti_opts.src);
  add_common_options(betti, betti_opts.common);
  betti->add_option("--side", betti_opts.side, "initial, binomial, or both (default initial)")
      ->check(CLI::IsMember({"initial", "binomial", "both"}));
  betti->add_option("--method", betti_opts.method,
                    "formula | mapping-cone | lcm | koszul (default: lcm for initial, koszul otherwise)")
      ->check(CLI::IsMember({"formula", "mapping-cone", "lcm", "koszul"}));
  betti->add_option("--i-max", betti_opts.i_max, "koszul: certify i <= i-max (default 2n)");
  betti->add_option("--j-max", betti_opts.j_max, "koszul: certify j <= j-max (default 2n-2)");

  ConjectureOpts conj_opts;
  CLI::App* conj = app.add_subcommand("conjecture", "compare extremal Betti numbers of J_G and ini(J_G)");
  add_graph_options(conj, conj_opts.src);
  add_common_options(conj, conj_opts.common);

  VerifyOpts verify_opts;
  CLI::App* verify = app.add_subcommand("verify-gb", "verify the admissible-path Groebner basis");
  add_graph_options(verify, verify_opts.src);
  add_common_options(verify, verify_opts.common);
  verify->add_option("--basis", verify_opts.basis_file, "verify this basis file instead of the computed one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (betti->parsed()) return cmd_betti(betti, betti_opts);
    if (conj->parsed()) return cmd_conjecture(conj, conj_opts);
    return cmd_verify_gb(verify, verify_opts);
  } catch (const bei::CapError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const bei::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
