#include "hommine/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "hommine/condense.hpp"
#include "hommine/constraints.hpp"
#include "hommine/generators.hpp"
#include "hommine/homomorphism.hpp"

namespace hommine {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::size_t min_support = 1;
  std::size_t max_size = 0;   // 0: unbounded
  std::size_t max_depth = 0;  // 0: unbounded
  std::string path_constraint = "cover";
  std::vector<std::string> property_labels;
  bool closed = false;
  bool maximal = false;
  bool iso_eval = false;
  bool edge_labels = false;
  bool txn = false;
  bool verify = false;
  bool no_property_prune = false;
  bool prune_non_maximal = false;
  unsigned jobs = 1;
  std::size_t oracle_cap = 12;
  std::string csv;

  std::string generator;
  std::size_t authors = 50;
  std::size_t nodes = 20;
  std::size_t labels = 3;
  double density = 0.2;
  std::uint64_t seed = 1;
};

void add_mining_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("graph", rc.input, "Graph file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--min-support,-s", rc.min_support, "Minimum support")->capture_default_str();
  cmd->add_option("--max-size", rc.max_size, "Maximum pattern size in nodes");
  cmd->add_option("--max-depth", rc.max_depth, "Maximum number of nodes on a root path");
  cmd->add_option("--path-constraint", rc.path_constraint, "none, cover or labels")
      ->check(CLI::IsMember({"none", "cover", "labels"}))
      ->capture_default_str();
  cmd->add_option("--property-labels", rc.property_labels, "Comma separated property labels")->delimiter(',');
  cmd->add_flag("--edge-labels", rc.edge_labels, "Match edge labels");
  cmd->add_flag("--txn", rc.txn, "Transactional support (needs 't' lines)");
  cmd->add_flag("--no-property-prune", rc.no_property_prune, "Disable property label pruning");
  cmd->add_option("--jobs,-j", rc.jobs, "Threads (sharded by root label)")->check(CLI::Range(1u, 1024u));
}

ConstraintConfig make_config(const RunConfig& rc, const Graph& g) {
  ConstraintConfig cfg;
  cfg.min_support = rc.min_support;
  cfg.support_mode = rc.txn ? SupportMode::Transactional : SupportMode::Network;
  if (rc.max_size) cfg.max_size = rc.max_size;
  if (rc.max_depth) cfg.max_depth = rc.max_depth;
  cfg.path_constraint = *parse_path_constraint(rc.path_constraint);
  cfg.edge_labels = rc.edge_labels;
  if (!rc.property_labels.empty()) {
    std::vector<LabelId> ids;
    for (const auto& name : rc.property_labels)
      if (auto id = g.find_label(name)) ids.push_back(*id);
    cfg.property_labels = std::move(ids);
  }
  validate(cfg, g);
  return cfg;
}

MinerOptions make_options(const RunConfig& rc) {
  MinerOptions opts;
  opts.prune_property_labels = !rc.no_property_prune;
  opts.prune_non_maximal = rc.prune_non_maximal;
  opts.verify = rc.verify;
  opts.jobs = rc.jobs;
  return opts;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string iso_column(const Pattern& p, const Graph& g, const ConstraintConfig& cfg) {
  try {
    return std::to_string(iso_support(p.code, g, cfg.support_mode, cfg.edge_labels));
  } catch (const OracleCapError&) {
    return "-";
  }
}

int cmd_mine(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(rc.input, rc.property_labels);
  const ConstraintConfig cfg = make_config(rc, g);
  MinerOptions opts = make_options(rc);
  Output dst(rc.output, out);

  auto write = [&](const Pattern& p, const CondensedPattern* flags) {
    *dst << p.support << '\t';
    if (flags) {
      if (rc.closed) *dst << (flags->closed ? 'C' : '-');
      if (rc.maximal) *dst << (flags->maximal ? 'M' : '-');
      *dst << '\t';
    }
    *dst << format_code(p.code, g, cfg.edge_labels);
    if (rc.iso_eval) *dst << '\t' << iso_column(p, g, cfg);
    *dst << '\n';
  };

  if (!rc.closed && !rc.maximal && opts.jobs == 1) {
    Miner miner(g, cfg, opts);
    miner.run([&](const Pattern& p) { write(p, nullptr); });
    return 0;
  }
  if (rc.prune_non_maximal && rc.closed) {
    err << "--prune-non-maximal drops closed patterns; use it with --maximal only\n";
    return 2;
  }
  const auto ps = mine(g, cfg, opts);
  if (!rc.closed && !rc.maximal) {
    for (const auto& p : ps) write(p, nullptr);
    return 0;
  }
  CondenseOptions copts;
  copts.direct_extensions = rc.prune_non_maximal;
  const auto flagged = condense(ps, g, cfg, copts);
  for (std::size_t i = 0; i < ps.size(); ++i) write(ps[i], &flagged[i]);
  return 0;
}

int cmd_check(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(rc.input, rc.property_labels);
  if (g.node_count() > rc.oracle_cap) {
    err << "graph has " << g.node_count() << " nodes; the reference miner is capped at " << rc.oracle_cap
        << " (--oracle-cap)\n";
    return 2;
  }
  const ConstraintConfig cfg = make_config(rc, g);
  MinerOptions opts = make_options(rc);
  const auto mined = mine(g, cfg, opts);
  NaiveOptions nopts;
  nopts.prune_unavoidable = !cfg.max_size.has_value();
  const auto reference = mine_naive(g, cfg, nopts);
  const auto diff = diff_patterns(mined, reference, g, cfg.edge_labels);
  for (const auto& line : diff) out << line << '\n';
  out << (diff.empty() ? "identical" : "MISMATCH") << ": " << mined.size() << " mined, " << reference.size()
      << " reference\n";
  return diff.empty() ? 0 : 1;
}

int cmd_stats(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(rc.input, rc.property_labels);
  const ConstraintConfig cfg = make_config(rc, g);
  MinerOptions opts = make_options(rc);
  opts.jobs = 1;  // delay rows only make sense for one search
  MinerStats stats;
  const auto ps = mine(g, cfg, opts, &stats);
  const auto rows = delay_report(stats);

  Output csv(rc.csv, out);
  *csv << "index,candidates,bound\n";
  std::size_t max_delay = 0;
  std::size_t violations = 0;
  double sum = 0;
  for (const auto& r : rows) {
    *csv << r.index << ',' << r.candidates << ',' << r.bound << '\n';
    max_delay = std::max(max_delay, r.candidates);
    sum += static_cast<double>(r.candidates);
    if (r.candidates > r.bound) ++violations;
  }
  const auto flagged = condense(ps, g, cfg);
  const auto closed = std::count_if(flagged.begin(), flagged.end(), [](const auto& c) { return c.closed; });
  const auto maximal = std::count_if(flagged.begin(), flagged.end(), [](const auto& c) { return c.maximal; });

  std::ostream& summary = rc.csv.empty() ? err : out;
  summary << "patterns " << ps.size() << "\nclosed " << closed << "\nmaximal " << maximal << "\ncandidates "
          << stats.candidates << "\nmax_delay " << max_delay << "\nmean_delay "
          << (rows.empty() ? 0.0 : sum / static_cast<double>(rows.size())) << "\nfinal_bound "
          << (rows.empty() ? 0 : rows.back().bound) << "\nbound_violations " << violations << '\n';
  return 0;
}

int cmd_gen(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  Graph g;
  if (rc.generator == "biblio") {
    g = generate_biblio(rc.authors, rc.seed);
  } else if (rc.generator == "dag") {
    g = generate_dag(rc.nodes, rc.labels, rc.density, rc.seed);
  } else if (rc.generator == "cyclic") {
    g = generate_cycle(rc.nodes, rc.labels, rc.seed);
  } else if (rc.generator == "scalefree") {
    g = generate_scalefree(rc.nodes, rc.labels, rc.seed);
  } else {
    err << "unknown generator '" << rc.generator << "' (biblio, dag, cyclic, scalefree)\n";
    return 2;
  }
  Output dst(rc.output, out);
  write_graph(*dst, g);
  return 0;
}

}  // namespace

std::vector<std::string> diff_patterns(const std::vector<Pattern>& mined, const std::vector<Pattern>& reference,
                                       const Graph& g, bool edge_labels) {
  std::map<Code, std::size_t> a, b;
  for (const auto& p : mined) a[p.code] = p.support;
  for (const auto& p : reference) b[p.code] = p.support;
  std::vector<std::string> out;
  for (const auto& [code, sup] : a) {
    auto it = b.find(code);
    if (it == b.end())
      out.push_back("only mined\t" + std::to_string(sup) + '\t' + format_code(code, g, edge_labels));
    else if (it->second != sup)
      out.push_back("support " + std::to_string(sup) + " vs " + std::to_string(it->second) + '\t' +
                    format_code(code, g, edge_labels));
  }
  for (const auto& [code, sup] : b)
    if (!a.count(code)) out.push_back("only reference\t" + std::to_string(sup) + '\t' + format_code(code, g, edge_labels));
  if (mined.size() != a.size()) out.push_back("mined output contains duplicates");
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent tree pattern mining under homomorphism"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent core tree patterns");
  add_mining_flags(mine_cmd, rc);
  mine_cmd->add_flag("--closed", rc.closed, "Add a closedness flag column");
  mine_cmd->add_flag("--maximal", rc.maximal, "Add a maximality flag column");
  mine_cmd->add_flag("--iso-eval", rc.iso_eval, "Append the isomorphism support");
  mine_cmd->add_flag("--prune-non-maximal", rc.prune_non_maximal, "Prune patterns that cannot be maximal");
  mine_cmd->add_flag("--verify", rc.verify, "Cross-check incremental state (slow)");
  mine_cmd->add_option("--output,-o", rc.output, "Output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "Compare the miner with the reference enumeration");
  add_mining_flags(check_cmd, rc);
  check_cmd->add_option("--oracle-cap", rc.oracle_cap, "Largest graph accepted")->capture_default_str();

  auto* stats_cmd = app.add_subcommand("stats", "Delay statistics and condensed pattern counts");
  add_mining_flags(stats_cmd, rc);
  stats_cmd->add_option("--csv", rc.csv, "Delay CSV file (default stdout)");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic graph");
  gen_cmd->add_option("generator", rc.generator, "biblio, dag, cyclic or scalefree")->required();
  gen_cmd->add_option("--authors", rc.authors, "Authors (biblio)")->capture_default_str();
  gen_cmd->add_option("--nodes", rc.nodes, "Nodes (dag, cyclic, scalefree)")->capture_default_str();
  gen_cmd->add_option("--labels", rc.labels, "Node labels (dag, cyclic, scalefree)")->capture_default_str();
  gen_cmd->add_option("--density", rc.density, "Edge probability (dag)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--seed", rc.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--output,-o", rc.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mine_cmd) return cmd_mine(rc, out, err);
    if (*check_cmd) return cmd_check(rc, out, err);
    if (*stats_cmd) return cmd_stats(rc, out, err);
    return cmd_gen(rc, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hommine
