#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mgspec/families.hpp"
#include "mgspec/graph_io.hpp"
#include "mgspec/multigraph.hpp"
#include "mgspec/partition.hpp"
#include "mgspec/report.hpp"
#include "mgspec/theorems.hpp"

namespace {

// Exit codes, also listed in --help.
constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadInput = 4;
constexpr int kExitBadParameters = 5;

struct GenOptions {
  std::string family;
  std::int64_t d = 0;
  int t = 0;
  std::string output;
};

struct FileOptions {
  std::string input;
  bool laplacian = false;
};

struct QuotientOptions {
  std::string input;
  std::string partition;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 200;
  std::uint64_t seed = 1;
  int n = 0;
  int d = 0;
};

struct ExploreOptions {
  std::string question = "c-gap";
  int trials = 200;
  std::uint64_t seed = 1;
  int n = 0;
  int d = 0;
};

mgspec::Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::ios_base::failure("cannot read file: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return mgspec::parse_graph(text.str());
}

mgspec::Partition parse_partition_spec(const std::string& spec, int n) {
  mgspec::Partition partition;
  std::istringstream blocks(spec);
  std::string block;
  while (std::getline(blocks, block, '|')) {
    std::vector<int> vertices;
    std::istringstream items(block);
    std::string item;
    while (std::getline(items, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("partition: invalid vertex index \"" +
                                    item + "\"");
      }
      if (used != item.size()) {
        throw std::invalid_argument("partition: invalid vertex index \"" +
                                    item + "\"");
      }
      vertices.push_back(v);
    }
    partition.blocks.push_back(std::move(vertices));
  }
  partition.validate(n);
  return partition;
}

mgspec::Multigraph build_family(const GenOptions& opt) {
  const bool needs_t = opt.family == "c" || opt.family == "h";
  if (needs_t && opt.t == 0) {
    throw std::invalid_argument("gen: family \"" + opt.family +
                                "\" requires --t");
  }
  if (!needs_t && opt.t != 0) {
    throw std::invalid_argument("gen: family \"" + opt.family +
                                "\" does not take --t");
  }
  if (opt.family == "b1") return mgspec::build_b1(opt.d);
  if (opt.family == "h1") return mgspec::build_h1(opt.d);
  if (opt.family == "c") return mgspec::build_c(opt.d, opt.t);
  if (opt.family == "h") return mgspec::build_h(opt.d, opt.t);
  if (opt.family == "f") return mgspec::build_f(opt.d);
  if (opt.family == "g4") return mgspec::build_g4(opt.d);
  throw std::invalid_argument("gen: unknown family \"" + opt.family + "\"");
}

int run_gen(const GenOptions& opt) {
  const mgspec::Multigraph g = build_family(opt);
  const std::string text = mgspec::render_graph(g);
  if (opt.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot write file: " + opt.output);
  }
  out << text;
  if (!out) {
    throw std::ios_base::failure("cannot write file: " + opt.output);
  }
  return kExitOk;
}

int run_spectrum(const FileOptions& opt) {
  const mgspec::Multigraph g = read_graph_file(opt.input);
  std::cout << mgspec::spectrum_report(g, opt.laplacian).dump();
  return kExitOk;
}

int run_connectivity(const FileOptions& opt) {
  const mgspec::Multigraph g = read_graph_file(opt.input);
  std::cout << mgspec::connectivity_report_json(g).dump();
  return kExitOk;
}

int run_quotient(const QuotientOptions& opt) {
  const mgspec::Multigraph g = read_graph_file(opt.input);
  const mgspec::Partition p =
      parse_partition_spec(opt.partition, g.vertex_count());
  std::cout << mgspec::quotient_report(g, p).dump();
  return kExitOk;
}

mgspec::Suite parse_suite(const std::string& name) {
  if (name == "all") return mgspec::Suite::All;
  if (name == "fiedler") return mgspec::Suite::Fiedler;
  if (name == "main") return mgspec::Suite::Main;
  if (name == "edge") return mgspec::Suite::Edge;
  throw std::invalid_argument("verify: unknown suite \"" + name + "\"");
}

int run_verify(const VerifyOptions& opt) {
  mgspec::CampaignModel model;
  model.n_fixed = opt.n;
  model.d_fixed = opt.d;
  const mgspec::CampaignReport report = mgspec::run_campaign(
      parse_suite(opt.suite), model, opt.trials, opt.seed);
  std::cout << mgspec::campaign_report_json(report).dump();
  return report.passed() ? kExitOk : kExitViolations;
}

int run_explore(const ExploreOptions& opt) {
  if (opt.question != "c-gap") {
    throw std::invalid_argument("explore: unknown question \"" + opt.question +
                                "\"");
  }
  mgspec::CampaignModel model;
  model.n_fixed = opt.n;
  model.d_fixed = opt.d;
  const mgspec::BestGap best =
      mgspec::run_gap_explorer(model, opt.trials, opt.seed);
  std::cout << mgspec::explore_report_json(best, opt.trials, opt.seed).dump();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multigraph spectra, connectivity, and eigenvalue-bound verification"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  1  verify found at least one violated bound\n"
      "  2  command-line usage error\n"
      "  3  file cannot be read or written\n"
      "  4  malformed graph file\n"
      "  5  invalid parameter values\n"
      "\n"
      "Graph files: '#' comments, a header line \"n <count>\", then one\n"
      "\"u v m\" line per present pair with 0 <= u < v < n and m >= 1.");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a family graph");
  gen_cmd->add_option("--family", gen.family, "One of b1|h1|c|h|f|g4")
      ->required();
  gen_cmd->add_option("--d", gen.d, "Degree parameter")->required();
  gen_cmd->add_option("--t", gen.t, "Connectivity parameter (families c, h)");
  gen_cmd->add_option("-o,--output", gen.output,
                      "Output file (default: stdout)");

  FileOptions spectrum;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Print the grouped spectrum of a graph");
  spectrum_cmd->add_option("--input", spectrum.input, "Graph file")->required();
  spectrum_cmd->add_flag("--laplacian", spectrum.laplacian,
                         "Use the Laplacian instead of the adjacency matrix");

  FileOptions connectivity;
  CLI::App* connectivity_cmd = app.add_subcommand(
      "connectivity", "Print vertex/edge connectivity with witness cuts");
  connectivity_cmd->add_option("--input", connectivity.input, "Graph file")
      ->required();

  QuotientOptions quotient;
  CLI::App* quotient_cmd = app.add_subcommand(
      "quotient",
      "Print the quotient matrix of a vertex partition, its eigenvalues, "
      "equitability, and the interlacing verdict");
  quotient_cmd->add_option("--input", quotient.input, "Graph file")->required();
  quotient_cmd
      ->add_option("--partition", quotient.partition,
                   "Blocks as '|'-separated lists of comma-separated "
                   "indices, e.g. \"0,1|2,3,4\"")
      ->required();

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run eigenvalue-bound checkers over seeded random regular multigraphs");
  verify_cmd->add_option("--suite", verify.suite,
                         "all (every checker), fiedler (mu_2 vs kappa), "
                         "edge (mu_2/lambda_2 vs kappa'), main (lambda_2 vs "
                         "kappa)");
  verify_cmd->add_option("--trials", verify.trials, "Number of sampled graphs");
  verify_cmd->add_option("--seed", verify.seed, "Campaign seed");
  verify_cmd->add_option("--n", verify.n,
                         "Fix the vertex count (default: draw from [2,12])");
  verify_cmd->add_option("--d", verify.d,
                         "Fix the degree (default: draw from [1,10])");

  ExploreOptions explore;
  CLI::App* explore_cmd = app.add_subcommand(
      "explore", "Track the largest observed mu_2 - kappa' over samples");
  explore_cmd->add_option("--question", explore.question,
                          "Currently only c-gap");
  explore_cmd->add_option("--trials", explore.trials,
                          "Number of sampled graphs");
  explore_cmd->add_option("--seed", explore.seed, "Explorer seed");
  explore_cmd->add_option("--n", explore.n, "Fix the vertex count");
  explore_cmd->add_option("--d", explore.d, "Fix the degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum);
    if (connectivity_cmd->parsed()) return run_connectivity(connectivity);
    if (quotient_cmd->parsed()) return run_quotient(quotient);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (explore_cmd->parsed()) return run_explore(explore);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const mgspec::GraphParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParameters;
  }
  return kExitUsage;
}
