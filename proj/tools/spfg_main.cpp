// Command-line front end: solve, kernelize, generate, verify, classify.
//
// Exit codes: 0 = YES/success/equivalent, 1 = NO/not equivalent,
// 2 = usage or parse error, 3 = precondition error (wrong algorithm or
// kernel mode for the instance's structure).
//
// Reports are line-oriented `key: value` pairs on stdout in a fixed order;
// wall-clock timing goes to stderr so reports stay byte-reproducible.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spfg/cover_enum.hpp"
#include "spfg/errors.hpp"
#include "spfg/instance_io.hpp"
#include "spfg/kernelize.hpp"
#include "spfg/solvers.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

std::string digest_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(spfg::fnv1a64(bytes)));
  return buf;
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

struct SolveOptions {
  std::string input;
  std::string algo = "auto";
  bool witness = false;
};

int run_solve(const SolveOptions& opt) {
  static const std::map<std::string, spfg::AlgoChoice> algos = {
      {"auto", spfg::AlgoChoice::Auto},
      {"bruteforce", spfg::AlgoChoice::BruteForce},
      {"fpt", spfg::AlgoChoice::Fpt},
      {"poly2k2", spfg::AlgoChoice::Poly2K2},
      {"modulator", spfg::AlgoChoice::Modulator},
  };
  const std::string text = read_file(opt.input);
  const spfg::Instance inst = spfg::parse_instance(text);
  const spfg::Verdict verdict = spfg::solve(inst, algos.at(opt.algo));

  std::cout << "command: solve\n";
  std::cout << "input: " << opt.input << "\n";
  std::cout << "input_digest: " << digest_hex(text) << "\n";
  std::cout << "algo: " << verdict.algorithm << "\n";
  std::cout << "verdict: " << (verdict.yes ? "YES" : "NO") << "\n";
  if (verdict.best_size) {
    std::cout << "size: " << *verdict.best_size << "\n";
  } else {
    std::cout << "size: -\n";
  }
  if (opt.witness && verdict.witness) {
    std::cout << "witness:";
    for (int id : *verdict.witness) std::cout << " e" << id;
    std::cout << "\n";
  }
  std::cout << "covers_tried: " << verdict.stats.covers_tried << "\n";
  std::cout << "extend_calls: " << verdict.stats.extend_calls << "\n";
  std::cerr << "elapsed_ms: " << verdict.stats.elapsed_ms << "\n";
  return verdict.yes ? 0 : 1;
}

struct KernelizeOptions {
  std::string input;
  std::string mode = "general";
  int eta = 0;
  std::string output;
  bool report = false;
};

int run_kernelize(const KernelizeOptions& opt) {
  static const std::map<std::string, spfg::KernelMode> modes = {
      {"general", spfg::KernelMode::General},
      {"planar", spfg::KernelMode::Planar},
      {"cluster", spfg::KernelMode::Cluster},
      {"bounded-degree", spfg::KernelMode::BoundedDegree},
  };
  const std::string text = read_file(opt.input);
  const spfg::Instance inst = spfg::parse_instance(text);
  spfg::KernelConfig config;
  config.mode = modes.at(opt.mode);
  config.eta = opt.eta;
  const spfg::KernelResult result = spfg::kernelize(inst, config);
  const std::string reduced_text = spfg::serialize_instance(result.reduced);
  write_file(opt.output, reduced_text);

  std::cout << "command: kernelize\n";
  std::cout << "input: " << opt.input << "\n";
  std::cout << "input_digest: " << digest_hex(text) << "\n";
  std::cout << "mode: " << opt.mode << "\n";
  if (config.mode == spfg::KernelMode::BoundedDegree) {
    std::cout << "eta: " << config.eta << "\n";
  }
  std::cout << "output: " << opt.output << "\n";
  std::cout << "output_digest: " << digest_hex(reduced_text) << "\n";
  std::cout << "rejected: " << bool_name(result.audit.rejected) << "\n";
  if (opt.report) {
    const spfg::KernelAudit& a = result.audit;
    std::cout << "h_size: " << a.h_size << "\n";
    std::cout << "r_size: " << a.r_size << "\n";
    std::cout << "r_forcing_pairs: " << a.r_forcing_pairs << "\n";
    std::cout << "vl_size: " << a.vl_size << "\n";
    std::cout << "vlf_size: " << a.vlf_size << "\n";
    std::cout << "pairs_marked: " << a.pairs_marked << "\n";
    std::cout << "paths_marked: " << a.paths_marked << "\n";
    std::cout << "patch_added: " << a.patch_added << "\n";
    std::cout << "em_size: " << a.em_size << "\n";
    std::cout << "reduced_vertices: " << result.reduced.graph.num_vertices() << "\n";
    std::cout << "reduced_edges: " << result.reduced.graph.num_edges() << "\n";
    std::cout << "reduced_forcing_pairs: " << result.reduced.forcing.num_pairs() << "\n";
    std::cout << "bound_formula: " << a.bound_formula << "\n";
    std::cout << "within_bound: " << bool_name(a.within_bound) << "\n";
  }
  return 0;
}

struct GenerateOptions {
  std::string kind;
  std::uint64_t seed = 0;
  std::string output;
  spfg::GenParams params;
};

int run_generate(const GenerateOptions& opt) {
  const spfg::Instance inst =
      spfg::generate(spfg::parse_gen_kind(opt.kind), opt.params, opt.seed);
  const std::string text = spfg::serialize_instance(inst);
  write_file(opt.output, text);
  std::cout << "command: generate\n";
  std::cout << "kind: " << opt.kind << "\n";
  std::cout << "seed: " << opt.seed << "\n";
  std::cout << "output: " << opt.output << "\n";
  std::cout << "output_digest: " << digest_hex(text) << "\n";
  return 0;
}

struct VerifyOptions {
  std::string original;
  std::string kernel;
};

int run_verify(const VerifyOptions& opt) {
  const std::string original_text = read_file(opt.original);
  const std::string kernel_text = read_file(opt.kernel);
  const spfg::Instance original = spfg::parse_instance(original_text);
  const spfg::Instance kernel = spfg::parse_instance(kernel_text);
  if (original.graph.num_edges() > 16) {
    throw std::invalid_argument("verification limited to originals with 16 edges");
  }
  const bool equivalent =
      spfg::brute_force_solve(original).yes == spfg::brute_force_solve(kernel).yes;
  std::cout << "command: verify\n";
  std::cout << "original: " << opt.original << "\n";
  std::cout << "original_digest: " << digest_hex(original_text) << "\n";
  std::cout << "kernel: " << opt.kernel << "\n";
  std::cout << "kernel_digest: " << digest_hex(kernel_text) << "\n";
  std::cout << "equivalent: " << bool_name(equivalent) << "\n";
  return equivalent ? 0 : 1;
}

struct ClassifyOptions {
  std::string input;
};

int run_classify(const ClassifyOptions& opt) {
  const std::string text = read_file(opt.input);
  const spfg::Instance inst = spfg::parse_instance(text);
  const spfg::SpecialClassification cls = spfg::classify_special(inst.forcing);
  const spfg::Partition part = spfg::compute_partition(inst);
  std::cout << "command: classify\n";
  std::cout << "input: " << opt.input << "\n";
  std::cout << "input_digest: " << digest_hex(text) << "\n";
  std::cout << "two_k2_free: " << bool_name(spfg::is_2k2_free(inst.forcing)) << "\n";
  std::cout << "cluster: " << bool_name(cls.cluster) << "\n";
  std::cout << "max_forcing_degree: " << cls.max_degree << "\n";
  std::cout << "euler_planar_ok: " << bool_name(spfg::planar_edge_bound_check(inst.graph))
            << "\n";
  std::cout << "h_size: " << part.H.size() << "\n";
  std::cout << "l_size: " << part.L.size() << "\n";
  std::cout << "r_size: " << part.R.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers and kernels for shortest s-t paths under forcing-pair constraints"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve_cmd = app.add_subcommand("solve", "decide one instance");
  solve_cmd->add_option("--input", solve_opt.input, "instance file")->required();
  solve_cmd->add_option("--algo", solve_opt.algo, "algorithm")
      ->check(CLI::IsMember({"auto", "bruteforce", "fpt", "poly2k2", "modulator"}));
  solve_cmd->add_flag("--witness", solve_opt.witness, "print the YES witness");

  KernelizeOptions kern_opt;
  CLI::App* kern_cmd = app.add_subcommand("kernelize", "shrink one instance");
  kern_cmd->add_option("--input", kern_opt.input, "instance file")->required();
  kern_cmd->add_option("--mode", kern_opt.mode, "kernel mode")
      ->check(CLI::IsMember({"general", "planar", "cluster", "bounded-degree"}));
  kern_cmd->add_option("--eta", kern_opt.eta, "degree cap (bounded-degree mode)");
  kern_cmd->add_option("--output", kern_opt.output, "reduced instance file")->required();
  kern_cmd->add_flag("--report", kern_opt.report, "print the audit fields");

  GenerateOptions gen_opt;
  CLI::App* gen_cmd = app.add_subcommand("generate", "emit a generated instance");
  gen_cmd->add_option("--kind", gen_opt.kind, "generator family")->required();
  gen_cmd->add_option("--seed", gen_opt.seed, "rng seed");
  gen_cmd->add_option("--output", gen_opt.output, "instance file")->required();
  gen_cmd->add_option("--n", gen_opt.params.n, "vertex count");
  gen_cmd->add_option("--extra-edges", gen_opt.params.extra_edges, "chords beyond the tree");
  gen_cmd->add_option("--pairs", gen_opt.params.pairs, "forcing pair count");
  gen_cmd->add_option("--eta", gen_opt.params.eta, "forcing degree cap");
  gen_cmd->add_option("--cliques", gen_opt.params.cliques, "forcing clique count");
  gen_cmd->add_option("--clique-size", gen_opt.params.clique_size, "forcing clique size");
  gen_cmd->add_option("--leaves", gen_opt.params.leaves, "star leaf count");
  gen_cmd->add_option("--rows", gen_opt.params.rows, "grid rows");
  gen_cmd->add_option("--cols", gen_opt.params.cols, "grid cols");
  gen_cmd->add_flag("--diagonals", gen_opt.params.diagonals, "triangulate grid cells");
  gen_cmd->add_option("--edge-prob", gen_opt.params.edge_prob, "random edge probability");
  gen_cmd->add_option("--k", gen_opt.params.k, "query budget");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "compare verdicts of two instance files");
  verify_cmd->add_option("--original", verify_opt.original, "original instance")->required();
  verify_cmd->add_option("--kernel", verify_opt.kernel, "reduced instance")->required();

  ClassifyOptions classify_opt;
  CLI::App* classify_cmd = app.add_subcommand("classify", "report structural facts");
  classify_cmd->add_option("--input", classify_opt.input, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opt);
    if (kern_cmd->parsed()) return run_kernelize(kern_opt);
    if (gen_cmd->parsed()) return run_generate(gen_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
    if (classify_cmd->parsed()) return run_classify(classify_opt);
  } catch (const spfg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const spfg::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
