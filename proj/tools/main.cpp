#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blockrank/blocks.hpp"
#include "blockrank/classify.hpp"
#include "blockrank/engine.hpp"
#include "blockrank/error.hpp"
#include "blockrank/generators.hpp"
#include "blockrank/linalg.hpp"
#include "blockrank/text_format.hpp"
#include "blockrank/trees.hpp"
#include "suites.hpp"

namespace br = blockrank;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kMismatch = 3 };

std::string join(const std::vector<br::VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

int cmd_rank(const std::string& input, bool certify, bool tree, bool oracle_check) {
  const br::WeightedDigraph g = br::read_digraph_file(input);
  if (tree) {
    const br::R2TreeRank t = br::rank_r2_tree(g);
    std::cout << "q=" << t.q << " s=" << t.s << " rank=" << t.rank << '\n';
    if (certify) std::cout << br::render_certificate(t.certificate);
    if (oracle_check && br::rank_of(g.adjacency_matrix()) != t.rank) {
      std::cerr << "oracle disagrees with 2q + s\n";
      return kMismatch;
    }
    return kOk;
  }
  const br::RankOutcome r = br::rank_recursive(g, {.check_oracle = oracle_check});
  std::cout << "rank=" << r.rank << '\n';
  if (certify) std::cout << br::render_certificate(r.certificate);
  return kOk;
}

int cmd_decompose(const std::string& input) {
  const br::WeightedDigraph g = br::read_digraph_file(input);
  const br::BlockDecomposition d = br::decompose(g);
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    std::cout << "block " << i << " pendant=" << (d.pendant[i] ? 1 : 0) << " vertices=" << join(d.blocks[i]) << '\n';
  }
  std::cout << "cuts=" << join(d.cut_vertices) << '\n';
  return kOk;
}

int cmd_classify(const std::string& input) {
  const br::WeightedDigraph g = br::read_digraph_file(input);
  for (br::VertexId v : br::decompose(g).cut_vertices) {
    for (const br::CutSplit& s : br::natural_splits(g, v)) {
      const br::CutVertexCase c = br::classify_cut(g, s);
      std::cout << "cut " << v << " H=" << join(s.side()) << " case=" << br::case_label(c.tag)
                << " memberships=" << br::membership_bits(c.witnesses) << '\n';
    }
  }
  return kOk;
}

int cmd_gen(const std::string& family, std::size_t n, std::uint64_t seed, const std::string& input) {
  const std::optional<br::Family> f = br::parse_family(family);
  if (!f) {
    std::cerr << "unknown family '" << family << "'; one of:";
    for (br::Family known : br::all_families()) std::cerr << ' ' << br::family_name(known);
    std::cerr << '\n';
    return kUsage;
  }
  br::GenSpec spec;
  spec.family = *f;
  spec.n = n;
  spec.seed = seed;
  if (!input.empty()) spec.base = br::read_digraph_file(input);
  std::cout << br::format_digraph(br::gen(spec));
  return kOk;
}

int cmd_verify(const std::string& suite, const br::verify::SuiteOptions& opts, const std::string& json_path) {
  std::vector<std::string> names;
  if (suite == "all") {
    for (std::string_view s : br::verify::suite_names()) names.emplace_back(s);
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const std::string& name : names) {
    const br::verify::SuiteReport report = br::verify::run_suite(name, opts);
    std::cout << br::verify::format_report(report);
    reports.push_back(br::verify::to_json(report));
    ok = ok && report.passed();
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw br::Error(br::ErrorCode::InvalidSpec, "cannot write " + json_path);
    out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  }
  return ok ? kOk : kMismatch;
}

int exit_code(br::ErrorCode code) {
  switch (code) {
    case br::ErrorCode::ParseError: return kParse;
    case br::ErrorCode::InternalMismatch: return kMismatch;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ranks of weighted digraphs via block decompositions"};
  app.require_subcommand(1);

  std::string input;
  bool certify = false;
  bool tree = false;
  bool oracle_check = false;
  auto* rank = app.add_subcommand("rank", "Rank of a digraph file");
  rank->add_option("--input", input, "Digraph in text format")->required();
  rank->add_flag("--certify", certify, "Print the rule certificate");
  rank->add_flag("--tree", tree, "Use the r2-tree formula 2q + s");
  rank->add_flag("--oracle-check", oracle_check, "Recompute by elimination and fail on mismatch");

  auto* decompose = app.add_subcommand("decompose", "Blocks and cut vertices");
  decompose->add_option("--input", input, "Digraph in text format")->required();

  auto* classify = app.add_subcommand("classify", "CASE of every cut vertex split");
  classify->add_option("--input", input, "Digraph in text format")->required();

  std::string family;
  std::size_t n = 8;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("--family", family, "Family name")->required();
  gen->add_option("--n", n, "Vertex budget");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--input", input, "Base digraph (r2-extension)");

  std::string suite;
  br::verify::SuiteOptions opts;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run a property suite against elimination");
  verify->add_option("name", suite, "Suite name, or 'all'");
  verify->add_option("--suite", suite, "Suite name, or 'all'");
  verify->add_option("--count", opts.count, "Instances");
  verify->add_option("--max-n", opts.max_n, "Largest order");
  verify->add_option("--seed", opts.seed, "Seed");
  verify->add_option("--json", json_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rank) return cmd_rank(input, certify, tree, oracle_check);
    if (*decompose) return cmd_decompose(input);
    if (*classify) return cmd_classify(input);
    if (*gen) return cmd_gen(family, n, seed, input);
    if (*verify) {
      if (suite.empty()) {
        std::cerr << "verify needs a suite; one of: all";
        for (std::string_view s : br::verify::suite_names()) std::cerr << ' ' << s;
        std::cerr << '\n';
        return kUsage;
      }
      return cmd_verify(suite, opts, json_path);
    }
  } catch (const br::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.code());
  }
  return kUsage;
}
