#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "tokslide/cw_expr.hpp"
#include "tokslide/cw_vc_dp.hpp"
#include "tokslide/fvs_fpt.hpp"
#include "tokslide/io.hpp"
#include "tokslide/oracle.hpp"
#include "tokslide/reductions.hpp"
#include "tokslide/split_solver.hpp"

namespace tokslide::cli {

namespace {

struct Options {
  // solve / oracle / verify / enumerate / generate
  std::string input;
  std::string moves_file;
  std::string method = "auto";
  std::string expr_file;
  std::string witness_file;
  std::string output_file;
  std::string reduction;
  std::string what;
  std::string problem;
  std::vector<std::string> placement;
  std::vector<std::size_t> cover;
  int k = -1;
  std::optional<std::size_t> cap;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int solve() {
    DiscoveryInstance inst = io::parse_instance(io::read_file(opt_.input));
    std::string method = opt_.method;
    if (!opt_.expr_file.empty() && method != "cw") throw InputError("--expr only applies to --method cw");
    if (method == "auto") method = pick_method(inst);

    if (method == "cw") {
      if (opt_.expr_file.empty()) throw InputError("--method cw needs --expr <file>");
      if (!opt_.witness_file.empty()) throw InputError("--method cw reports steps only; it has no witness");
      WExpression expr = parse_expression(io::read_file(opt_.expr_file));
      CwResult r = solve_vcd_cw(expr, inst);
      return report(r.yes, r.min_moves.value_or(0), inst, nullptr);
    }
    if (method == "oracle") return run_oracle(inst);
    if (method == "split") {
      SolveResult r = solve_split(inst);
      return report(r.yes, r.steps.value_or(0), inst, &r.witness);
    }
    if (method == "fvs-fpt") {
      SolveResult r = solve_fvsd_fpt(inst);
      return report(r.yes, r.steps.value_or(0), inst, &r.witness);
    }
    throw InputError("unknown method '" + method + "'");
  }

  int oracle() {
    DiscoveryInstance inst = io::parse_instance(io::read_file(opt_.input));
    return run_oracle(inst);
  }

  int verify() {
    DiscoveryInstance inst = io::parse_instance(io::read_file(opt_.input));
    MoveSequence seq = io::parse_moves(io::read_file(opt_.moves_file), inst.graph);
    ReplayReport rep = validate_sequence(inst, seq);
    out_ << (rep.feasible ? "FEASIBLE " : "INFEASIBLE ") << rep.steps << '\n';
    out_ << "final " << format_set(inst.graph, rep.final_configuration) << '\n';
    return rep.feasible ? kYes : kNo;
  }

  int enumerate() {
    Graph g = io::parse_graph(io::read_file(opt_.input), true);
    std::vector<VertexSet> sets;
    if (opt_.what == "covers") {
      sets = enumerate_minimal_vertex_covers_split(g);
    } else if (opt_.what == "mis") {
      sets = enumerate_maximal_independent_sets_split(g);
    } else if (opt_.what == "mfvs") {
      sets = enumerate_minimal_fvs_split(g);
    } else {
      if (opt_.k < 0) throw InputError("--what reps needs --k");
      for (const auto& rep : enumerate_compact_representations(g, opt_.k)) {
        out_ << format_representation(g, rep) << '\n';
      }
      return kYes;
    }
    std::vector<std::string> lines;
    for (const auto& s : sets) lines.push_back(format_set(g, s));
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) out_ << line << '\n';
    return kYes;
  }

  int generate() {
    std::string text = io::read_file(opt_.input);
    std::string produced;
    if (opt_.reduction == "x3c") {
      X3CInstance x = parse_x3c(text);
      DiscoveryInstance inst = x3c_to_vcd(x);
      if (!opt_.cover.empty()) {
        std::vector<std::size_t> cover;
        for (std::size_t i : opt_.cover) {
          if (i == 0) throw InputError("--cover takes 1-based set indices");
          cover.push_back(i - 1);
        }
        write_witness(inst.graph, x3c_witness_to_moves(x, cover));
      }
      produced = io::format_instance(inst);
    } else if (opt_.reduction == "triangulate") {
      produced = io::format_instance(vcd_to_fvsd(io::parse_instance(text)));
    } else {
      Graph g = io::parse_graph(text, true);
      if (opt_.k < 0) throw InputError("--reduction " + opt_.reduction + " needs --k");
      Problem problem = Problem::VertexCover;
      int k = opt_.k;
      if (opt_.reduction == "diam-vc") {
        std::tie(g, k) = diameterize_vc(g, k);
      } else if (opt_.reduction == "diam-fvs") {
        std::tie(g, k) = diameterize_fvs(g, k);
        problem = Problem::FeedbackVertexSet;
      } else {
        if (opt_.problem.empty()) throw InputError("--reduction search needs --problem");
        problem = parse_problem(opt_.problem);
      }
      produced = io::format_instance(search_to_discovery(g, problem, k, placement(g, k)));
    }
    if (opt_.output_file.empty()) {
      out_ << produced;
    } else {
      io::write_file(opt_.output_file, produced);
    }
    return kYes;
  }

 private:
  static std::string pick_method(const DiscoveryInstance& inst) {
    if (inst.problem != Problem::DominatingSet && split_partition(inst.graph)) return "split";
    if (inst.problem == Problem::FeedbackVertexSet) return "fvs-fpt";
    return "oracle";
  }

  OracleOptions oracle_options() const {
    OracleOptions o;
    if (const char* env = std::getenv(kOracleCapEnv)) {
      try {
        std::size_t used = 0;
        o.state_cap = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw InputError(std::string(kOracleCapEnv) + " must be a positive integer");
      }
    }
    if (opt_.cap) o.state_cap = *opt_.cap;
    return o;
  }

  int run_oracle(const DiscoveryInstance& inst) {
    auto d = discover_min_moves(inst, oracle_options());
    if (!d) return report(false, 0, inst, nullptr);
    return report(true, d->steps, inst, &d->witness);
  }

  int report(bool yes, int steps, const DiscoveryInstance& inst, const MoveSequence* witness) {
    if (!yes) {
      out_ << "NO\n";
      return kNo;
    }
    out_ << "YES " << steps << '\n';
    if (witness) write_witness(inst.graph, *witness);
    return kYes;
  }

  void write_witness(const Graph& g, const MoveSequence& seq) {
    if (opt_.witness_file.empty()) return;
    if (opt_.witness_file == "-") {
      out_ << io::format_moves(g, seq);
    } else {
      io::write_file(opt_.witness_file, io::format_moves(g, seq));
    }
  }

  Configuration placement(const Graph& g, int k) const {
    if (opt_.placement.empty()) {
      if (static_cast<std::size_t>(k) > g.order()) throw InputError("--k exceeds the number of vertices");
      Configuration c(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<VertexId>(i);
      return c;
    }
    return names_to_set(g, opt_.placement);
  }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Token sliding solution discovery", "tokslide"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Decide an instance and report the minimum number of moves");
  solve->add_option("instance", opt.input, "Instance file")->required();
  solve->add_option("--method", opt.method, "Solver")
      ->check(CLI::IsMember({"auto", "oracle", "cw", "fvs-fpt", "split"}));
  solve->add_option("--expr", opt.expr_file, "Clique-width expression (for --method cw)");
  solve->add_option("--witness", opt.witness_file, "Write the move sequence here ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Replay a move sequence against an instance");
  verify->add_option("instance", opt.input, "Instance file")->required();
  verify->add_option("moves", opt.moves_file, "Move file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive breadth-first search");
  oracle->add_option("instance", opt.input, "Instance file")->required();
  oracle->add_option("--cap", opt.cap, "State cap (overrides $" + std::string(kOracleCapEnv) + ")")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--witness", opt.witness_file, "Write the move sequence here ('-' for stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "List candidate solutions");
  enumerate->add_option("--what", opt.what, "covers|mis|mfvs on split graphs, reps for compact FVS representations")
      ->required()
      ->check(CLI::IsMember({"covers", "mis", "mfvs", "reps"}));
  enumerate->add_option("graph", opt.input, "Graph or instance file")->required();
  enumerate->add_option("--k", opt.k, "Size bound for reps")->check(CLI::NonNegativeNumber);

  auto* generate = app.add_subcommand("generate", "Build instances from reductions");
  generate->add_option("--reduction", opt.reduction, "Reduction")
      ->required()
      ->check(CLI::IsMember({"x3c", "triangulate", "diam-vc", "diam-fvs", "search"}));
  generate->add_option("input", opt.input, "x3c file, instance (triangulate) or graph")->required();
  generate->add_option("-o,--output", opt.output_file, "Output file (default stdout)");
  generate->add_option("--k", opt.k, "Solution size")->check(CLI::NonNegativeNumber);
  generate->add_option("--problem", opt.problem, "VC|IS|DS|FVS (search)");
  generate->add_option("--placement", opt.placement, "Token vertices (default: first k vertices)");
  generate->add_option("--cover", opt.cover, "x3c: 1-based indices of an exact cover");
  generate->add_option("--witness", opt.witness_file, "x3c: write the cover's move sequence here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  Runner runner(opt, out);
  try {
    if (*solve) return runner.solve();
    if (*verify) return runner.verify();
    if (*oracle) return runner.oracle();
    if (*enumerate) return runner.enumerate();
    return runner.generate();
  } catch (const SequenceError& e) {
    err << "invalid move sequence: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace tokslide::cli
