#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "arboreal/arboreal.hpp"
#include "arboreal/bounds.hpp"
#include "arboreal/emit.hpp"
#include "arboreal/errors.hpp"
#include "arboreal/inverse_totient.hpp"
#include "arboreal/scoreboard.hpp"
#include "arboreal/sequence.hpp"
#include "arboreal/stats.hpp"
#include "arboreal/totient.hpp"

namespace {

using arboreal::BoundProvider;
using arboreal::IncrementSequence;
using u64 = std::uint64_t;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

unsigned default_threads() {
  if (const char* env = std::getenv("TOTIENT_FOREST_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Sink for every emitter: stdout unless --output names a file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

BoundProvider resolve_bound(const std::string& spec, const IncrementSequence& seq) {
  if (spec == "naturals") return BoundProvider::naturals();
  if (spec == "squares") return BoundProvider::squares();
  if (spec == "none") return BoundProvider::none();
  if (spec == "poly-derive") return arboreal::derive_polynomial_bound(seq);
  if (spec == "auto") {
    switch (seq.kind()) {
      case IncrementSequence::Kind::naturals:
        return BoundProvider::naturals();
      case IncrementSequence::Kind::squares:
        return BoundProvider::squares();
      case IncrementSequence::Kind::cubes:
      case IncrementSequence::Kind::polynomial:
        return arboreal::derive_polynomial_bound(seq);
      default:
        throw std::domain_error(
            "no automatic bound for sequence '" + seq.spec_string() +
            "'; pass --bound none with explicit caps or a concrete bound");
    }
  }
  throw CLI::ValidationError("--bound",
                             "expected auto|naturals|squares|poly-derive|none");
}

struct ForestArgs {
  std::string sequence = "naturals";
  std::string bound = "auto";
  u64 height_cap = 2000;
  u64 node_cap = 10'000'000;
  u64 probe_range = 1000;
  unsigned threads = default_threads();
  bool synthesize = false;
  bool stats = false;
  std::optional<u64> root;
  std::string levels_csv;
  std::string format = "json";
  std::string output;
};

int run_forest(const ForestArgs& args) {
  const IncrementSequence seq = IncrementSequence::parse(args.sequence);
  const BoundProvider bound = resolve_bound(args.bound, seq);
  const arboreal::GrowthCaps caps{args.height_cap, args.node_cap};
  arboreal::FiberCache fiber_cache;
  const arboreal::GrowOptions grow{args.threads, &fiber_cache, args.probe_range};
  Output out(args.output);

  if (args.root) {
    const arboreal::TotientTree tree =
        arboreal::grow_tree(*args.root, seq, bound, caps, grow);
    if (!args.levels_csv.empty()) {
      std::ofstream levels(args.levels_csv);
      if (!levels) throw std::runtime_error("cannot open " + args.levels_csv);
      arboreal::write_levels_csv(levels, tree);
    }
    out.stream() << arboreal::tree_json(tree);
    return kExitOk;
  }

  const arboreal::ForestReport forest = arboreal::grow_forest(seq, bound, caps, grow);
  if (!args.synthesize) out.stream() << arboreal::forest_json(forest);
  if (args.stats) arboreal::write_canopy_csv(out.stream(), arboreal::canopy_density(forest));
  if (args.synthesize) {
    const arboreal::CaseEquation eq = arboreal::synthesize_case_equation(forest);
    if (args.format == "json")
      out.stream() << arboreal::case_equation_json(eq);
    else
      out.stream() << arboreal::case_equation_text(eq);
    if (!eq.conclusive) return kExitInconclusive;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totient scoreboard sequences, fibers and forests"};
  app.require_subcommand(1);

  // phi N
  u64 phi_n = 0;
  CLI::App* phi = app.add_subcommand("phi", "Euler's totient of N");
  phi->add_option("N", phi_n, "argument")->required();

  // fiber M [--order asc|desc] [--oracle] [--format plain|json]
  u64 fiber_m = 0;
  std::string fiber_order = "desc";
  bool fiber_oracle = false;
  std::string fiber_format = "plain";
  std::string fiber_output;
  CLI::App* fiber = app.add_subcommand("fiber", "complete preimage set of phi at M");
  fiber->add_option("M", fiber_m, "target totient value")->required();
  fiber->add_option("--order", fiber_order, "divisor iteration order: asc|desc")
      ->check(CLI::IsMember({"asc", "desc"}));
  fiber->add_flag("--oracle", fiber_oracle, "use the sieve-scan oracle instead");
  fiber->add_option("--format", fiber_format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}));
  fiber->add_option("--output", fiber_output, "write to file instead of stdout");

  // eval --sequence S --n N [--trace]
  std::string eval_sequence = "naturals";
  u64 eval_n = 0;
  bool eval_trace = false;
  std::string eval_output;
  CLI::App* eval = app.add_subcommand("eval", "scoreboard value at one n");
  eval->add_option("--sequence", eval_sequence, "increment sequence spec");
  eval->add_option("--n", eval_n, "evaluation length")->required();
  eval->add_flag("--trace", eval_trace, "emit the full partial-evaluation trace as CSV");
  eval->add_option("--output", eval_output, "write to file instead of stdout");

  // sequence --sequence S --n-max N
  std::string seq_sequence = "naturals";
  u64 seq_n_max = 0;
  unsigned seq_threads = default_threads();
  std::string seq_output;
  CLI::App* sequence = app.add_subcommand("sequence", "scoreboard sequence as CSV");
  sequence->add_option("--sequence", seq_sequence, "increment sequence spec");
  sequence->add_option("--n-max", seq_n_max, "last n")->required();
  sequence->add_option("--threads", seq_threads, "worker threads");
  sequence->add_option("--output", seq_output, "write to file instead of stdout");

  // forest ...
  ForestArgs forest_args;
  CLI::App* forest = app.add_subcommand("forest", "grow the totient forest");
  forest->add_option("--sequence", forest_args.sequence, "increment sequence spec");
  forest->add_option("--bound", forest_args.bound,
                     "auto|naturals|squares|poly-derive|none");
  forest->add_option("--height-cap", forest_args.height_cap, "maximum height");
  forest->add_option("--node-cap", forest_args.node_cap, "node budget per tree");
  forest->add_option("--probe-range", forest_args.probe_range,
                     "scoreboard witness search span past the cap for "
                     "node-capped trees; 0 disables");
  forest->add_option("--threads", forest_args.threads, "worker threads");
  forest->add_flag("--synthesize", forest_args.synthesize,
                   "attempt a closed-form case equation");
  forest->add_flag("--stats", forest_args.stats, "append canopy density CSV");
  u64 forest_root = 0;
  CLI::Option* root_opt =
      forest->add_option("--root", forest_root, "grow a single tree at this root");
  forest->add_option("--levels-csv", forest_args.levels_csv,
                     "with --root: write height,value rows to this file");
  forest->add_option("--format", forest_args.format, "json|text for the case equation")
      ->check(CLI::IsMember({"json", "text"}));
  forest->add_option("--output", forest_args.output, "write to file instead of stdout");

  // freq --sequence S --n-max N [--window W]
  std::string freq_sequence = "naturals";
  u64 freq_n_max = 0;
  u64 freq_window = 0;
  unsigned freq_threads = default_threads();
  std::string freq_output;
  CLI::App* freq = app.add_subcommand(
      "freq", "value frequencies (or rolling shares with --window)");
  freq->add_option("--sequence", freq_sequence, "increment sequence spec");
  freq->add_option("--n-max", freq_n_max, "last n")->required();
  freq->add_option("--window", freq_window, "rolling window size; 0 = plain table");
  freq->add_option("--threads", freq_threads, "worker threads");
  freq->add_option("--output", freq_output, "write to file instead of stdout");

  // validate-bound --sequence S --bound B --n-max N
  std::string vb_sequence = "naturals";
  std::string vb_bound = "auto";
  u64 vb_n_max = 0;
  unsigned vb_threads = default_threads();
  std::string vb_format = "csv";
  std::string vb_output;
  CLI::App* vb = app.add_subcommand("validate-bound",
                                    "scan traces for bound violations");
  vb->add_option("--sequence", vb_sequence, "increment sequence spec");
  vb->add_option("--bound", vb_bound, "auto|naturals|squares|poly-derive|none");
  vb->add_option("--n-max", vb_n_max, "last n")->required();
  vb->add_option("--threads", vb_threads, "worker threads");
  vb->add_option("--format", vb_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  vb->add_option("--output", vb_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (phi->parsed()) {
      std::cout << arboreal::euler_phi(phi_n) << '\n';
      return kExitOk;
    }

    if (fiber->parsed()) {
      const arboreal::DivisorOrder order = fiber_order == "asc"
                                               ? arboreal::DivisorOrder::ascending
                                               : arboreal::DivisorOrder::descending;
      const arboreal::TotientFiber result =
          fiber_oracle ? arboreal::totient_fiber_bruteforce(fiber_m)
                       : arboreal::totient_fiber(fiber_m, order);
      Output out(fiber_output);
      if (fiber_format == "json")
        out.stream() << arboreal::fiber_json(result);
      else
        arboreal::write_fiber_line(out.stream(), result);
      return kExitOk;
    }

    if (eval->parsed()) {
      const IncrementSequence seq = IncrementSequence::parse(eval_sequence);
      Output out(eval_output);
      if (eval_trace) {
        arboreal::write_trace_csv(out.stream(), arboreal::evaluate_trace(seq, eval_n));
      } else {
        out.stream() << arboreal::scoreboard_value(seq, eval_n) << '\n';
      }
      return kExitOk;
    }

    if (sequence->parsed()) {
      const IncrementSequence seq = IncrementSequence::parse(seq_sequence);
      const arboreal::PhiCache cache;
      const arboreal::EvalOptions options{seq_threads, &cache};
      Output out(seq_output);
      arboreal::write_sequence_csv(out.stream(),
                                   arboreal::scoreboard_sequence(seq, seq_n_max, options));
      return kExitOk;
    }

    if (forest->parsed()) {
      if (root_opt->count() > 0) forest_args.root = forest_root;
      return run_forest(forest_args);
    }

    if (freq->parsed()) {
      const IncrementSequence seq = IncrementSequence::parse(freq_sequence);
      const arboreal::PhiCache cache;
      const arboreal::EvalOptions options{freq_threads, &cache};
      Output out(freq_output);
      if (freq_window > 0) {
        arboreal::write_rolling_csv(
            out.stream(), arboreal::fruit_rolling_share(seq, freq_n_max,
                                                        freq_window, options));
      } else {
        arboreal::write_frequency_csv(
            out.stream(), arboreal::value_frequencies(seq, freq_n_max, options));
      }
      return kExitOk;
    }

    if (vb->parsed()) {
      const IncrementSequence seq = IncrementSequence::parse(vb_sequence);
      const BoundProvider bound = resolve_bound(vb_bound, seq);
      const arboreal::PhiCache cache;
      const arboreal::EvalOptions options{vb_threads, &cache};
      const std::vector<arboreal::BoundViolation> violations =
          arboreal::validate_bound_empirically(seq, bound, vb_n_max, options);
      Output out(vb_output);
      if (vb_format == "json")
        out.stream() << arboreal::violations_json(violations, seq.spec_string(),
                                                  bound.describe(), bound.evidence());
      else
        arboreal::write_violations_csv(out.stream(), violations);
      return violations.empty() ? kExitOk : kExitDomain;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
