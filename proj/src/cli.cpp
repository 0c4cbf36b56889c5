#include "semi/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "semi/automorphisms.hpp"
#include "semi/enumeration.hpp"
#include "semi/error.hpp"
#include "semi/inflation.hpp"
#include "semi/partition.hpp"
#include "semi/report_json.hpp"
#include "semi/theorem.hpp"

namespace semi {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input = "-";
  std::string policy = "least";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::optional<std::size_t> max_order;
  std::size_t order = 1;
  std::string mode = "labelled";
  std::string report_path;
  std::size_t threads = 1;
};

std::size_t default_threads() {
  if (const char* env = std::getenv("SEMI_THREADS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

class Runner {
 public:
  Runner(const Options& opts, std::istream& in, std::ostream& out)
      : opts_(opts), in_(in), out_(out) {}

  bool structured() const { return opts_.format == "structured"; }

  TransversalPolicy policy() const {
    if (opts_.policy == "greatest") return TransversalPolicy::greatest();
    if (opts_.policy == "seeded") return TransversalPolicy::seeded(opts_.seed);
    return TransversalPolicy::least();
  }

  SearchLimits limits() const {
    SearchLimits l;
    if (opts_.max_order) l.max_order = *opts_.max_order;
    return l;
  }

  template <typename Parse>
  auto read_input(Parse parse) {
    if (opts_.input == "-") return parse(in_);
    std::ifstream file(opts_.input);
    if (!file) throw Error(ErrorKind::io_failure, "cannot open " + opts_.input);
    return parse(file);
  }

  CayleyTable read_table() {
    return read_input([](std::istream& s) { return parse_table(s); });
  }

  int check() {
    // Parse without the associativity gate so a failure is a verdict, not an error.
    const CayleyTable table = read_input([](std::istream& s) {
      detail::LineReader reader(s);
      return detail::read_table(reader);
    });
    const auto w = check_associativity(table);
    if (structured()) {
      Json j;
      j["order"] = table.order();
      j["associative"] = !w;
      if (w) j["witness"] = {w->i, w->j, w->k};
      out_ << j.dump() << '\n';
    } else if (w) {
      out_ << "not associative: (" << w->i << "*" << w->j << ")*" << w->k << " != "
           << w->i << "*(" << w->j << "*" << w->k << ")\n";
    } else {
      out_ << "associative\n";
    }
    return w ? exit_verdict_false : exit_ok;
  }

  int analyze() {
    const CayleyTable table = read_table();
    const Partition h = compute_h(table);
    const Partition psi = compute_psi(table);
    const Transversal t = choose_transversal(psi, policy());
    const RetractionMap r = induced_retraction(psi, t);
    const auto inflation = verify_inflation(table, r);
    const auto kernel = verify_kernel_in_h(r, h);
    const auto congruence = is_congruence(psi, table);
    const bool ok = !inflation && !kernel && !congruence;

    std::vector<std::size_t> class_sizes;
    for (const auto& b : psi.blocks()) class_sizes.push_back(b.size());
    std::sort(class_sizes.begin(), class_sizes.end());

    std::string inflation_text = "ok";
    if (inflation) {
      inflation_text = std::string(to_string(inflation->axiom)) + " fails at " +
                       std::to_string(inflation->a) + " " + std::to_string(inflation->b);
    }
    if (structured()) {
      Json j;
      j["order"] = table.order();
      j["productSet"] = product_set(table);
      j["h"] = h.blocks();
      j["psi"] = psi.blocks();
      j["psiClassSizes"] = class_sizes;
      j["policy"] = to_string(policy());
      j["transversal"] = t.representatives;
      j["theta"] = r.theta;
      j["psiIsCongruence"] = !congruence;
      j["inflation"] = inflation_text;
      j["kernelInH"] = !kernel;
      out_ << j.dump() << '\n';
    } else {
      out_ << "order: " << table.order() << '\n'
           << "productSet: " << join(product_set(table)) << '\n'
           << "h: " << blocks(h) << '\n'
           << "psi: " << blocks(psi) << '\n'
           << "psiClassSizes: " << join(class_sizes) << '\n'
           << "policy: " << to_string(policy()) << '\n'
           << "transversal: " << join(t.representatives) << '\n'
           << "theta: " << join(r.theta) << '\n'
           << "psiIsCongruence: " << (congruence ? "false" : "true") << '\n'
           << "inflation: " << inflation_text << '\n'
           << "kernelInH: " << (kernel ? "false" : "true") << '\n';
    }
    return ok ? exit_ok : exit_verdict_false;
  }

  int aut() {
    const CayleyTable table = read_table();
    const PermGroup group = enumerate_automorphisms(table, limits());
    if (structured()) {
      Json j;
      j["autOrder"] = group.size();
      Json list = Json::array();
      for (const auto& p : group) list.push_back(std::vector<ElementId>(p.images().begin(), p.images().end()));
      j["automorphisms"] = list;
      out_ << j.dump() << '\n';
    } else {
      out_ << format_group(group);
    }
    return exit_ok;
  }

  int verify() {
    const CayleyTable table = read_table();
    const TheoremReport report = verify_theorem(table, policy(), limits());
    out_ << (structured() ? format_report_json(report) + "\n" : format_report_text(report));
    return report.all_hold() ? exit_ok : exit_verdict_false;
  }

  int build() {
    const FiberSizeSpec spec = read_input([](std::istream& s) { return parse_fiber_spec(s); });
    const Inflation inflation = build_inflation(spec, limits().max_order);
    if (structured()) {
      Json j;
      j["table"] = format_table(inflation.table);
      j["theta"] = inflation.retraction.theta;
      out_ << j.dump() << '\n';
    } else {
      out_ << format_table(inflation.table) << "theta: " << join(inflation.retraction.theta)
           << '\n';
    }
    return exit_ok;
  }

  EnumerationTask task() const {
    EnumerationTask t;
    t.order = opts_.order;
    t.mode = opts_.mode == "iso" ? EnumerationMode::up_to_iso : EnumerationMode::labelled;
    t.parallelism = opts_.threads;
    if (opts_.max_order) t.max_order = *opts_.max_order;
    return t;
  }

  int enumerate() {
    std::size_t count = 0;
    enumerate_semigroups(task(), [&](const CayleyTable& table) {
      ++count;
      if (structured()) {
        Json j;
        j["index"] = count;
        j["table"] = format_table(table);
        out_ << j.dump() << '\n';
      } else {
        out_ << "# table " << count << '\n' << format_table(table);
      }
    });
    if (structured()) {
      out_ << Json{{"count", count}}.dump() << '\n';
    } else {
      out_ << "# count: " << count << '\n';
    }
    return exit_ok;
  }

  int corpus() {
    std::ofstream report;
    if (!opts_.report_path.empty()) {
      report.open(opts_.report_path);
      if (!report) throw Error(ErrorKind::io_failure, "cannot write " + opts_.report_path);
    }
    const CorpusSummary summary =
        corpus_verify(task(), report.is_open() ? &report : nullptr, policy(), limits());
    if (structured()) {
      Json j;
      j["tablesSeen"] = summary.tables_seen;
      j["theoremFailures"] = summary.theorem_failures;
      Json hist = Json::array();
      for (const auto& [key, count] : summary.histogram) {
        const auto& [a, h, g] = key;
        hist.push_back(Json{{"autOrder", a}, {"hOrder", h}, {"gOrder", g}, {"count", count}});
      }
      j["histogram"] = hist;
      j["elapsedMs"] = summary.elapsed.count();
      out_ << j.dump() << '\n';
    } else {
      out_ << format_summary(summary);
    }
    return summary.theorem_failures == 0 ? exit_ok : exit_verdict_false;
  }

 private:
  template <typename T>
  static std::string join(const std::vector<T>& values) {
    std::ostringstream s;
    for (std::size_t i = 0; i < values.size(); ++i) s << (i ? " " : "") << values[i];
    return s.str();
  }

  static std::string blocks(const Partition& p) {
    std::string s;
    for (const auto& b : p.blocks()) s += (s.empty() ? "{" : " {") + join(b) + "}";
    return s;
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Inflation structure and automorphism groups of finite semigroups"};
  app.require_subcommand(1);
  Options opts;
  opts.threads = default_threads();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "Table file, or - for standard input");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", opts.policy, "Transversal policy")
        ->check(CLI::IsMember({"least", "greatest", "seeded"}));
    sub->add_option("--seed", opts.seed, "Seed for --policy seeded");
  };
  auto add_max_order = [&](CLI::App* sub) {
    sub->add_option("--max-order", opts.max_order, "Override the size cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--order", opts.order, "Semigroup order")->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", opts.mode, "labelled or iso")
        ->check(CLI::IsMember({"labelled", "iso"}));
    sub->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  };

  auto* check = app.add_subcommand("check", "Check associativity");
  add_input(check);
  add_format(check);
  auto* analyze = app.add_subcommand("analyze", "h, psi, S^2, transversal and retraction");
  add_input(analyze);
  add_format(analyze);
  add_policy(analyze);
  auto* aut = app.add_subcommand("aut", "List the automorphism group");
  add_input(aut);
  add_format(aut);
  add_max_order(aut);
  auto* verify = app.add_subcommand("verify-theorem", "Verify the Aut S decomposition");
  add_input(verify);
  add_format(verify);
  add_policy(verify);
  add_max_order(verify);
  auto* build = app.add_subcommand("build-inflation", "Inflate a base table by fiber sizes");
  add_input(build);
  add_format(build);
  add_max_order(build);
  auto* enumerate = app.add_subcommand("enumerate", "List all semigroups of an order");
  add_enumeration(enumerate);
  add_format(enumerate);
  add_max_order(enumerate);
  auto* corpus = app.add_subcommand("corpus", "Verify the decomposition on every semigroup of an order");
  add_enumeration(corpus);
  add_format(corpus);
  add_policy(corpus);
  add_max_order(corpus);
  corpus->add_option("--report", opts.report_path, "Write one JSON record per table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  Runner runner(opts, in, out);
  try {
    if (*check) return runner.check();
    if (*analyze) return runner.analyze();
    if (*aut) return runner.aut();
    if (*verify) return runner.verify();
    if (*build) return runner.build();
    if (*enumerate) return runner.enumerate();
    if (*corpus) return runner.corpus();
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_resource_limit() ? exit_resource_limit : exit_input_error;
  }
  return exit_input_error;
}

}  // namespace semi
