#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtate/report.hpp"

using namespace wtate;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

// CLI11 reads "-2..2" as an option name, so glue negative ranges onto
// their flag before parsing.
std::vector<std::string> join_negative_ranges(int argc, char** argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if ((a == "--twists" || a == "--range") && k + 1 < argc && argv[k + 1][0] == '-' &&
        parse_range(argv[k + 1])) {
      args.push_back(a + "=" + argv[++k]);
    } else {
      args.push_back(a);
    }
  }
  std::reverse(args.begin(), args.end());
  return args;
}

Range require_range(const std::string& flag, const std::string& value, const std::optional<Range>& fallback) {
  if (value.empty()) {
    if (fallback) return *fallback;
    throw CLI::ValidationError(flag, "required (not set in the job file either)");
  }
  auto r = parse_range(value);
  if (!r) throw CLI::ValidationError(flag, "expected LO..HI with LO <= HI, got '" + value + "'");
  return *r;
}

struct Loaded {
  JobSpec job;
  ModulePresentation module;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open job specification '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  JobSpec job = parse_job_spec(text);
  ModulePresentation M = build_module(job, text);
  return {std::move(job), std::move(M)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sheaf cohomology on weighted projective stacks"};
  app.require_subcommand(1);

  std::string spec;
  bool json = false;
  std::string twists, range;
  std::optional<int> imax, r, steps;
  std::optional<std::size_t> max_dim;

  auto* reg_cmd = app.add_subcommand("regularity", "reg(M), sigma, whether H^0_m(M) vanishes, and the chosen r");
  reg_cmd->add_option("spec", spec, "job file")->required();
  reg_cmd->add_flag("--json", json, "emit a JSON document");

  auto* coh_cmd = app.add_subcommand("cohomology", "table of h^i(F(j))");
  coh_cmd->add_option("spec", spec, "job file")->required();
  coh_cmd->add_option("--twists", twists, "twist range LO..HI");
  coh_cmd->add_option("--imax", imax, "highest cohomological index (default n)");
  coh_cmd->add_option("--r", r, "truncation degree (default: chosen from the regularity)");
  coh_cmd->add_option("--max-dim", max_dim, "cap on the dimension of any differential module");
  coh_cmd->add_flag("--json", json, "emit a JSON document");

  auto* tate_cmd = app.add_subcommand("tate", "window of the Tate resolution around r");
  tate_cmd->add_option("spec", spec, "job file")->required();
  tate_cmd->add_option("--steps", steps, "twisted flag iterations");
  tate_cmd->add_option("--r", r, "truncation degree");
  tate_cmd->add_option("--max-dim", max_dim, "cap on the dimension of any differential module");
  tate_cmd->add_flag("--json", json, "emit a JSON document");

  auto* hilb_cmd = app.add_subcommand("hilbert", "dim M_d over a range of degrees");
  hilb_cmd->add_option("spec", spec, "job file")->required();
  hilb_cmd->add_option("--range", range, "degree range LO..HI");
  hilb_cmd->add_flag("--json", json, "emit a JSON document");

  try {
    app.parse(join_negative_ranges(argc, argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    Loaded in = load(spec);
    const JobSpec& job = in.job;
    const auto& defaults = job.defaults;
    Document doc;
    std::string text;
    if (reg_cmd->parsed()) {
      doc = regularity_document(job, regularity_report(in.module));
      text = render_regularity(doc);
    } else if (coh_cmd->parsed()) {
      CohomologyQuery q;
      auto [lo, hi] = require_range("--twists", twists, defaults.twists);
      q.j_min = lo;
      q.j_max = hi;
      q.i_max = imax.value_or(defaults.imax.value_or(-1));
      q.r = r ? r : defaults.r;
      q.max_dimension = max_dim.value_or(defaults.max_dimension.value_or(q.max_dimension));
      doc = cohomology_document(job, sheaf_cohomology(in.module, q));
      text = render_cohomology(doc);
    } else if (tate_cmd->parsed()) {
      int k = steps.value_or(defaults.steps.value_or(-1));
      if (k < 0) throw CLI::ValidationError("--steps", "required nonnegative count (not set in the job file either)");
      TateOptions opts;
      opts.r = r ? r : defaults.r;
      opts.max_dimension = max_dim.value_or(defaults.max_dimension.value_or(opts.max_dimension));
      doc = tate_document(job, tate_window(in.module, k, opts), k);
      text = render_tate(doc);
    } else {
      auto rg = require_range("--range", range, defaults.range);
      doc = hilbert_document(job, in.module, rg);
      text = render_hilbert(doc);
    }
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
    return 0;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SpecError& e) {
    std::cerr << spec << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return kExitInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
