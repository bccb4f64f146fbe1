#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kummer/family.hpp"
#include "kummer/hodge.hpp"
#include "kummer/kodaira.hpp"
#include "kummer/monodromy.hpp"
#include "kummer_app/document.hpp"
#include "kummer_app/render.hpp"
#include "kummer_app/verify.hpp"

using namespace kummer;
using namespace kummer::app;

namespace {

enum Exit { ok = 0, check_failed = 1, invalid_input = 2, unsupported = 3 };

int invalid(const std::string& msg) {
  std::cerr << "invalid input: " << msg << '\n';
  return invalid_input;
}

int run_report(const std::string& path, std::optional<OutputFormat> fmt_flag) {
  InputDocument doc;
  try {
    doc = load_document(path);
  } catch (const DocumentError& e) {
    std::cerr << "invalid input: " << path << '\n';
    for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
    return invalid_input;
  }
  OutputFormat fmt = fmt_flag.value_or(doc.options.output_format.value_or(OutputFormat::text));
  hodge::CYReport rep;
  try {
    rep = doc.tuple ? hodge::analyze(*doc.tuple) : hodge::analyze(*doc.branch_data);
  } catch (const std::invalid_argument& e) {
    return invalid(e.what());
  }
  render_report(std::cout, rep, fmt);
  return rep.unsupported.empty() ? ok : unsupported;
}

int run_enumerate(int max_degree, long long budget, OutputFormat fmt) {
  if (max_degree < 0 || max_degree > 12) return invalid("--max-degree must lie in [0, 12]");
  std::vector<hodge::CYReport> rows;
  hodge::SearchLimits limits{16, budget};
  for (const auto& b : hodge::enumerate_cy(max_degree)) rows.push_back(hodge::analyze(b, limits));
  render_catalog(std::cout, rows, fmt);
  return ok;
}

int run_monodromy(const monodromy::TrackOptions& opt, OutputFormat fmt) {
  monodromy::PunctureTable t;
  try {
    t = monodromy::puncture_table(opt);
  } catch (const std::invalid_argument& e) {
    return invalid(e.what());
  } catch (const monodromy::CollisionError& e) {
    std::cerr << "tracking failed: " << e.what() << '\n';
    return check_failed;
  } catch (const monodromy::ConvergenceError& e) {
    std::cerr << "tracking failed: " << e.what() << '\n';
    return check_failed;
  }
  render_monodromy(std::cout, t, opt, fmt);
  return t.product_is_identity ? ok : check_failed;
}

int run_fibers(OutputFormat fmt) {
  std::vector<FiberRow> rows;
  auto add = [&](const std::string& name, const kodaira::WeierstrassFamily& w) {
    RationalFunction j = kodaira::j_invariant(w);
    for (const auto& f : kodaira::classify(w)) {
      rows.push_back({name, f, order_at(j, f.place), kodaira::euler_number(f.type, f.n)});
    }
  };
  add("E1", family::e1_model());
  add("E2", family::e2_model());
  render_fibers(std::cout, rows, fmt);
  return ok;
}

int run_verify() {
  bool all = true;
  run_all([&](const Criterion& c) {
    all = all && c.passed();
    std::printf("[%s] %2d %s (%.2f s)\n", c.passed() ? "PASS" : "FAIL", c.id, c.title.c_str(), c.seconds);
    for (const auto& k : c.checks) {
      std::printf("       %-4s %s: expected %s, got %s\n", k.passed ? "ok" : "FAIL", k.name.c_str(),
                  k.expected.c_str(), k.actual.c_str());
    }
    std::fflush(stdout);
  });
  return all ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kummer-fibred Calabi-Yau threefolds: covers, fibres, monodromy and Hodge numbers"};
  app.require_subcommand(1);
  std::string format_name;
  app.add_option("--format", format_name, "Output format: text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));

  auto* report = app.add_subcommand("report", "Analyze a branch-data or tuple document");
  std::string path;
  report->add_option("file", path, "Input document (JSON)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List all Calabi-Yau branch data up to a degree");
  int max_degree = 0;
  long long budget = 200000;
  enumerate->add_option("--max-degree", max_degree, "Largest degree n of g")->required();
  enumerate->add_option("--search-budget", budget, "Tuple candidates examined per datum")->check(CLI::PositiveNumber);

  auto* mono = app.add_subcommand("monodromy", "Track the six fibre points around 0, 1/256 and infinity");
  monodromy::TrackOptions opt;
  std::string input;
  mono->add_option("--precision", opt.precision_bits, "Working precision in bits");
  mono->add_option("--steps", opt.initial_steps, "Initial steps per path piece");
  mono->add_option("--step-scale", opt.step_scale, "Scale of the largest step");
  mono->add_option("--input", input, "Document whose options supply precision and step scale");

  app.add_subcommand("fibers", "Singular fibres of the elliptic models E1 and E2");
  app.add_subcommand("verify-paper", "Re-check every reference value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : invalid_input;
  }

  std::optional<OutputFormat> fmt_flag;
  if (!format_name.empty()) fmt_flag = parse_format(format_name);
  OutputFormat fmt = fmt_flag.value_or(OutputFormat::text);

  try {
    if (*report) return run_report(path, fmt_flag);
    if (*enumerate) return run_enumerate(max_degree, budget, fmt);
    if (*mono) {
      if (!input.empty()) {
        try {
          auto doc = load_document(input);
          if (doc.options.precision_bits && mono->count("--precision") == 0) opt.precision_bits = *doc.options.precision_bits;
          if (doc.options.step_scale && mono->count("--step-scale") == 0) opt.step_scale = *doc.options.step_scale;
          if (!fmt_flag && doc.options.output_format) fmt = *doc.options.output_format;
        } catch (const DocumentError& e) {
          std::cerr << "invalid input: " << input << '\n';
          for (const auto& v : e.violations()) std::cerr << "  " << v << '\n';
          return invalid_input;
        }
      }
      return run_monodromy(opt, fmt);
    }
    if (app.got_subcommand("fibers")) return run_fibers(fmt);
    if (app.got_subcommand("verify-paper")) return run_verify();
  } catch (const hodge::UnsupportedData& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return unsupported;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return check_failed;
  }
  return invalid_input;
}
