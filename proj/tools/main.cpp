#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triplet/repspec.hpp"
#include "triplet/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

// "--n 3..6" or "--n 4" selects the rank range for a suite run.
bool parse_range(const std::string& text, std::optional<int>& lo, std::optional<int>& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      lo = v;
      hi = v;
      return true;
    }
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

int run_command(const std::string& suite, const std::string& range,
                const std::vector<std::uint32_t>& primes, int depth, int cap,
                const std::string& out_path) {
  triplet::SuiteSpec spec;
  spec.suite = suite;
  if (!triplet::suite_name_valid(suite)) {
    std::cerr << "unknown suite: " << suite << "\n";
    return kExitError;
  }
  if (!range.empty() &&
      (!parse_range(range, spec.n_lo, spec.n_hi) || *spec.n_lo > *spec.n_hi)) {
    std::cerr << "bad --n range: " << range << "\n";
    return kExitError;
  }
  if (!primes.empty()) spec.primes = primes;
  spec.depth = depth;
  spec.cap = cap;

  const triplet::VerificationReport report = triplet::run_suite(spec);
  const std::string text = report.to_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return kExitError;
    }
    out << text;
  }
  bool any_error = false;
  for (const auto& c : report.checks)
    if (c.status == "error") any_error = true;
  if (any_error) return kExitError;
  return report.all_passed() ? kExitPass : kExitFail;
}

int eval_command(const std::string& spec, const std::string& word) {
  try {
    std::cout << triplet::eval_repspec_word(spec, word) << "\n";
    return kExitPass;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
}

int census_command(const std::string& kind, std::uint32_t p) {
  try {
    triplet::ClassificationCensus census;
    if (kind == "triplet")
      census = triplet::classify_homog_2local_fp(triplet::PresentationKind::Triplet, p);
    else if (kind == "virtual")
      census =
          triplet::classify_homog_2local_fp(triplet::PresentationKind::VirtualTriplet, p);
    else if (kind == "welded")
      census =
          triplet::classify_homog_2local_fp(triplet::PresentationKind::WeldedTriplet, p);
    else if (kind == "l3")
      census = triplet::classify_l3_2local_fp(p);
    else {
      std::cerr << "unknown census kind: " << kind << "\n";
      return kExitError;
    }
    std::cout << triplet::census_to_json(census).dump(2) << "\n";
    return census.all_matched() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tool for triplet-group representations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a verification suite");
  std::string suite;
  std::string range;
  std::vector<std::uint32_t> primes;
  int depth = 8;
  int cap = 10000;
  std::string out_path;
  run->add_option("suite", suite, "tits | mu | two-local | l3-families | extensions | all")
      ->required();
  run->add_option("--n", range, "rank range, e.g. 3..6 or 4");
  run->add_option("--primes", primes, "field sizes for the censuses")->delimiter(',');
  run->add_option("--depth", depth, "kernel witness search depth");
  run->add_option("--cap", cap, "closure / span element cap");
  run->add_option("--out", out_path, "write the JSON report to this file");

  auto* eval = app.add_subcommand("eval", "Evaluate a representation on a word");
  std::string repspec;
  std::string word;
  eval->add_option("repSpec", repspec, "e.g. mu:n=3,k=1 or omega1:n=2,b=2,x=3")->required();
  eval->add_option("word", word, "e.g. \"l1 l2 l1\"; empty means the identity");

  auto* census = app.add_subcommand("census", "Classify two-local candidates over F_p");
  std::string kind;
  std::uint32_t p = 5;
  census->add_option("kind", kind, "triplet | virtual | welded | l3")->required();
  census->add_option("--p", p, "prime modulus, p > 3")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(suite, range, primes, depth, cap, out_path);
  if (eval->parsed()) return eval_command(repspec, word);
  if (census->parsed()) return census_command(kind, p);
  return kExitError;
}
