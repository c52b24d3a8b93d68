// fpi: classify a graded quotient of F_p[x_1..x_n] given as a ring-spec file.
//
//   fpi --input ring.txt [--check all] [--format json] [--seed 0]
//   fpi census --family monomial --vars 3 --max-degree 2 --primes 2,3
//
// Exit status: 0 decisive, 2 some verdict inconclusive, 1 error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fpi/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int fail(const fpi::Error& e, bool json) {
  if (json) std::cout << fpi::error_json(e).dump(2) << "\n";
  std::cerr << "fpi: " << e.what() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide Gorenstein, Cohen-Macaulay, F-pure and FPI for graded F_p-algebras"};
  app.set_version_flag("--version", "fpi 1.0");

  std::string input, check_name = "all", format = "json";
  std::uint64_t seed = 0, trials = 256;
  int max_degree = 4;
  std::uint64_t dual_limit = 1024;
  bool affine = false;
  app.add_option("--input", input, "ring-spec file, - for stdin");
  app.add_option("--check", check_name, "what to decide")
      ->check(CLI::IsMember({"all", "fpi", "gorenstein", "fpure", "canonical"}));
  app.add_option("--seed", seed, "seed for randomized searches");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-degree", max_degree, "degrees walked past the lowest one by embedding and multiplier searches")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--trials", trials, "random draws when a search space is too large to enumerate");
  app.add_option("--dual-check-limit", dual_limit, "skip the Hom(F_*R, R) cross-check when p^n exceeds this");
  app.add_flag("--affine", affine, "accept an inhomogeneous ideal and test F-purity at the origin only");

  auto* census = app.add_subcommand("census", "tabulate verdicts over a family of rings as CSV");
  std::string family = "monomial", primes_text = "2";
  std::size_t cvars = 3, samples = 20, max_rows = 2000;
  unsigned cdegree = 2, threads = 0;
  int dimension = -1;
  census->add_option("--family", family)->check(CLI::IsMember({"monomial", "binomial-sample"}));
  census->add_option("--vars", cvars, "number of variables, at most 4")->check(CLI::Range(1, 4));
  census->add_option("--max-degree", cdegree, "largest generator degree")->check(CLI::Range(2, 6));
  census->add_option("--primes", primes_text, "comma-separated primes");
  census->add_option("--seed", seed);
  census->add_option("--trials", trials);
  census->add_option("--samples", samples, "rings per prime for binomial-sample");
  census->add_option("--dimension", dimension, "keep rows of this Krull dimension only");
  census->add_option("--max-rows", max_rows, "stop enumerating after this many rings");
  census->add_option("--threads", threads, "worker threads, 0 for all cores");

  CLI11_PARSE(app, argc, argv);

  fpi::ClassifyOptions opt;
  opt.seed = seed;
  opt.trials = trials;
  opt.extra_degrees = max_degree;
  opt.dual_check_limit = dual_limit;

  if (*census) {
    try {
      fpi::CensusConfig c;
      c.family = family == "monomial" ? fpi::Family::monomial : fpi::Family::binomial_sample;
      c.nvars = cvars;
      c.max_degree = cdegree;
      c.primes.clear();
      std::stringstream ss(primes_text);
      for (std::string tok; std::getline(ss, tok, ',');) {
        unsigned long v = std::stoul(tok);
        fpi::PrimeField check(static_cast<std::uint32_t>(v));
        c.primes.push_back(static_cast<std::uint32_t>(v));
      }
      c.seed = seed;
      c.samples = samples;
      if (dimension >= 0) c.dimension = static_cast<std::size_t>(dimension);
      c.max_rows = max_rows;
      c.threads = threads;
      c.classify = opt;
      auto res = fpi::run_census(c);
      std::cout << fpi::census_csv(res);
      auto s = fpi::summarize(res);
      std::cerr << "rows " << s.rows << ", FPI " << s.fpi << ", Gorenstein " << s.gorenstein << ", FPI not Gorenstein "
                << s.fpi_not_gorenstein << ", inconclusive " << s.inconclusive << ", errors " << s.errors
                << (res.partial ? ", PARTIAL: " + res.partial_reason : "") << "\n";
      return (res.partial || s.inconclusive) ? 2 : 0;
    } catch (const fpi::Error& e) {
      return fail(e, false);
    } catch (const std::exception& e) {
      std::cerr << "fpi: " << e.what() << "\n";
      return 1;
    }
  }

  const bool json = format == "json";
  if (input.empty()) {
    std::cerr << "fpi: --input is required\n";
    return 1;
  }
  try {
    auto R = fpi::parse_ring_spec(read_file(input), !affine);
    auto out = fpi::run_report(R, {*fpi::parse_check(check_name), opt, json});
    std::cout << out.text;
    if (!out.error.empty()) std::cerr << "fpi: " << out.error << "\n";
    return out.exit_code;
  } catch (const fpi::Error& e) {
    return fail(e, json);
  } catch (const std::exception& e) {
    std::cerr << "fpi: " << e.what() << "\n";
    return 1;
  }
}
