#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "fpi/cli.hpp"
#include "test_support.hpp"

using namespace fpi;

namespace {

const char* kFlagship = "p=2\nvars=x,y,z\nideal=x*y, x*z, y*z\n";

ParseError parse_failure(const std::string& text) {
  try {
    parse_ring_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(ErrorKind::PipelineInvariant, 0, 0, "");
}

bool same_ring(const RingSpec& a, const RingSpec& b) {
  return a.p() == b.p() && a.vars() == b.vars() && a.label() == b.label() &&
         a.ideal().generators() == b.ideal().generators();
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(FPI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(RingSpecFile, Flagship) {
  auto R = parse_ring_spec(kFlagship);
  EXPECT_EQ(R.p(), 2u);
  EXPECT_EQ(R.vars(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(R.ideal().generators().size(), 3u);
  EXPECT_TRUE(R.is_zero(R.poly("x*y")));
}

TEST(RingSpecFile, CommentsLabelsAndRepeatedIdealLines) {
  auto R = parse_ring_spec("# axes\nlabel = the axes  # trailing\n\n  p = 3\nvars = x , y, z\nideal = x*y\nideal = x*z, y*z\n");
  EXPECT_EQ(R.label(), "the axes");
  EXPECT_EQ(R.p(), 3u);
  EXPECT_EQ(R.ideal().generators().size(), 3u);
  auto Z = parse_ring_spec("p=5\nvars=x\nideal=\n");
  EXPECT_TRUE(Z.ideal().generators().empty());
  auto W = parse_ring_spec("p=5\r\nvars=x,y\r\n");
  EXPECT_EQ(W.nvars(), 2u);
}

TEST(RingSpecFile, Diagnostics) {
  auto np = parse_failure("p=4\nvars=x\n");
  EXPECT_EQ(np.kind(), ErrorKind::NonPrime);
  EXPECT_EQ(np.line(), 1u);
  EXPECT_EQ(np.column(), 3u);

  auto nh = parse_failure("p=3\nvars=x\nideal=x^2+x\n");
  EXPECT_EQ(nh.kind(), ErrorKind::NonHomogeneous);
  EXPECT_EQ(nh.line(), 3u);
  EXPECT_EQ(nh.column(), 7u);

  auto uv = parse_failure("p=3\nvars=x,y\nideal=x*y, x*q\n");
  EXPECT_EQ(uv.kind(), ErrorKind::UnknownVariable);
  EXPECT_EQ(uv.line(), 3u);
  EXPECT_EQ(uv.column(), 14u);

  EXPECT_EQ(parse_failure("p=3\nvars=x\nfoo=1\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=3\nvars=x\nideal x\n").line(), 3u);
  EXPECT_EQ(parse_failure("vars=x\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=3\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=three\nvars=x\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=3\nvars=x,x\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=3\nvars=x,2y\n").column(), 8u);
  EXPECT_EQ(parse_failure("p=3\nvars=x,y\nideal=x*y,,y^2\n").kind(), ErrorKind::Syntax);
  EXPECT_EQ(parse_failure("p=3\nvars=x,y\nideal=x*y+\n").kind(), ErrorKind::Syntax);
}

TEST(RingSpecFile, AffineInputNeedsTheFlag) {
  const char* cusp = "p=3\nvars=x,y\nideal=y^2 - x^3\n";
  EXPECT_THROW(parse_ring_spec(cusp), ParseError);
  EXPECT_FALSE(parse_ring_spec(cusp, false).is_homogeneous());
}

TEST(RingSpecFile, PrintParseRoundTrip) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 101}[rng() % 5];
    PrimeField F(p);
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> vars = {"x", "y", "z", "w"};
    vars.resize(n);
    std::vector<Polynomial> gens;
    for (std::size_t k = rng() % 4; k > 0; --k) {
      auto g = gen::random_homogeneous(rng, F, n, 1 + rng() % 3, 4);
      if (!g.is_zero()) gens.push_back(g);
    }
    RingSpec R(F, vars, gens, t % 2 ? "sample " + std::to_string(t) : "");
    auto back = parse_ring_spec(format_ring_spec(R));
    EXPECT_TRUE(same_ring(R, back)) << format_ring_spec(R);
    EXPECT_EQ(format_ring_spec(back), format_ring_spec(R));
  }
}

TEST(Report, FlagshipJson) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto text = "p=" + std::to_string(p) + "\nvars=x,y,z\nideal=x*y, x*z, y*z\n";
    auto r = fpi_verdict(parse_ring_spec(text));
    auto j = report_json(r);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["weakly_fpi"], true);
    EXPECT_EQ(j["gorenstein"], false);
    EXPECT_EQ(j["f_pure"], true);
    EXPECT_EQ(j["dimension"], 1);
    EXPECT_EQ(j["status"], "decisive");
    EXPECT_EQ(exit_code(r), 0);
    // witnesses are polynomials in the input grammar
    auto R = parse_ring_spec(text);
    for (auto& g : j["details"]["canonical_ideal"]["generators"]) EXPECT_NO_THROW(R.poly(g.get<std::string>()));
  }
}

TEST(Report, KeyOrderIsStable) {
  auto j = report_json(fpi_verdict(parse_ring_spec(kFlagship)));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  ASSERT_GE(keys.size(), 4u);
  EXPECT_EQ(keys[0], "schema");
  EXPECT_EQ(keys[1], "ring");
  EXPECT_EQ(keys.back(), "notes");
}

TEST(Report, DeterministicBytes) {
  for (const char* text : {kFlagship, "p=3\nvars=x,y\nideal=x^2, x*y, y^2\n", "p=5\nvars=x,y,z,w\nideal=x*y, x*z, x*w, y*z, y*w, z*w\n"}) {
    ClassifyOptions opt;
    opt.seed = 7;
    auto a = report_json(fpi_verdict(parse_ring_spec(text), opt)).dump(2);
    auto b = report_json(fpi_verdict(parse_ring_spec(text), opt)).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(report_text(fpi_verdict(parse_ring_spec(text), opt)), report_text(fpi_verdict(parse_ring_spec(text), opt)));
  }
}

TEST(Report, ArtinianNonGorenstein) {
  auto r = fpi_verdict(parse_ring_spec("p=3\nvars=x,y\nideal=x^2,x*y,y^2\n"));
  auto j = report_json(r);
  EXPECT_EQ(j["weakly_fpi"], false);
  EXPECT_EQ(j["method"], "artinian_E");
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Report, InconclusiveMapsToTwo) {
  Report r;
  r.weakly_fpi = Verdict::inconclusive;
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_EQ(report_json(r)["weakly_fpi"], "inconclusive");
  EXPECT_EQ(report_json(r)["status"], "inconclusive");
}

TEST(Report, ParseErrorJsonCarriesPosition) {
  try {
    parse_ring_spec("p=4\nvars=x\n");
    FAIL();
  } catch (const Error& e) {
    auto j = error_json(e);
    EXPECT_EQ(j["error"]["kind"], "NonPrime");
    EXPECT_EQ(j["error"]["line"], 1);
  }
}

TEST(Report, RunReportExamples) {
  auto flag = run_report(parse_ring_spec(kFlagship), {});
  EXPECT_EQ(flag.exit_code, 0);
  auto j = Json::parse(flag.text);
  EXPECT_EQ(j["weakly_fpi"], true);
  EXPECT_EQ(j["details"]["multiplier"]["h"], "x + y + z");
  EXPECT_EQ(j["details"]["multiplier"]["f"], "1");

  auto dim2 = run_report(parse_ring_spec("p=2\nvars=x,y,z\nideal=x*y\n"), {});
  EXPECT_EQ(dim2.exit_code, 1);
  EXPECT_EQ(Json::parse(dim2.text)["error"]["kind"], "UnsupportedDimension");
  ReportFlags fpure_only;
  fpure_only.check = Check::fpure;
  EXPECT_EQ(run_report(parse_ring_spec("p=2\nvars=x,y,z\nideal=x*y\n"), fpure_only).exit_code, 0);

  auto fat = run_report(parse_ring_spec("p=5\nvars=x,y\nideal=x^2,x*y,y^2\n"), {Check::all, {}, false});
  EXPECT_EQ(fat.exit_code, 0);
  EXPECT_NE(fat.text.find("weakly FPI     false"), std::string::npos);

  auto cusp = parse_ring_spec("p=3\nvars=x,y\nideal=y^2 - x^3\n", false);
  EXPECT_EQ(run_report(cusp, {Check::gorenstein, {}, true}).exit_code, 1);
  auto c = Json::parse(run_report(cusp, {}).text);
  EXPECT_EQ(c["f_pure"], false);
  EXPECT_TRUE(c["dimension"].is_null());
}

TEST(Binary, ExitCodes) {
  auto flag = run_cli("--input " + write_temp("flag.txt", kFlagship));
  EXPECT_EQ(flag.status, 0);
  auto j = Json::parse(flag.out);
  EXPECT_EQ(j["weakly_fpi"], true);
  EXPECT_EQ(j["gorenstein"], false);
  EXPECT_EQ(j["f_pure"], true);

  auto again = run_cli("--input " + write_temp("flag.txt", kFlagship));
  EXPECT_EQ(again.out, flag.out);

  auto dim2 = run_cli("--input " + write_temp("d2.txt", "p=2\nvars=x,y,z\nideal=x*y\n"));
  EXPECT_EQ(dim2.status, 1);
  EXPECT_EQ(Json::parse(dim2.out)["error"]["kind"], "UnsupportedDimension");

  auto fat = run_cli("--input " + write_temp("fat.txt", "p=3\nvars=x,y\nideal=x^2,x*y,y^2\n"));
  EXPECT_EQ(fat.status, 0);
  EXPECT_EQ(Json::parse(fat.out)["weakly_fpi"], false);

  auto bad = run_cli("--input " + write_temp("np.txt", "p=4\nvars=x\n") + " --format text");
  EXPECT_EQ(bad.status, 1);

  auto cusp_path = write_temp("cusp.txt", "p=3\nvars=x,y\nideal=y^2 - x^3\n");
  EXPECT_EQ(run_cli("--input " + cusp_path).status, 1);
  auto cusp = run_cli("--input " + cusp_path + " --affine");
  EXPECT_EQ(cusp.status, 0);
  EXPECT_EQ(Json::parse(cusp.out)["f_pure"], false);

  EXPECT_EQ(run_cli("--input /nonexistent/ring.txt").status, 1);
}

TEST(Binary, Census) {
  auto c = run_cli("census --vars 3 --max-degree 2 --primes 2 --dimension 1 --threads 2");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("\"F_2[x,y,z]/(y*z, x*z, x*y)\",1,true,false,true,true,3,"), std::string::npos) << c.out;
}

TEST(Census, FlagshipRow) {
  CensusConfig c;
  c.nvars = 3;
  c.max_degree = 2;
  c.primes = {2};
  auto res = run_census(c);
  EXPECT_FALSE(res.partial);
  bool found = false;
  for (auto& r : res.rows)
    if (r.ring == "F_2[x,y,z]/(y*z, x*z, x*y)") {
      found = true;
      EXPECT_EQ(r.fpi, "true");
      EXPECT_EQ(r.gorenstein, "false");
      EXPECT_EQ(r.minimal_primes, "3");
    }
  EXPECT_TRUE(found);
}

TEST(Census, NodeRow) {
  CensusConfig c;
  c.nvars = 2;
  c.max_degree = 2;
  c.primes = {2, 3, 5};
  c.dimension = 1;
  auto res = run_census(c);
  std::size_t nodes = 0;
  for (auto& r : res.rows)
    if (r.ring.ends_with("/(x*y)")) {
      ++nodes;
      EXPECT_EQ(r.fpi, "true");
      EXPECT_EQ(r.gorenstein, "true");
      EXPECT_EQ(r.minimal_primes, "2");
    }
  EXPECT_EQ(nodes, 3u);
}

TEST(Census, EmptyFamilyIsHeaderOnly) {
  CensusConfig c;
  c.primes = {};
  EXPECT_EQ(census_csv(run_census(c)), "ring,dim,CM,Gorenstein,F-pure,FPI,#min-primes,note\n");
  c.family = Family::binomial_sample;
  c.primes = {3};
  c.samples = 0;
  EXPECT_EQ(census_csv(run_census(c)), "ring,dim,CM,Gorenstein,F-pure,FPI,#min-primes,note\n");
}

TEST(Census, OrderIndependentOfThreads) {
  CensusConfig c;
  c.family = Family::binomial_sample;
  c.nvars = 3;
  c.max_degree = 3;
  c.primes = {2, 3};
  c.samples = 8;
  c.seed = 11;
  c.threads = 1;
  auto one = census_csv(run_census(c));
  c.threads = 4;
  EXPECT_EQ(census_csv(run_census(c)), one);
}

TEST(Census, RowCapMarksPartialOutput) {
  CensusConfig c;
  c.nvars = 3;
  c.max_degree = 3;
  c.max_rows = 5;
  auto res = run_census(c);
  EXPECT_TRUE(res.partial);
  EXPECT_EQ(res.rows.size(), 5u);
  EXPECT_NE(census_csv(res).find("# partial"), std::string::npos);
}

TEST(Census, MonomialRowsWithFewPrimesHaveFpiEqualGorenstein) {
  CensusConfig c;
  c.nvars = 3;
  c.max_degree = 3;
  c.primes = {2, 3};
  c.dimension = 1;
  auto res = run_census(c);
  EXPECT_FALSE(res.partial);
  for (auto& r : res.rows) {
    ASSERT_NE(r.fpi, "error") << r.ring << ": " << r.note;
    if (std::stoul(r.minimal_primes) <= 2) {
      EXPECT_EQ(r.fpi, r.gorenstein) << r.ring;
    }
  }
}

TEST(Census, RowSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t i = 0; i < 64; ++i) seen.insert(row_seed(s, i));
  EXPECT_EQ(seen.size(), 256u);
}
