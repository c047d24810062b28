#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "adet/cli.hpp"

using namespace adet;

namespace {

json run_json(const std::vector<std::string>& args, int expected_exit = 0) {
  const CliOutcome res = run(args);
  EXPECT_EQ(res.exit_code, expected_exit) << res.out;
  return json::parse(res.out);
}

}  // namespace

TEST(Parse, TextForms) {
  EXPECT_EQ(parse_ideal("x1^3, x1^2*x2").generators(),
            (std::vector<Multidegree>{Multidegree{2, 1}, Multidegree{3, 0}}));
  EXPECT_EQ(parse_ideal("x1*x2, x2*x3^2").generators(),
            (std::vector<Multidegree>{Multidegree{0, 1, 2}, Multidegree{1, 1, 0}}));
  EXPECT_EQ(parse_ideal("x1, x1^2").generators(), (std::vector<Multidegree>{Multidegree{1}}));
  EXPECT_EQ(parse_ideal("x2", 4).n(), 4u);
  EXPECT_TRUE(parse_ideal("0", 2).is_zero());
  EXPECT_TRUE(parse_ideal("1", 3).is_unit());
  EXPECT_EQ(parse_ideal(" x1 * x1 ").generators(), (std::vector<Multidegree>{Multidegree{2}}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_ideal(""), SyntaxError);
  EXPECT_THROW(parse_ideal("x1^"), SyntaxError);
  EXPECT_THROW(parse_ideal("y1"), SyntaxError);
  EXPECT_THROW(parse_ideal("x0"), SyntaxError);
  EXPECT_THROW(parse_ideal("x1^99999999999"), SyntaxError);
  EXPECT_THROW(parse_ideal("x3", 2), DimensionError);
  try {
    parse_ideal("x1, x2 ^ 2 +");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 11u);
  }
}

TEST(Parse, RoundTrip) {
  for (const char* text : {"x1^3, x1^2*x2", "x1*x2^4*x3, x3^2", "x2", "1", "0"}) {
    const auto I = parse_ideal(text, 3);
    EXPECT_EQ(parse_ideal(print_ideal(I), 3), I) << text;
  }
  EXPECT_EQ(print_ideal(parse_ideal("x1^2*x2, x1^3")), "x1^2*x2, x1^3");
}

TEST(Run, SdepthWithWitness) {
  const json j = run_json({"sdepth", "--module", "quotient", "--ideal", "x1^3, x1^2*x2",
                           "--no-timing"});
  EXPECT_EQ(j["result"]["value"], 0);
  EXPECT_TRUE(j["result"]["witness_valid"].get<bool>());
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_FALSE(j.contains("timing_ms"));
}

TEST(Run, ShregOnBox) {
  const json j = run_json({"shreg", "--ideal", "x1, x2^2", "--box", "1,2", "--module",
                           "quotient"});
  EXPECT_EQ(j["result"]["value"], 0);
  const json k = run_json({"shreg", "--ideal", "x1, x2^2", "--box", "1,2", "--kind", "stanley"});
  EXPECT_EQ(k["result"]["value"], 1);
  const auto bad = adet::run({"shreg", "--ideal", "x1, x2^2", "--box", "1,2", "--kind",
                              "stanley", "--mode", "dual"});
  EXPECT_EQ(bad.exit_code, adet::exit_code::domain);
}

TEST(Run, OtherCommands) {
  const json info = run_json({"info", "--ideal", "x1*x2"});
  EXPECT_EQ(info["result"]["quotient"]["depth"], 1);
  EXPECT_EQ(info["result"]["ideal"]["depth"], 2);
  const json dual = run_json({"dual", "--ideal", "x1^3, x1^2*x2", "--box", "3,1"});
  EXPECT_EQ(dual["result"]["dual"]["text"], "x1*x2, x1^2");
  const json slide = run_json({"slide", "--ideal", "x1*x2^2, x2*x3^2", "--by", "2,2,2"});
  EXPECT_EQ(slide["result"]["slid"]["text"], "x2^3*x3^4, x1^3*x2^4");
  const json irr = run_json({"irr-decomp", "--ideal", "x1^3, x1^2*x2"});
  EXPECT_EQ(irr["result"]["components"].size(), 2u);
  const json sk = run_json({"skeleton", "--ideal", "x1*x2", "--level", "0"});
  EXPECT_EQ(sk["result"]["dim"], 0);
  const json betti = run_json({"betti", "--ideal", "x1^2, x2^3", "--char", "3"});
  EXPECT_EQ(betti["result"]["entries"].size(), 4u);
  const json dec = run_json({"decomp", "--ideal", "x1^3, x1^2*x2"});
  EXPECT_EQ(dec["result"]["stanley_spaces"].size(), 3u);
  const json pair = run_json({"sdepth", "--module", "pair", "--top", "x1", "--bottom",
                              "x1^2, x1*x2"});
  EXPECT_EQ(pair["result"]["value"], 0);
}

TEST(Run, CheckSuite) {
  const json j = run_json({"check", "--suite", "duality", "--n", "2", "--max-exp", "2"});
  EXPECT_EQ(j["result"]["failed"], 0);
  EXPECT_GT(j["result"]["passed"].get<int>(), 0);
  const CliOutcome lines = run({"--jsonl", "check", "--suite", "slide", "--n", "2",
                                "--max-exp", "1", "--no-timing"});
  EXPECT_EQ(lines.exit_code, 0);
  std::size_t count = 0;
  for (char c : lines.out) count += c == '\n';
  EXPECT_GT(count, 2u);
}

TEST(Run, SurveyFromFile) {
  const std::string path = testing::TempDir() + "adet_survey_input.txt";
  {
    std::ofstream out(path);
    out << "# two ideals\n"
        << "x1^2, x2^2\n"
        << "{\"n\": 3, \"gens\": [[1,1,0],[1,0,1]]}\n";
  }
  const json j = run_json({"survey", "--input", path, "--n", "3"});
  EXPECT_EQ(j["result"]["rows"].size(), 4u);
  EXPECT_TRUE(j["result"]["notable"].empty());
  std::remove(path.c_str());
  const json fam = run_json({"survey", "--family", "n=2,max-exp=1"});
  EXPECT_EQ(fam["result"]["rows"].size(), 8u);
}

TEST(Run, ErrorCodes) {
  EXPECT_EQ(run({"sdepth", "--ideal", "x1^"}).exit_code, 2);
  EXPECT_EQ(json::parse(run({"sdepth", "--ideal", "x1^"}).out)["error"]["code"], "syntax_error");
  EXPECT_EQ(run({"dual", "--ideal", "x1^3", "--box", "1"}).exit_code, 3);
  EXPECT_EQ(run({"sdepth", "--ideal", "1"}).exit_code, 3);
  EXPECT_EQ(run({"bogus"}).exit_code, 2);
  EXPECT_EQ(run({"skeleton", "--ideal", "x1", "--level", "5"}).exit_code, 2);
  const CliOutcome res = run({"sdepth", "--module", "ideal", "--ideal",
                              "x1^2, x2^2, x3^2, x4^2", "--node-limit", "1"});
  EXPECT_EQ(res.exit_code, 4);
  const json err = json::parse(res.out)["error"];
  EXPECT_EQ(err["code"], "resource_error");
  EXPECT_TRUE(err.contains("lower"));
  EXPECT_TRUE(err.contains("upper"));
}

TEST(Run, Deterministic) {
  const std::vector<std::string> args = {"decomp", "--ideal", "x1^2*x2, x2^2*x3, x3*x1",
                                         "--no-timing"};
  EXPECT_EQ(run(args).out, run(args).out);
}
