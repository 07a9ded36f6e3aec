#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/function_file.hpp"
#include "support/oracles.hpp"

using namespace drft;
using namespace drft::cli;

namespace {

const std::filesystem::path kFixtures{DRFT_FIXTURE_DIR};

std::string fixture(const char* name) { return (kFixtures / name).string(); }

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("drft_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST(FunctionFile, ParsesTextForms) {
  const auto even = parse_text("# comment\n\n4 even\n4 4\n1 1\n2 2\n");
  EXPECT_EQ(even.modulus, 4);
  EXPECT_EQ(even.representation, Representation::even);
  EXPECT_TRUE(even.is_exact());
  EXPECT_EQ(as_even<Rational>(even).at(4), Rational(4));

  const auto mixed = parse_text("3 periodic\n1/2\n0.25\n1 -2\n");
  EXPECT_FALSE(mixed.is_exact());
  const auto values = mixed.complex_values();
  EXPECT_EQ(values[0], Complex(0.5, 0.0));
  EXPECT_EQ(values[1], Complex(0.25, 0.0));
  EXPECT_EQ(values[2], Complex(1.0, -2.0));
}

TEST(FunctionFile, ErrorsNameTheLine) {
  auto message = [](const char* text) {
    try {
      parse_text(text);
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("4 periodic\n1\n2\nx\n4\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("4 sideways\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("4 even\n1 1\nzz 2\n").find("line 3: bad divisor"), std::string::npos);
  EXPECT_NE(message("4 periodic\n1/0\n1\n1\n1\n").find("line 2"), std::string::npos);
  EXPECT_THROW(parse_text(""), ParseError);
  EXPECT_THROW(parse_text("4 periodic\n1\n2\n"), DomainError);
  EXPECT_THROW(parse_text("4 even\n1 1\n2 2\n2 2\n4 4\n"), DomainError);
  EXPECT_THROW(parse_text("0 periodic\n"), ParseError);
}

TEST(FunctionFile, JsonMirror) {
  const auto from_json = parse_json(slurp(fixture("gcd4.even.json")));
  const auto from_text = parse_text(slurp(fixture("gcd4.even.txt")));
  EXPECT_EQ(as_even<Rational>(from_json), as_even<Rational>(from_text));
  EXPECT_THROW(parse_json("{\"modulus\": 4}"), ParseError);
  EXPECT_THROW(parse_json("not json"), ParseError);
  EXPECT_THROW(parse_json(R"({"modulus":2,"representation":"periodic","values":["1",true]})"),
               ParseError);
  const auto complex = parse_json(
      R"({"modulus":2,"representation":"periodic","values":[{"re":1.5,"im":-1},0.5]})");
  EXPECT_EQ(complex.complex_values()[0], Complex(1.5, -1.0));
}

TEST(FunctionFile, FormatClosure) {
  std::mt19937_64 rng(41);
  for (std::int64_t r = 1; r <= 60; ++r) {
    const auto even = make_file(drft::testing::random_even_rational(r, rng));
    const auto periodic = make_file(drft::testing::random_periodic_complex(r, rng));
    for (const auto* file : {&even, &periodic}) {
      const std::string text = format_text(*file, 1e-9);
      ASSERT_EQ(format_text(parse_text(text), 1e-9), text);
      const std::string json = format_json(*file, 1e-9);
      ASSERT_EQ(format_json(parse_json(json), 1e-9), json);
    }
  }
}

TEST(FunctionFile, FloatPrinting) {
  const FunctionFile file{3, Representation::periodic, {},
                          std::vector<Complex>{{1e-12, -1e-13}, {-0.0, 2.0}, {1.0 / 3.0, 0.0}}};
  EXPECT_EQ(format_text(file, 1e-9), "3 periodic\n0\n0 2\n0.333333333333\n");
}

TEST(CliCsum, Examples) {
  EXPECT_EQ(invoke({"csum", "2", "4"}).out, "-2\n");
  EXPECT_EQ(invoke({"csum", "1", "1"}).out, "1\n");
  EXPECT_EQ(invoke({"csum", "-1", "4"}).out, "0\n");
  EXPECT_EQ(invoke({"csum", "--table", "4"}).out, "e\\d 1 2 4\n1 1 1 2\n2 1 1 -2\n4 1 -1 0\n");
  EXPECT_EQ(invoke({"--format", "json", "csum", "2", "4"}).out, "{\"n\":2,\"r\":4,\"value\":-2}\n");
}

TEST(CliCsum, BadArguments) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"csum", "2"}, {"csum", "x", "4"}, {"csum", "1", "0"}, {"csum", "--table"}, {}, {"frobnicate"}}) {
    const auto outcome = invoke(args);
    EXPECT_EQ(outcome.status, kExitUsage);
    EXPECT_FALSE(outcome.err.empty());
    EXPECT_TRUE(outcome.out.empty());
  }
}

TEST(CliTransform, Examples) {
  EXPECT_EQ(invoke({"transform", fixture("gcd4.even.txt"), "--kind", "rft"}).out,
            "4 even\n1 8\n2 4\n4 2\n");
  EXPECT_EQ(invoke({"transform", fixture("gcd4.even.txt"), "--kind", "rft", "--path", "grouped"}).out,
            "4 even\n1 8\n2 4\n4 2\n");
  EXPECT_EQ(invoke({"transform", fixture("gcd4.even.json"), "--kind", "rft"}).out,
            "4 even\n1 8\n2 4\n4 2\n");
  EXPECT_EQ(invoke({"transform", fixture("ones4.txt"), "--kind", "dft"}).out,
            "4 periodic\n0\n0\n0\n4\n");
}

TEST(CliTransform, RationalRoundTripIsByteIdentical) {
  for (const char* name : {"gcd4.even.txt", "c2_mod4.even.txt", "other12.even.txt"}) {
    const auto forward = invoke({"transform", fixture(name), "--kind", "rft"});
    ASSERT_EQ(forward.status, kExitOk);
    const auto spectrum = temp_file(std::string("spec_") + name, forward.out);
    const auto back =
        invoke({"transform", spectrum.string(), "--kind", "rft", "--direction", "inverse"});
    EXPECT_EQ(back.out, slurp(fixture(name)));
  }
}

TEST(CliTransform, OutputIsAValidInput) {
  const auto spectrum = invoke({"transform", fixture("ramp6.txt"), "--kind", "dft"});
  const auto path = temp_file("ramp6_dft.txt", spectrum.out);
  const auto back = invoke({"transform", path.string(), "--kind", "dft", "--direction", "inverse"});
  ASSERT_EQ(back.status, kExitOk);
  const auto values = parse_text(back.out).complex_values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_NEAR(values[i].real(), static_cast<double>(i + 1), 1e-9);
  }
}

TEST(CliTransform, Errors) {
  const auto not_even = invoke({"transform", fixture("not_even3.txt"), "--kind", "rft"});
  EXPECT_EQ(not_even.status, kExitUsage);
  EXPECT_NE(not_even.err.find("witness n = 2"), std::string::npos);

  const auto bad = invoke({"transform", fixture("bad_value.txt"), "--kind", "dft"});
  EXPECT_EQ(bad.status, kExitUsage);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos);

  EXPECT_EQ(invoke({"transform", fixture("ones4.txt"), "--kind", "rft", "--direction", "inverse"}).status,
            kExitUsage);
  EXPECT_EQ(invoke({"transform", "/nonexistent/file.txt", "--kind", "dft"}).status, kExitUsage);
  EXPECT_EQ(invoke({"transform", fixture("ones4.txt")}).status, kExitUsage);
}

TEST(CliCauchy, Examples) {
  EXPECT_EQ(invoke({"cauchy", fixture("ind1_mod4.txt"), fixture("ind2_mod4.txt")}).out,
            "4 periodic\n0\n0\n1\n0\n");
  EXPECT_EQ(invoke({"cauchy", fixture("c2_mod4.txt"), fixture("c2_mod4.txt")}).out,
            "4 periodic\n-4\n4\n-4\n4\n");
  EXPECT_EQ(invoke({"cauchy", fixture("c2_mod4.txt"), fixture("c2_mod4.txt"), "--path", "spectral"}).out,
            "4 periodic\n-4\n4\n-4\n4\n");
  EXPECT_EQ(invoke({"cauchy", fixture("c2_mod4.even.txt"), fixture("c2_mod4.even.txt")}).out,
            "4 even\n1 -4\n2 4\n4 4\n");
}

TEST(CliCauchy, CheckReportsDiscrepancy) {
  const auto exact = invoke({"cauchy", fixture("mixed12.even.txt"), fixture("other12.even.txt"), "--check"});
  EXPECT_EQ(exact.status, kExitOk);
  EXPECT_EQ(exact.out, "max discrepancy: 0\n");

  std::mt19937_64 rng(42);
  for (std::int64_t r : {5, 12, 30}) {
    const auto f = temp_file("rand_f.txt", format_text(make_file(drft::testing::random_even_rational(r, rng)), 0));
    const auto g = temp_file("rand_g.txt", format_text(make_file(drft::testing::random_even_rational(r, rng)), 0));
    EXPECT_EQ(invoke({"cauchy", f.string(), g.string(), "--check"}).out, "max discrepancy: 0\n");
  }

  const auto floating = invoke({"cauchy", fixture("ramp6.txt"), fixture("ramp6.txt"), "--check"});
  EXPECT_EQ(floating.status, kExitOk);
  EXPECT_EQ(floating.out.rfind("max discrepancy: ", 0), 0u);

  const auto strict = invoke({"--tolerance", "1e-300", "cauchy", fixture("ramp6.txt"),
                              fixture("ramp6.txt"), "--check"});
  EXPECT_EQ(strict.status, kExitCheckFailed);
}

TEST(CliCauchy, ModulusMismatch) {
  const auto outcome = invoke({"cauchy", fixture("c2_mod4.txt"), fixture("ramp6.txt")});
  EXPECT_EQ(outcome.status, kExitUsage);
  EXPECT_NE(outcome.err.find("modulus mismatch"), std::string::npos);
}

TEST(CliVerify, Examples) {
  const auto ortho = invoke({"verify", "--suite", "orthogonality", "--rmax", "200"});
  EXPECT_EQ(ortho.status, kExitOk);
  EXPECT_NE(ortho.out.find("orthogonality r=200 pass"), std::string::npos);
  const auto sym = invoke({"verify", "--suite", "symmetry", "--rmax", "200"});
  EXPECT_EQ(sym.status, kExitOk);
  const auto all = invoke({"verify", "--suite", "all", "--rmax", "1"});
  EXPECT_EQ(all.status, kExitOk);
  EXPECT_EQ(all.out,
            "orthogonality r=1 pass checks=1\n"
            "symmetry r=1 pass checks=1\n"
            "bridge r=1 pass checks=3\n"
            "cauchy-kernel r=1 pass checks=1\n"
            "all 6 checks passed in 4 reports\n");
  EXPECT_EQ(invoke({"verify", "--suite", "cauchy-kernel", "--rmax", "60"}).status, kExitOk);
  EXPECT_EQ(invoke({"verify", "--suite", "bridge", "--rmax", "40"}).status, kExitOk);
}

TEST(CliVerify, FailuresPrintCounterexamples) {
  // a negative tolerance makes every bridge comparison fail
  const auto outcome = invoke({"--tolerance", "-1", "verify", "--suite", "bridge", "--rmax", "2"});
  EXPECT_EQ(outcome.status, kExitCheckFailed);
  EXPECT_NE(outcome.out.find("bridge r=1 FAIL"), std::string::npos);
  EXPECT_NE(outcome.out.find("counterexample: dft-kernel k=1"), std::string::npos);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus", "--rmax", "3"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "all"}).status, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--rmax", "0"}).status, kExitUsage);
  const auto capped = invoke({"verify", "--suite", "cauchy-kernel", "--rmax", "61"});
  EXPECT_EQ(capped.status, kExitUsage);
  EXPECT_NE(capped.err.find("capped"), std::string::npos);
}
