#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cyclofix/cli.hpp"
#include "cyclofix/cosets.hpp"
#include "cyclofix/decimation.hpp"
#include "cyclofix/fixedpoints.hpp"
#include "cyclofix/serialize.hpp"

using namespace cyclofix;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, KnownValues) {
  const Result omega = run({"omega", "-s", "3", "-t", "1", "--max", "38"});
  EXPECT_EQ(omega.code, 0);
  EXPECT_EQ(omega.out, "1\n4\n5\n7\n10\n11\n13\n14\n17\n19\n20\n23\n25\n28\n29\n31\n34\n35\n37\n38\n");

  const Result check = run({"check", "-s", "2", "-t", "1", "1/(1-x)"});
  EXPECT_EQ(check.code, 0);
  EXPECT_EQ(check.out, "fixed: true\n");

  const Result dec = run({"decompose", "-s", "2", "-t", "1", "1/(1-2x)"});
  EXPECT_EQ(dec.code, 1);
  EXPECT_EQ(lines(dec.err).at(0), "NotAFixedPoint: non-cyclotomic pole");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"omega", "-s", "3", "--max", "5"}).code, 2);
  EXPECT_EQ(run({"coset", "-s", "2", "-r", "7", "-n", "1", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"psi", "-s", "1", "-t", "0", "-r", "1", "-n", "0"}).code, 2);
  EXPECT_EQ(run({"expand", "-N", "-1", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);

  const Result parse = run({"expand", "1 + * x"});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("ParseError"), std::string::npos);

  const Result bad_r = run({"psi", "-s", "2", "-t", "1", "-r", "2", "-n", "1"});
  EXPECT_EQ(bad_r.code, 1);
  EXPECT_EQ(bad_r.err.rfind("NotDistinguished: ", 0), 0u);

  const Result coprime = run({"coset", "-s", "2", "-r", "8", "-n", "1"});
  EXPECT_EQ(coprime.code, 1);
  EXPECT_EQ(coprime.err.rfind("NotCoprime: ", 0), 0u);
}

TEST(Cli, TextOutputs) {
  EXPECT_EQ(run({"coset", "-s", "2", "-r", "7", "-n", "3"}).out, "rep: 3\nord: 3\nmembers: 3 5 6\n");
  EXPECT_EQ(run({"reps", "-s", "2", "-r", "7"}).out, "1\n3\n");
  EXPECT_EQ(run({"apply", "-s", "2", "-t", "1", "1/(1-2x)"}).out, "2/(1 - 4*x)\n");
  EXPECT_EQ(run({"apply", "-s", "2", "-t", "1", "-k", "0", "1/(1-2x)"}).out, "1/(1 - 2*x)\n");
  EXPECT_EQ(run({"expand", "-N", "3", "1/(1-2x)"}).out, "0: 1\n1: 2\n2: 4\n3: 8\n");
  const Result dec = run({"decompose", "-s", "2", "-t", "1", "2/(1-x)"});
  EXPECT_EQ(dec.out, "1:0  2\nresidual_ok: true\n");
  const Result basis3 = run({"basis", "-s", "3", "-t", "4", "--max", "2"});
  EXPECT_EQ(lines(basis3.out).at(0), "transport: x^-2 times the elements below");
}

TEST(Cli, OmegaCsv) {
  const Result csv = run({"omega", "-s", "3", "-t", "1", "--max", "4", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, omega_csv(omega_enumerate(3, 1, 4)));
}

TEST(Cli, JsonRoundTrips) {
  {
    const OmegaTable t = run_json({"omega", "-s", "3", "-t", "1", "--max", "40"}).get<OmegaTable>();
    EXPECT_EQ(t.members, omega_enumerate(3, 1, 40).members);
    EXPECT_EQ(t.rows.size(), omega_enumerate(3, 1, 40).rows.size());
  }
  {
    const CosetRecord c = run_json({"coset", "-s", "2", "-r", "7", "-n", "5"}).get<CosetRecord>();
    EXPECT_EQ(c, coset(2, 7, 5));
  }
  {
    const Json j = run_json({"reps", "-s", "3", "-r", "13"});
    EXPECT_EQ(j.at("reps").get<std::vector<long>>(), coset_reps(3, 13));
  }
  {
    const PsiElement e = run_json({"psi", "-s", "3", "-t", "1", "-r", "5", "-n", "1"}).get<PsiElement>();
    const PsiElement direct = psi(3, 1, 5, 1);
    EXPECT_EQ(e.key(), direct.key());
    EXPECT_EQ(e.reduced, direct.reduced);
    ASSERT_EQ(e.terms.size(), direct.terms.size());
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
      EXPECT_EQ(e.terms[i].scale, direct.terms[i].scale);
      EXPECT_EQ(e.terms[i].pole, direct.terms[i].pole);
    }
  }
  {
    const FixedBasis b = run_json({"basis", "-s", "2", "-t", "1", "--max", "15"}).get<FixedBasis>();
    const FixedBasis direct = basis(2, 1, 15);
    ASSERT_EQ(b.elements.size(), direct.elements.size());
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      EXPECT_EQ(b.elements[i].key(), direct.elements[i].key());
      EXPECT_EQ(b.elements[i].reduced, direct.elements[i].reduced);
    }
  }
  {
    const std::string expr = "1/(1-x) + 3/(1-x^3)";
    const Json j = run_json({"check", "-s", "3", "-t", "0", expr});
    EXPECT_EQ(j.at("expr").get<RationalFunction>(), parse_expression(expr));
    EXPECT_EQ(j.at("fixed").get<bool>(), is_fixed(parse_expression(expr), 3, 0));
  }
  {
    const RationalFunction R = parse_expression("2/(1-x)") + psi(2, 1, 3, 1).reduced;
    const Decomposition d =
        run_json({"decompose", "-s", "2", "-t", "1", fraction_text(R)}).get<Decomposition>();
    EXPECT_EQ(d.combo, decompose(R, 2, 1).combo);
    EXPECT_EQ(recombine(d), R);
  }
  {
    const Json j = run_json({"apply", "-s", "2", "-t", "1", "-k", "2", "1/(1-3x)"});
    EXPECT_EQ(j.at("result").get<RationalFunction>(),
              phi_rational_iterate(parse_expression("1/(1-3x)"), 2, 1, 2));
    EXPECT_EQ(j.at("input").get<RationalFunction>(), parse_expression("1/(1-3x)"));
  }
  {
    const LaurentPrefix a = run_json({"expand", "-N", "6", "1/(x*(1-x))"}).get<LaurentPrefix>();
    EXPECT_EQ(a, expand_series(parse_expression("1/(x*(1-x))"), 6));
  }
}

TEST(Cli, TextAndJsonAgree) {
  {
    const Json j = run_json({"omega", "-s", "2", "-t", "1", "--max", "30"});
    std::vector<std::string> members;
    for (long r : j.at("members").get<std::vector<long>>()) members.push_back(std::to_string(r));
    EXPECT_EQ(lines(run({"omega", "-s", "2", "-t", "1", "--max", "30"}).out), members);
  }
  {
    const Json j = run_json({"basis", "-s", "3", "-t", "1", "--max", "20"});
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.at("elements").items()) {
      keys.push_back(key + "  " + value.at("text").get<std::string>());
    }
    EXPECT_EQ(lines(run({"basis", "-s", "3", "-t", "1", "--max", "20"}).out), keys);
  }
  {
    const std::string expr = "5 + 3/(1-x) + (2+x)/(1+x+x^2)";
    const Json j = run_json({"decompose", "-s", "2", "-t", "0", expr});
    std::vector<std::string> expected;
    for (const auto& [key, value] : j.at("combo").items()) {
      expected.push_back(key + "  " + coefficient_text(value.get<CycloNum>()));
    }
    expected.push_back("residual_ok: true");
    EXPECT_EQ(lines(run({"decompose", "-s", "2", "-t", "0", expr}).out), expected);
  }
  {
    const Json j = run_json({"apply", "-s", "3", "-t", "2", "1/(1-2x)"});
    EXPECT_EQ(run({"apply", "-s", "3", "-t", "2", "1/(1-2x)"}).out, j.at("text").get<std::string>() + "\n");
  }
  {
    const Json j = run_json({"check", "-s", "2", "-t", "1", "1/(1-x^2)"});
    EXPECT_FALSE(j.at("fixed").get<bool>());
    EXPECT_EQ(run({"check", "-s", "2", "-t", "1", "1/(1-x^2)"}).out, "fixed: false\n");
  }
}

TEST(Cli, ConductorLimitFromEnvironment) {
  ::setenv("CYCLOFIX_MAX_CONDUCTOR", "10", 1);
  const Result capped = run({"psi", "-s", "2", "-t", "1", "-r", "11", "-n", "1"});
  EXPECT_EQ(capped.code, 1);
  EXPECT_EQ(capped.err.rfind("ConductorLimit: ", 0), 0u);
  ::setenv("CYCLOFIX_MAX_CONDUCTOR", "ten", 1);
  EXPECT_EQ(run({"reps", "-s", "2", "-r", "7"}).code, 2);
  ::unsetenv("CYCLOFIX_MAX_CONDUCTOR");
  EXPECT_EQ(run({"psi", "-s", "2", "-t", "1", "-r", "11", "-n", "1"}).code, 0);
}
