#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "kummer_app/document.hpp"

using namespace kummer;
using namespace kummer::app;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(KUMMER_CY_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string example(const std::string& name) { return std::string(KUMMER_EXAMPLES_DIR) + "/" + name; }

std::vector<std::string> violations_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, const std::string& what) {
  for (const auto& s : v) {
    if (s.find(what) != std::string::npos) return true;
  }
  return false;
}

std::set<std::string> catalog_data(const std::string& jsonl) {
  std::set<std::string> out;
  std::istringstream in(jsonl);
  std::string line;
  while (std::getline(in, line)) {
    auto a = line.find("\"data\":\"");
    if (a == std::string::npos) continue;
    a += 8;
    out.insert(line.substr(a, line.find('"', a) - a));
  }
  return out;
}

}  // namespace

TEST(Document, BranchData) {
  auto d = parse_document(R"j({"branch_data": {"n": 5, "x": [5], "y": [1, 4], "z": [1,1,1,1,1], "r": 1}})j");
  ASSERT_TRUE(d.branch_data);
  EXPECT_FALSE(d.tuple);
  EXPECT_EQ(d.branch_data->y, (std::vector<int>{1, 4}));
  EXPECT_EQ(d.branch_data->r, 1);
}

TEST(Document, TupleAndOptions) {
  auto d = parse_document(R"j({"tuple": {"degree": 2, "marks": ["inf", "0"], "permutations": ["(1 2)", "(12)"]},
                              "options": {"precision_bits": 96, "step_scale": 0.5, "output_format": "jsonl"}})j");
  ASSERT_TRUE(d.tuple);
  EXPECT_EQ(d.tuple->degree, 2u);
  EXPECT_EQ(d.tuple->marks[0].kind, hurwitz::MarkKind::infinity);
  EXPECT_EQ(*d.options.precision_bits, 96);
  EXPECT_DOUBLE_EQ(*d.options.step_scale, 0.5);
  EXPECT_EQ(*d.options.output_format, OutputFormat::jsonl);
}

TEST(Document, ExtrasNumbered) {
  auto d = parse_document(R"j({"tuple": {"degree": 2, "marks": ["extra", "extra"], "permutations": ["(12)", "(12)"]}})j");
  EXPECT_EQ(d.tuple->marks[0].index, 1);
  EXPECT_EQ(d.tuple->marks[1].index, 2);
}

TEST(Document, SyntaxErrorHasLine) {
  auto v = violations_of("{\n  \"branch_data\": {\n    \"n\": 5,,\n  }\n}");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("line 3"), std::string::npos) << v[0];
}

TEST(Document, SchemaViolations) {
  EXPECT_TRUE(mentions(violations_of("[]"), "expected an object"));
  EXPECT_TRUE(mentions(violations_of("{}"), "exactly one"));
  EXPECT_TRUE(mentions(violations_of(R"j({"branch_data": {"n": 1, "x": [1], "y": [1], "z": [1], "r": 0},
                                         "tuple": {"degree": 1, "marks": [], "permutations": []}})j"),
                       "exactly one"));
  auto v = violations_of(R"j({"branch_data": {"n": 2, "x": [2], "y": [1, 1], "z": [2], "r": -1, "w": 0}})j");
  EXPECT_TRUE(mentions(v, "/branch_data/w: unknown field"));
  EXPECT_TRUE(mentions(v, "/branch_data/r: value -1"));
  EXPECT_TRUE(mentions(violations_of(R"j({"branch_data": {"n": 3, "x": [2], "y": [3], "z": [3], "r": 0}})j"),
                       "/branch_data"));
  EXPECT_TRUE(mentions(violations_of(R"j({"branch_data": {"n": 3, "x": [2, "1"], "y": [3], "z": [3], "r": 0}})j"),
                       "/branch_data/x/1"));
}

TEST(Document, TupleViolations) {
  EXPECT_TRUE(mentions(
      violations_of(R"j({"tuple": {"degree": 3, "marks": ["inf", "0"], "permutations": ["(1 2 2)", "(12)"]}})j"),
      "/tuple/permutations/0"));
  EXPECT_TRUE(mentions(
      violations_of(R"j({"tuple": {"degree": 2, "marks": ["somewhere", "0"], "permutations": ["(12)", "(12)"]}})j"),
      "/tuple/marks/0"));
  EXPECT_TRUE(mentions(
      violations_of(R"j({"tuple": {"degree": 3, "marks": ["inf", "0"], "permutations": ["(12)", "(13)"]}})j"),
      "not the identity"));
  EXPECT_TRUE(mentions(
      violations_of(R"j({"tuple": {"degree": 3, "marks": ["inf", "0"], "permutations": ["(12)", "(12)"]}})j"),
      "not transitive"));
}

TEST(Document, OptionViolations) {
  const std::string head = R"j({"branch_data": {"n": 1, "x": [1], "y": [1], "z": [1], "r": 0}, "options": )j";
  EXPECT_TRUE(mentions(violations_of(head + R"j({"precision_bits": 12}})j"), "/options/precision_bits"));
  EXPECT_TRUE(mentions(violations_of(head + R"j({"step_scale": 0}})j"), "/options/step_scale"));
  EXPECT_TRUE(mentions(violations_of(head + R"j({"output_format": "xml"}})j"), "/options/output_format"));
}

TEST(Cli, ReportQuintic) {
  auto r = run("--format jsonl report " + example("quintic.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"cy\":true"), std::string::npos);
  EXPECT_NE(r.out.find("\"s\":3,\"p_g\":2,\"genera\":[0,0,2]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"h11\":59,\"h21\":3,\"euler\":112"), std::string::npos) << r.out;
}

TEST(Cli, ReportTextDefault) {
  auto r = run("report " + example("quintic.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h11=59 h21=3 e=112"), std::string::npos) << r.out;
}

TEST(Cli, ReportY2Prime) {
  auto r = run("--format jsonl report " + example("y2prime.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"s\":8,\"p_g\":0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"h11\":40,\"h21\":0,\"euler\":80"), std::string::npos) << r.out;
}

TEST(Cli, BadProductIsInvalid) {
  auto r = run("report " + example("bad_product.json") + " 2>&1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("not the identity"), std::string::npos) << r.out;
}

TEST(Cli, MissingFileIsInvalid) { EXPECT_EQ(run("report /nonexistent.json 2>/dev/null").code, 2); }

TEST(Cli, UnsupportedHodge) {
  auto r = run("report " + example("l1_unsupported.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("unsupported"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string args : {"--format jsonl report " + example("quintic.json"),
                                 "--format jsonl report " + example("y2prime.json"),
                                 std::string("--format jsonl enumerate --max-degree 6")}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, EnumerateCatalog) {
  EXPECT_NE(run("enumerate --max-degree 1").out.find("0 rows"), std::string::npos);
  auto one = catalog_data(run("--format jsonl enumerate --max-degree 1").out);
  EXPECT_TRUE(one.empty());
  auto five = catalog_data(run("--format jsonl enumerate --max-degree 5").out);
  EXPECT_TRUE(five.count("(1,2,5,5,1) x=[5] y=[4,1] z=[1,1,1,1,1]"));
  auto eight = catalog_data(run("--format jsonl enumerate --max-degree 8").out);
  EXPECT_TRUE(eight.count("(4,2,4,8,0) x=[2,2,2,2] y=[4,4] z=[2,2,2,2]"));
  for (const auto& d : five) EXPECT_TRUE(eight.count(d)) << d;
  EXPECT_EQ(run("enumerate --max-degree 13 2>/dev/null").code, 2);
}

TEST(Cli, Monodromy) {
  auto r = run("--format jsonl monodromy --steps 128");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"reference_labels\":\"(14)(25)(36)\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"reference_labels\":\"(12)\""), std::string::npos);
  EXPECT_NE(r.out.find("\"reference_labels\":\"(1524)(36)\""), std::string::npos);
  EXPECT_NE(r.out.find("\"product_is_identity\":true"), std::string::npos);
  EXPECT_EQ(run("monodromy --precision 20 2>/dev/null").code, 2);
}

TEST(Cli, Fibers) {
  auto r = run("--format jsonl fibers");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"model\":\"E1\",\"place\":\"v\",\"degree\":1,\"type\":\"I4\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"model\":\"E1\",\"place\":\"inf\",\"degree\":1,\"type\":\"I4\""), std::string::npos);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run("frobnicate 2>/dev/null").code, 2);
  EXPECT_EQ(run("2>/dev/null").code, 2);
  EXPECT_EQ(run("--format xml fibers 2>/dev/null").code, 2);
  EXPECT_EQ(run("--help > /dev/null").code, 0);
}

TEST(Cli, VerifyExitMatchesLines) {
  auto r = run("verify-paper");
  std::istringstream in(r.out);
  std::string line;
  int pass = 0, fail = 0;
  while (std::getline(in, line)) {
    if (line.rfind("[PASS]", 0) == 0) ++pass;
    if (line.rfind("[FAIL]", 0) == 0) ++fail;
  }
  EXPECT_EQ(pass + fail, 13);
  EXPECT_EQ(r.code, fail == 0 ? 0 : 1);
}
