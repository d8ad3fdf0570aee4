// Copyright 2026 The agentic-typer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agentic_typer/suppression.h"

#include <gtest/gtest.h>

#include "agentic_typer/fingerprint.h"
#include "agentic_typer/text.h"
#include "js_gen.h"
#include "testing.h"

namespace agentic_typer {
namespace {

Suppression Make(SuppressionCategory c, std::string explanation) {
  Suppression s;
  s.category = c;
  s.explanation = std::move(explanation);
  return s;
}

TEST(DirectiveTest, RenderParseRoundTrip) {
  const std::string line = RenderDirective(SuppressionCategory::kBug,
                                           "TS2339: Property 'x'.", "  ");
  EXPECT_EQ(line,
            "  // @ts-expect-error -- [agentic-typer:bug] TS2339: Property 'x'.");
  const auto parsed = ParseDirective(line + "\r");
  ASSERT_TRUE(parsed);
  EXPECT_EQ(parsed->category, SuppressionCategory::kBug);
  EXPECT_EQ(parsed->explanation, "TS2339: Property 'x'.");
  EXPECT_EQ(ParseCategoryTag(CategoryTag(SuppressionCategory::kValidPattern)),
            SuppressionCategory::kValidPattern);
}

TEST(DirectiveTest, ForeignDirectives) {
  EXPECT_TRUE(IsForeignDirective("// @ts-ignore"));
  EXPECT_TRUE(IsForeignDirective("  // @ts-expect-error"));
  EXPECT_TRUE(IsForeignDirective("/* @ts-expect-error */"));
  EXPECT_TRUE(IsForeignDirective("// @ts-expect-error -- [agentic-typer:maybe] x"));
  EXPECT_FALSE(IsForeignDirective("// @ts-expect-error -- [agentic-typer:valid] x"));
  EXPECT_FALSE(IsForeignDirective("const s = '@ts-ignore';"));
  EXPECT_FALSE(ParseDirective("// @ts-expect-error -- [agentic-typer:bug] "));
}

TEST(SanitizeExplanationTest, CollapsesToOneLine) {
  EXPECT_EQ(SanitizeExplanation("  a\n\tb  c\x01"), "a b c");
  EXPECT_EQ(SanitizeExplanation("\n\t "), "type error");
  EXPECT_EQ(SanitizeExplanation("", "none"), "none");
}

TEST(InsertSuppressionTest, IndentsAndKeepsNewlineStyle) {
  const std::string crlf = "function f() {\r\n    g(1);\r\n}\r\n";
  const std::string out =
      InsertSuppression(crlf, 2, Make(SuppressionCategory::kValidPattern, "x"));
  EXPECT_EQ(out,
            "function f() {\r\n    // @ts-expect-error -- [agentic-typer:valid] "
            "x\r\n    g(1);\r\n}\r\n");
  const std::string last = InsertSuppression("a;\nb;", 2,
                                             Make(SuppressionCategory::kBug, "y"));
  EXPECT_EQ(last, "a;\n// @ts-expect-error -- [agentic-typer:bug] y\nb;");
}

TEST(InsertSuppressionTest, RefusesUnsafeLines) {
  const Suppression s = Make(SuppressionCategory::kBug, "x");
  const std::string src =
      "a;\n/* start\nmiddle */\nconst t = `x\ny`;\n// @ts-ignore\nz;\n";
  EXPECT_THROW(InsertSuppression(src, 0, s), SuppressionError);
  EXPECT_THROW(InsertSuppression(src, 99, s), SuppressionError);
  EXPECT_THROW(InsertSuppression(src, 3, s), SuppressionError);  // in comment
  EXPECT_THROW(InsertSuppression(src, 5, s), SuppressionError);  // in template
  EXPECT_THROW(InsertSuppression(src, 6, s), SuppressionError);  // directive
  EXPECT_THROW(InsertSuppression(src, 7, s), SuppressionError);  // governed
  EXPECT_THROW(InsertSuppression(src, 1, Make(SuppressionCategory::kBug, "a\nb")),
               SuppressionError);
  EXPECT_NO_THROW(InsertSuppression(src, 4, s));
}

TEST(InsertSuppressionTest, PropertyPreservesFingerprint) {
  int inserted = 0;
  for (uint32_t seed = 0; seed < 300; ++seed) {
    testing::JsGen gen(seed);
    const std::string src = gen.RenderWithComments(gen.Program(6));
    const Fingerprint before = ComputeFingerprint(src);
    const int lines = PhysicalLineCount(src);
    const int line = std::uniform_int_distribution<int>(1, lines)(gen.rng());
    std::string out;
    try {
      out = InsertSuppression(src, line, Make(SuppressionCategory::kBug, "TS1: m"));
    } catch (const SuppressionError&) {
      continue;
    }
    ++inserted;
    ASSERT_EQ(ComputeFingerprint(out), before) << "seed " << seed;
    const SuppressionScan scan = ScanContent("f.js", out);
    const auto it = std::find_if(
        scan.tagged.begin(), scan.tagged.end(),
        [&](const Suppression& s) { return s.anchor_line == line + 1; });
    ASSERT_NE(it, scan.tagged.end()) << "seed " << seed;
    EXPECT_EQ(it->suppressed_codes, std::vector<std::string>{"TS1"});
    EXPECT_EQ(it->anchor_content_hash, AnchorContentHash(SplitLines(src)[line - 1]));
  }
  EXPECT_GT(inserted, 100);
}

TEST(ScanContentTest, FindsTaggedAndForeign) {
  const std::string src =
      "// @ts-expect-error -- [agentic-typer:bug] TS2339, TS2551: x\n"
      "a.b;\n"
      "// @ts-ignore\n"
      "c;\n"
      "// @ts-expect-error -- [agentic-typer:valid] no codes here\n"
      "d;\n";
  const SuppressionScan scan = ScanContent("f.js", src);
  ASSERT_EQ(scan.tagged.size(), 2u);
  EXPECT_EQ(scan.tagged[0].anchor_line, 2);
  EXPECT_EQ(scan.tagged[0].suppressed_codes,
            (std::vector<std::string>{"TS2339", "TS2551"}));
  EXPECT_EQ(scan.tagged[0].anchor_content_hash, AnchorContentHash("a.b;"));
  EXPECT_TRUE(scan.tagged[1].suppressed_codes.empty());
  ASSERT_EQ(scan.foreign.size(), 1u);
  EXPECT_EQ(scan.foreign[0].line, 3);
}

TEST(CleanupUnusedTest, RemovesOnlyTaggedUnusedDirectives) {
  testing::TempDir dir;
  const std::string src =
      "// @ts-expect-error -- [agentic-typer:valid] TS1: x\n"
      "a;\n"
      "// @ts-expect-error\n"
      "b;\n"
      "// @ts-expect-error -- [agentic-typer:bug] TS2: y\n"
      "c;\n";
  testing::WriteFile(dir.path() / "f.js", src);
  auto unused = [](int line) {
    return Diagnostic{"f.js", line, 1, "TS2578", "Unused directive.",
                      Severity::kError};
  };
  const ErrorSnapshot snap = MakeSnapshot({unused(1), unused(3), unused(5)});
  const auto dry = CleanupUnused(dir.path(), snap, kUnusedDirectiveCode, true);
  EXPECT_EQ(dry.size(), 2u);
  EXPECT_EQ(testing::ReadFile(dir.path() / "f.js"), src);
  const auto removed = CleanupUnused(dir.path(), snap);
  ASSERT_EQ(removed.size(), 2u);
  EXPECT_EQ(removed[0].line, 1);
  EXPECT_EQ(removed[1].line, 5);
  EXPECT_EQ(removed[1].anchor_content_hash, AnchorContentHash("c;"));
  EXPECT_EQ(testing::ReadFile(dir.path() / "f.js"),
            "a;\n// @ts-expect-error\nb;\nc;\n");
}

}  // namespace
}  // namespace agentic_typer
