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

#ifndef AGENTIC_TYPER_FINGERPRINT_H_
#define AGENTIC_TYPER_FINGERPRINT_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agentic_typer {

enum class TokenKind : uint8_t {
  kIdentifier,
  kPunctuator,
  kNumericLiteral,
  kStringLiteral,
  kTemplateChunk,
  kRegexLiteral,
};

// Kind-tag byte used in the digest framing: one of "ipnstr".
char KindTag(TokenKind kind);
std::string_view KindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;  // exact source text, never empty
  int line = 0;        // 1-based start line; not part of token identity

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.lexeme == b.lexeme;
  }
};

class LexError : public std::runtime_error {
 public:
  LexError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ScanResult {
  std::vector<Token> tokens;
  // Indexed by line - 1. False when the line begins inside a block comment,
  // a string continuation or a template literal, i.e. where inserting a new
  // line would either change a token or not be seen as a line comment.
  std::vector<bool> line_starts_in_code;
};

// Tokenizes JavaScript source. Comments (including a leading hashbang) and
// whitespace are dropped; literals keep their exact spelling. Throws LexError
// on an unterminated string, template, regex or block comment.
//
// A '/' starts a regular expression at stream start, after any punctuator
// other than `)`, `]`, `++` and `--`, after a template chunk that opens a
// substitution, and after the keywords return typeof instanceof in of new
// delete void throw case do else yield (unless used as a property name).
// Everywhere else it is division. This misreads e.g. `if (x) /re/.test(y)`,
// but the same rule applies to both sides of a comparison.
ScanResult Scan(std::string_view source);

std::vector<Token> LexCanonical(std::string_view source);

class Fingerprint {
 public:
  using Digest = std::array<uint8_t, 32>;

  Fingerprint() : Fingerprint(std::vector<Token>{}) {}
  explicit Fingerprint(std::vector<Token> tokens);

  const std::vector<Token>& tokens() const { return tokens_; }
  const Digest& digest() const { return digest_; }
  // Lowercase hex, 64 characters.
  std::string hex() const;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.digest_ == b.digest_ && a.tokens_ == b.tokens_;
  }

 private:
  std::vector<Token> tokens_;
  Digest digest_{};
};

// SHA-256 over, for each token: kind tag, 0x1F, lexeme bytes, 0x1E.
Fingerprint::Digest DigestTokens(const std::vector<Token>& tokens);

Fingerprint ComputeFingerprint(std::string_view source);

enum class EditKind { kInsert, kDelete, kReplace };

struct TokenEdit {
  EditKind kind;
  size_t position;  // index into the before-stream where the edit applies
  std::vector<Token> removed;
  std::vector<Token> added;
  int line;  // nearest line of the before-source
};

struct TokenDiff {
  std::vector<TokenEdit> edits;
  bool empty() const { return edits.empty(); }
};

TokenDiff DiffTokens(const Fingerprint& before, const Fingerprint& after);

// Replays `diff` on `before`.
std::vector<Token> ApplyTokenDiff(const std::vector<Token>& before,
                                  const TokenDiff& diff);

// One line per edit, e.g. "line 12: replace `+` -> `-`".
std::string RenderEdit(const TokenEdit& edit);
std::string RenderTokenDiff(const TokenDiff& diff);

}  // namespace agentic_typer

#endif  // AGENTIC_TYPER_FINGERPRINT_H_
