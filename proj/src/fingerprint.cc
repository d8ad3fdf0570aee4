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

#include "agentic_typer/fingerprint.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <span>
#include <sstream>

#include "agentic_typer/sequence_diff.h"

namespace agentic_typer {

char KindTag(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier:
      return 'i';
    case TokenKind::kPunctuator:
      return 'p';
    case TokenKind::kNumericLiteral:
      return 'n';
    case TokenKind::kStringLiteral:
      return 's';
    case TokenKind::kTemplateChunk:
      return 't';
    case TokenKind::kRegexLiteral:
      return 'r';
  }
  return '?';
}

std::string_view KindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kPunctuator:
      return "punctuator";
    case TokenKind::kNumericLiteral:
      return "numeric_literal";
    case TokenKind::kStringLiteral:
      return "string_literal";
    case TokenKind::kTemplateChunk:
      return "template_chunk";
    case TokenKind::kRegexLiteral:
      return "regex_literal";
  }
  return "unknown";
}

namespace {

// Matching tries every entry and keeps the longest.
constexpr std::array<std::string_view, 58> kPunctuators = {
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=",
    "\?\?=", "=>",  "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",
    "++",   "--",  "+=",  "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",
    "<<",   ">>",  "**",  "{",   "}",   "(",   ")",   "[",   "]",   ";",
    ",",    "<",   ">",   "+",   "-",   "*",   "/",   "%",   "&",   "|",
    "^",    "!",   "~",   "?",   ":",   "=",   ".",   "@"};

constexpr std::array<std::string_view, 13> kRegexKeywords = {
    "return", "typeof", "instanceof", "in",   "of",   "new",  "delete",
    "void",   "throw",  "case",       "do",   "else", "yield"};

bool IsAsciiIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '$' ||
         c == '_';
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {
    result_.line_starts_in_code.assign(PhysicalLines(), true);
  }

  ScanResult Run() {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    if (src_.substr(pos_, 2) == "#!") SkipLineComment();
    while (pos_ < src_.size()) {
      if (SkipWhitespace()) continue;
      const unsigned char c = Peek();
      if (c == '/' && Peek(1) == '/') {
        SkipLineComment();
      } else if (c == '/' && Peek(1) == '*') {
        SkipBlockComment();
      } else if (c == '<' && src_.substr(pos_, 4) == "<!--") {
        SkipLineComment();
      } else if (c == '\'' || c == '"') {
        LexString(c);
      } else if (c == '`') {
        LexTemplateChunk();
      } else if (c == '}' && !template_depths_.empty() &&
                 brace_depth_ == template_depths_.back()) {
        template_depths_.pop_back();
        LexTemplateChunk();
      } else if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
        LexNumber();
      } else if (c == '/' && RegexAllowed()) {
        LexRegex();
      } else if (IsAsciiIdentStart(c) || c == '\\' || c >= 0x80) {
        LexIdentifier(pos_);
      } else if (c == '#' && pos_ + 1 < src_.size() &&
                 (IsAsciiIdentStart(Peek(1)) || Peek(1) >= 0x80)) {
        LexIdentifier(pos_++);
      } else {
        LexPunctuator();
      }
    }
    if (!template_depths_.empty()) {
      throw LexError(line_, "unterminated template literal");
    }
    return std::move(result_);
  }

 private:
  unsigned char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size()
               ? static_cast<unsigned char>(src_[pos_ + ahead])
               : 0;
  }

  int PhysicalLines() const {
    return static_cast<int>(std::count(src_.begin(), src_.end(), '\n')) + 1;
  }

  // Marks lines (first_line, line_] as starting inside an opaque construct.
  void MarkOpaque(int first_line) {
    for (int l = first_line + 1; l <= line_; ++l) {
      result_.line_starts_in_code[l - 1] = false;
    }
  }

  void Advance() {
    if (src_[pos_] == '\n') ++line_;
    ++pos_;
  }

  // Length of a multi-byte whitespace or line terminator at pos_, or 0.
  size_t UnicodeSpaceLength() const {
    const unsigned char c = Peek();
    if (c == 0xC2 && Peek(1) == 0xA0) return 2;  // NBSP
    if (c == 0xEF && Peek(1) == 0xBB && Peek(2) == 0xBF) return 3;  // BOM
    if (c == 0xE1 && Peek(1) == 0x9A && Peek(2) == 0x80) return 3;
    if (c == 0xE2 && Peek(1) == 0x80 &&
        ((Peek(2) >= 0x80 && Peek(2) <= 0x8A) || Peek(2) == 0xA8 ||
         Peek(2) == 0xA9 || Peek(2) == 0xAF)) {
      return 3;
    }
    if (c == 0xE2 && Peek(1) == 0x81 && Peek(2) == 0x9F) return 3;
    if (c == 0xE3 && Peek(1) == 0x80 && Peek(2) == 0x80) return 3;
    return 0;
  }

  bool IsLineTerminatorAt() const {
    const unsigned char c = Peek();
    return c == '\n' || c == '\r' ||
           (c == 0xE2 && Peek(1) == 0x80 && (Peek(2) == 0xA8 || Peek(2) == 0xA9));
  }

  bool SkipWhitespace() {
    const unsigned char c = Peek();
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f') {
      Advance();
      return true;
    }
    if (const size_t n = UnicodeSpaceLength()) {
      pos_ += n;
      return true;
    }
    return false;
  }

  void SkipLineComment() {
    while (pos_ < src_.size() && !IsLineTerminatorAt()) ++pos_;
  }

  void SkipBlockComment() {
    const int start_line = line_;
    pos_ += 2;
    while (true) {
      if (pos_ >= src_.size()) {
        throw LexError(start_line, "unterminated block comment");
      }
      if (Peek() == '*' && Peek(1) == '/') {
        pos_ += 2;
        break;
      }
      Advance();
    }
    MarkOpaque(start_line);
  }

  void Emit(TokenKind kind, size_t start, int line) {
    result_.tokens.push_back(
        {kind, std::string(src_.substr(start, pos_ - start)), line});
  }

  void LexString(unsigned char quote) {
    const size_t start = pos_;
    const int start_line = line_;
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || Peek() == '\n' || Peek() == '\r') {
        throw LexError(start_line, "unterminated string literal");
      }
      const unsigned char c = Peek();
      if (c == '\\') {
        ++pos_;
        if (pos_ >= src_.size()) {
          throw LexError(start_line, "unterminated string literal");
        }
        if (Peek() == '\r' && Peek(1) == '\n') ++pos_;
        Advance();
        continue;
      }
      ++pos_;
      if (c == quote) break;
    }
    MarkOpaque(start_line);
    Emit(TokenKind::kStringLiteral, start, start_line);
  }

  // Starts at '`' or at the '}' closing a substitution; ends after '`' or
  // after "${".
  void LexTemplateChunk() {
    const size_t start = pos_;
    const int start_line = line_;
    ++pos_;
    while (true) {
      if (pos_ >= src_.size()) {
        throw LexError(start_line, "unterminated template literal");
      }
      const unsigned char c = Peek();
      if (c == '\\') {
        ++pos_;
        if (pos_ < src_.size()) Advance();
        continue;
      }
      if (c == '`') {
        ++pos_;
        break;
      }
      if (c == '$' && Peek(1) == '{') {
        pos_ += 2;
        template_depths_.push_back(brace_depth_);
        break;
      }
      Advance();
    }
    MarkOpaque(start_line);
    Emit(TokenKind::kTemplateChunk, start, start_line);
  }

  void LexNumber() {
    const size_t start = pos_;
    auto consume = [&](auto pred) {
      while (pos_ < src_.size() && (pred(Peek()) || Peek() == '_')) ++pos_;
    };
    const unsigned char next = Peek(1);
    if (Peek() == '0' && (next == 'x' || next == 'X' || next == 'o' ||
                          next == 'O' || next == 'b' || next == 'B')) {
      pos_ += 2;
      consume([](unsigned char c) { return std::isxdigit(c) != 0; });
    } else {
      consume(IsDigit);
      if (Peek() == '.') {
        ++pos_;
        consume(IsDigit);
      }
      if ((Peek() == 'e' || Peek() == 'E') &&
          (IsDigit(Peek(1)) ||
           ((Peek(1) == '+' || Peek(1) == '-') && IsDigit(Peek(2))))) {
        pos_ += 2;
        consume(IsDigit);
      }
    }
    if (Peek() == 'n') ++pos_;
    Emit(TokenKind::kNumericLiteral, start, line_);
  }

  void LexRegex() {
    const size_t start = pos_;
    const int start_line = line_;
    ++pos_;
    bool in_class = false;
    while (true) {
      if (pos_ >= src_.size() || IsLineTerminatorAt()) {
        throw LexError(start_line, "unterminated regular expression");
      }
      const unsigned char c = Peek();
      if (c == '\\') {
        ++pos_;
        if (pos_ >= src_.size() || IsLineTerminatorAt()) {
          throw LexError(start_line, "unterminated regular expression");
        }
        ++pos_;
        continue;
      }
      ++pos_;
      if (c == '[') {
        in_class = true;
      } else if (c == ']') {
        in_class = false;
      } else if (c == '/' && !in_class) {
        break;
      }
    }
    while (pos_ < src_.size() && (IsAsciiIdentStart(Peek()) || IsDigit(Peek())))
      ++pos_;
    Emit(TokenKind::kRegexLiteral, start, start_line);
  }

  void LexIdentifier(size_t start) {
    while (pos_ < src_.size()) {
      const unsigned char c = Peek();
      if (IsAsciiIdentStart(c) || IsDigit(c)) {
        ++pos_;
      } else if (c == '\\') {
        pos_ += 2;  // \uXXXX or \u{...}; the rest is ordinary ident chars
        if (pos_ <= src_.size() && src_[pos_ - 1] == 'u' && Peek() == '{') {
          while (pos_ < src_.size() && Peek() != '}') ++pos_;
          if (pos_ < src_.size()) ++pos_;
        }
      } else if (c >= 0x80 && UnicodeSpaceLength() == 0) {
        ++pos_;
      } else {
        break;
      }
    }
    pos_ = std::min(pos_, src_.size());
    Emit(TokenKind::kIdentifier, start, line_);
  }

  void LexPunctuator() {
    const size_t start = pos_;
    size_t best = 0;
    for (std::string_view p : kPunctuators) {
      if (p.size() > best && src_.substr(pos_, p.size()) == p) best = p.size();
    }
    if (best == 2 && src_.substr(pos_, 2) == "?." && IsDigit(Peek(2))) {
      best = 1;  // `a ?.5 : b` is a conditional
    }
    if (best == 0) {
      throw LexError(line_, "unexpected character");
    }
    pos_ += best;
    const std::string_view lexeme = src_.substr(start, best);
    if (lexeme == "{") {
      ++brace_depth_;
    } else if (lexeme == "}") {
      brace_depth_ = std::max(0, brace_depth_ - 1);
    }
    Emit(TokenKind::kPunctuator, start, line_);
  }

  bool RegexAllowed() const {
    const auto& toks = result_.tokens;
    if (toks.empty()) return true;
    const Token& prev = toks.back();
    switch (prev.kind) {
      case TokenKind::kPunctuator:
        return prev.lexeme != ")" && prev.lexeme != "]" &&
               prev.lexeme != "++" && prev.lexeme != "--";
      case TokenKind::kTemplateChunk:
        return prev.lexeme.ends_with("${");
      case TokenKind::kIdentifier: {
        if (std::find(kRegexKeywords.begin(), kRegexKeywords.end(),
                      prev.lexeme) == kRegexKeywords.end()) {
          return false;
        }
        if (toks.size() >= 2) {
          const Token& before = toks[toks.size() - 2];
          if (before.kind == TokenKind::kPunctuator &&
              (before.lexeme == "." || before.lexeme == "?.")) {
            return false;
          }
        }
        return true;
      }
      default:
        return false;
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int brace_depth_ = 0;
  std::vector<int> template_depths_;
  ScanResult result_;
};

}  // namespace

ScanResult Scan(std::string_view source) { return Lexer(source).Run(); }

std::vector<Token> LexCanonical(std::string_view source) {
  return Scan(source).tokens;
}

Fingerprint::Digest DigestTokens(const std::vector<Token>& tokens) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("SHA-256 init failed");
  }
  for (const Token& t : tokens) {
    const char head[2] = {KindTag(t.kind), '\x1F'};
    const char tail = '\x1E';
    EVP_DigestUpdate(ctx, head, 2);
    EVP_DigestUpdate(ctx, t.lexeme.data(), t.lexeme.size());
    EVP_DigestUpdate(ctx, &tail, 1);
  }
  Fingerprint::Digest digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest.data(), &len);
  EVP_MD_CTX_free(ctx);
  return digest;
}

Fingerprint::Fingerprint(std::vector<Token> tokens)
    : tokens_(std::move(tokens)), digest_(DigestTokens(tokens_)) {}

std::string Fingerprint::hex() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (uint8_t b : digest_) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xf]);
  }
  return out;
}

Fingerprint ComputeFingerprint(std::string_view source) {
  return Fingerprint(LexCanonical(source));
}

TokenDiff DiffTokens(const Fingerprint& before, const Fingerprint& after) {
  TokenDiff diff;
  if (before == after) return diff;
  const auto& a = before.tokens();
  const auto& b = after.tokens();
  const std::vector<DiffOp> ops =
      SequenceDiff<Token>(std::span<const Token>(a), std::span<const Token>(b));

  auto line_near = [&](size_t pos) {
    if (pos < a.size()) return a[pos].line;
    if (!a.empty()) return a.back().line;
    return 1;
  };

  for (size_t i = 0; i < ops.size(); ++i) {
    const DiffOp& op = ops[i];
    if (op.kind == DiffOpKind::kKeep) continue;
    TokenEdit edit;
    edit.position = op.a_begin;
    edit.line = line_near(op.a_begin);
    if (op.kind == DiffOpKind::kDelete) {
      edit.removed.assign(a.begin() + op.a_begin, a.begin() + op.a_end);
      if (i + 1 < ops.size() && ops[i + 1].kind == DiffOpKind::kInsert) {
        const DiffOp& ins = ops[++i];
        edit.added.assign(b.begin() + ins.b_begin, b.begin() + ins.b_end);
        edit.kind = EditKind::kReplace;
      } else {
        edit.kind = EditKind::kDelete;
      }
    } else {
      edit.added.assign(b.begin() + op.b_begin, b.begin() + op.b_end);
      if (i + 1 < ops.size() && ops[i + 1].kind == DiffOpKind::kDelete) {
        const DiffOp& del = ops[++i];
        edit.removed.assign(a.begin() + del.a_begin, a.begin() + del.a_end);
        edit.kind = EditKind::kReplace;
      } else {
        edit.kind = EditKind::kInsert;
      }
    }
    diff.edits.push_back(std::move(edit));
  }
  return diff;
}

std::vector<Token> ApplyTokenDiff(const std::vector<Token>& before,
                                  const TokenDiff& diff) {
  std::vector<Token> out;
  size_t cursor = 0;
  for (const TokenEdit& e : diff.edits) {
    out.insert(out.end(), before.begin() + cursor, before.begin() + e.position);
    out.insert(out.end(), e.added.begin(), e.added.end());
    cursor = e.position + e.removed.size();
  }
  out.insert(out.end(), before.begin() + cursor, before.end());
  return out;
}

namespace {

std::string JoinLexemes(const std::vector<Token>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += '`';
    out += tokens[i].lexeme;
    out += '`';
  }
  return out;
}

}  // namespace

std::string RenderEdit(const TokenEdit& edit) {
  std::ostringstream os;
  os << "line " << edit.line << ": ";
  switch (edit.kind) {
    case EditKind::kInsert:
      os << "insert " << JoinLexemes(edit.added);
      break;
    case EditKind::kDelete:
      os << "delete " << JoinLexemes(edit.removed);
      break;
    case EditKind::kReplace:
      os << "replace " << JoinLexemes(edit.removed) << " -> "
         << JoinLexemes(edit.added);
      break;
  }
  std::string s = os.str();
  // Keep one edit per output line even for multi-line template chunks.
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::string RenderTokenDiff(const TokenDiff& diff) {
  std::string out;
  for (const TokenEdit& e : diff.edits) {
    out += RenderEdit(e);
    out += '\n';
  }
  return out;
}

}  // namespace agentic_typer
