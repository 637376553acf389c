// Copyright 2026 The Codia Authors
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

#include "lexer.hpp"

#include <algorithm>

#include "codia/layout.hpp"

namespace codia::detail {
namespace {

bool isWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

bool isContinuationByte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

void lexLine(const LayoutLine& line, bool topLevel, LexResult& out) {
  std::string_view s = line.content;
  int column = line.contentColumn;
  std::size_t i = 0;
  bool firstToken = true;
  auto emit = [&](TokenKind kind, std::string text, int width) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.span = {line.lineNumber, column, line.lineNumber, column + width};
    t.startsTopLevel = topLevel && firstToken;
    firstToken = false;
    out.tokens.push_back(std::move(t));
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    if (isWordChar(c) && c != '\'') {
      std::size_t j = i;
      while (j < s.size() && isWordChar(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      const bool digits = std::all_of(word.begin(), word.end(),
                                      [](char d) { return d >= '0' && d <= '9'; });
      const int width = static_cast<int>(j - i);
      emit(digits ? TokenKind::Number : TokenKind::Word, std::move(word), width);
      column += width;
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case ':': kind = TokenKind::Colon; break;
      case ',': kind = TokenKind::Comma; break;
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '-': kind = TokenKind::Dash; break;
      default: {
        std::size_t j = i + 1;
        while (j < s.size() && isContinuationByte(s[j])) ++j;
        out.diagnostics.push_back(makeError(
            code::kGrammar,
            "unexpected character '" + std::string(s.substr(i, j - i)) + "'",
            {line.lineNumber, column, line.lineNumber, column + 1}));
        ++column;
        i = j;
        continue;
      }
    }
    emit(kind, std::string(1, c), 1);
    ++column;
    ++i;
  }
}

}  // namespace

LexResult lex(std::string_view text) {
  LayoutResult layout = analyzeLayout(text);
  LexResult out;
  out.diagnostics = std::move(layout.diagnostics);
  int open = 0;
  SourceSpan lastEnd{1, 1, 1, 1};
  auto synthetic = [&](TokenKind kind, SourceSpan span) {
    Token t;
    t.kind = kind;
    t.text = kind == TokenKind::LBrace ? "{" : "}";
    t.span = span;
    t.synthetic = true;
    out.tokens.push_back(std::move(t));
  };
  auto closeTo = [&](int depth, SourceSpan at) {
    for (; open > depth; --open) synthetic(TokenKind::RBrace, at);
  };
  for (const LayoutLine& l : layout.lines) {
    SourceSpan head{l.lineNumber, l.contentColumn, l.lineNumber, l.contentColumn};
    if (l.depth == 0) {
      closeTo(0, lastEnd);
    } else if (l.depth > open) {
      synthetic(TokenKind::LBrace, head);
      ++open;
    } else {
      closeTo(l.depth, lastEnd);
    }
    const std::size_t before = out.tokens.size();
    lexLine(l, l.depth == 0, out);
    if (out.tokens.size() > before) {
      const SourceSpan& e = out.tokens.back().span;
      lastEnd = {e.endLine, e.endColumn, e.endLine, e.endColumn};
    }
  }
  closeTo(0, lastEnd);
  Token end;
  end.kind = TokenKind::End;
  end.span = lastEnd;
  out.tokens.push_back(std::move(end));
  return out;
}

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Number: return "number";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Dash: return "'-'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

}  // namespace codia::detail
