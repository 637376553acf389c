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

#ifndef CODIA_SRC_LEXER_HPP_
#define CODIA_SRC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "codia/diagnostic.hpp"

namespace codia::detail {

enum class TokenKind { Word, Number, Colon, Comma, LBrace, RBrace, Dash, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;
  bool synthetic = false;      // brace inserted by the layout pass
  bool startsTopLevel = false; // first token of a column-1 line

  bool is(std::string_view word) const {
    return kind == TokenKind::Word && text == word;
  }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::vector<Diagnostic> diagnostics;
};

// Applies the layout rules and tokenizes; bullet blocks become synthetic
// brace tokens, so layout and flat input yield the same token kinds.
LexResult lex(std::string_view text);

std::string_view describe(TokenKind kind);

}  // namespace codia::detail

#endif  // CODIA_SRC_LEXER_HPP_
