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

#include "xml_dom.hpp"

#include <expat.h>

#include <algorithm>
#include <climits>

namespace codia::detail {
namespace {

// Maps byte offsets to 1-based line and code-point column.
class Positions {
 public:
  explicit Positions(std::string_view text) : text_(text) {
    lineStarts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') lineStarts_.push_back(i + 1);
    }
  }

  std::pair<int, int> at(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    auto it = std::upper_bound(lineStarts_.begin(), lineStarts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - lineStarts_.begin());
    int column = 1;
    for (std::size_t i = lineStarts_[line - 1]; i < offset; ++i) {
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
    }
    return {static_cast<int>(line), column};
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> lineStarts_;
};

struct Builder {
  XML_Parser parser = nullptr;
  const Positions* positions = nullptr;
  std::unique_ptr<XmlElement> root;
  std::vector<XmlElement*> stack;

  SourceSpan here(std::size_t width) const {
    const XML_Index index = XML_GetCurrentByteIndex(parser);
    auto [line, column] = positions->at(index < 0 ? 0 : static_cast<std::size_t>(index));
    return {line, column, line, column + static_cast<int>(width)};
  }
};

void XMLCALL onStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* b = static_cast<Builder*>(data);
  auto element = std::make_unique<XmlElement>();
  element->name = name;
  element->span = b->here(element->name.size() + 1);
  for (int i = 0; attrs[i]; i += 2) {
    element->attributes.emplace_back(attrs[i], attrs[i + 1]);
  }
  XmlElement* raw = element.get();
  if (b->stack.empty()) {
    b->root = std::move(element);
  } else {
    b->stack.back()->children.push_back(std::move(element));
  }
  b->stack.push_back(raw);
}

void XMLCALL onEnd(void* data, const XML_Char*) {
  static_cast<Builder*>(data)->stack.pop_back();
}

void XMLCALL onText(void* data, const XML_Char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (b->stack.empty()) return;
  XmlElement* top = b->stack.back();
  if (top->hasText) return;
  for (int i = 0; i < len; ++i) {
    if (s[i] != ' ' && s[i] != '\t' && s[i] != '\n' && s[i] != '\r') {
      top->hasText = true;
      top->textSpan = b->here(1);
      return;
    }
  }
}

}  // namespace

const std::string* XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

XmlParseResult parseXml(std::string_view text) {
  XmlParseResult out;
  Positions positions(text);
  Builder builder;
  builder.positions = &positions;
  builder.parser = XML_ParserCreate("UTF-8");
  XML_SetUserData(builder.parser, &builder);
  XML_SetElementHandler(builder.parser, onStart, onEnd);
  XML_SetCharacterDataHandler(builder.parser, onText);

  bool ok = text.size() <= static_cast<std::size_t>(INT_MAX);
  if (ok) {
    ok = XML_Parse(builder.parser, text.data(), static_cast<int>(text.size()),
                   XML_TRUE) == XML_STATUS_OK;
  }
  if (!ok) {
    const XML_Index index = XML_GetCurrentByteIndex(builder.parser);
    auto [line, column] =
        positions.at(index < 0 ? text.size() : static_cast<std::size_t>(index));
    std::string message = text.size() > static_cast<std::size_t>(INT_MAX)
                              ? "document too large"
                              : XML_ErrorString(XML_GetErrorCode(builder.parser));
    out.error = makeError(code::kXmlSyntax, std::move(message),
                          {line, column, line, column + 1});
  } else {
    out.root = std::move(builder.root);
  }
  XML_ParserFree(builder.parser);
  return out;
}

std::string xmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace codia::detail
