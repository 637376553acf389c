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

// HTTP/JSON front end for editors.
//
//   POST /api/parse      {"text": ...}            -> {ok, coml?, diagnostics}
//   POST /api/linearize  {"coml": ...}            -> {ok, text?, diagnostics}
//   POST /api/validate   {"text": ...}|{"coml"}   -> {ok, diagnostics, clocks}
//
// Malformed requests get 400 with {"error": ...}; bodies over the size
// limit get 413.

#ifndef CODIA_SERVICE_HPP_
#define CODIA_SERVICE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "codia/lexicon.hpp"

namespace httplib {
class Server;
}

namespace codia {

struct Reply {
  int status = 200;
  std::string body;  // JSON
};

// Request handlers without any transport; safe to call concurrently.
class Api {
 public:
  explicit Api(Lexicon lex) : lex_(std::move(lex)) {}

  Reply parse(std::string_view body) const;
  Reply linearize(std::string_view body) const;
  Reply validate(std::string_view body) const;

 private:
  Lexicon lex_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string corsOrigin = "*";
  std::size_t maxBodyBytes = 1 << 20;
  std::string staticDir;  // served at / when non-empty
};

class Server {
 public:
  Server(Api api, ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Returns the bound port, or -1 on failure.
  int bind();
  // Blocks until stop(); call bind() first.
  bool listen();
  void stop();
  void waitUntilReady() const;

 private:
  Api api_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace codia

#endif  // CODIA_SERVICE_HPP_
