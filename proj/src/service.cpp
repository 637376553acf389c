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

#include "codia/service.hpp"

#include "codia/diagnostic_json.hpp"
#include "codia/pipeline.hpp"
#include "httplib.h"

namespace codia {
namespace {

using nlohmann::json;

Reply badRequest(std::string message) {
  return {400, json{{"error", std::move(message)}}.dump()};
}

// Parses the body and extracts one string field; on failure `error` is set.
std::optional<json> requestObject(std::string_view body, Reply& error) {
  json req = json::parse(body, nullptr, false);
  if (req.is_discarded()) {
    error = badRequest("request body is not valid JSON");
    return std::nullopt;
  }
  if (!req.is_object()) {
    error = badRequest("request body must be a JSON object");
    return std::nullopt;
  }
  return req;
}

std::optional<std::string> stringField(const json& req, const char* key, Reply& error) {
  auto it = req.find(key);
  if (it == req.end()) return std::nullopt;
  if (!it->is_string()) {
    error = badRequest(std::string("field '") + key + "' must be a string");
    return std::nullopt;
  }
  return it->get<std::string>();
}

}  // namespace

Reply Api::parse(std::string_view body) const {
  Reply error;
  auto req = requestObject(body, error);
  if (!req) return error;
  auto text = stringField(*req, "text", error);
  if (!text) return error.status == 400 ? error : badRequest("missing field 'text'");

  Loaded loaded = loadDocument(*text, Format::Cnl, lex_);
  const bool ok = loaded.document && !hasErrors(loaded.diagnostics);
  json out{{"ok", ok}, {"diagnostics", toJson(loaded.diagnostics)}};
  if (ok) out["coml"] = toComl(*loaded.document);
  return {200, out.dump()};
}

Reply Api::linearize(std::string_view body) const {
  Reply error;
  auto req = requestObject(body, error);
  if (!req) return error;
  auto coml = stringField(*req, "coml", error);
  if (!coml) return error.status == 400 ? error : badRequest("missing field 'coml'");

  Loaded loaded = loadDocument(*coml, Format::Coml, lex_);
  const bool ok = loaded.document && !hasErrors(loaded.diagnostics);
  json out{{"ok", ok}, {"diagnostics", toJson(loaded.diagnostics)}};
  if (ok) out["text"] = codia::linearize(*loaded.document, lex_);
  return {200, out.dump()};
}

Reply Api::validate(std::string_view body) const {
  Reply error;
  auto req = requestObject(body, error);
  if (!req) return error;
  auto text = stringField(*req, "text", error);
  if (error.status == 400) return error;
  auto coml = stringField(*req, "coml", error);
  if (error.status == 400) return error;
  if (text.has_value() == coml.has_value()) {
    return badRequest("exactly one of 'text' and 'coml' is required");
  }

  Loaded loaded = text ? lintDocument(*text, Format::Cnl, lex_)
                       : lintDocument(*coml, Format::Coml, lex_);
  json clocks = json::array();
  if (loaded.document) {
    for (const ClockName& c : generateClocks(*loaded.document)) clocks.push_back(c.str());
  }
  const bool ok = loaded.document && !hasErrors(loaded.diagnostics);
  json out{{"ok", ok}, {"diagnostics", toJson(loaded.diagnostics)}, {"clocks", clocks}};
  return {200, out.dump()};
}

Server::Server(Api api, ServerOptions options)
    : api_(std::move(api)),
      options_(std::move(options)),
      http_(std::make_unique<httplib::Server>()) {
  http_->set_payload_max_length(options_.maxBodyBytes);
  const std::string origin = options_.corsOrigin;
  http_->set_default_headers({
      {"Access-Control-Allow-Origin", origin},
      {"Access-Control-Allow-Methods", "POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  auto route = [this](const char* path, Reply (Api::*handler)(std::string_view) const) {
    http_->Post(path, [this, handler](const httplib::Request& req, httplib::Response& res) {
      Reply r = (api_.*handler)(req.body);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    });
  };
  route("/api/parse", &Api::parse);
  route("/api/linearize", &Api::linearize);
  route("/api/validate", &Api::validate);
  http_->Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  if (!options_.staticDir.empty()) http_->set_mount_point("/", options_.staticDir);
}

Server::~Server() = default;

int Server::bind() {
  if (options_.port == 0) return http_->bind_to_any_port(options_.host);
  return http_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
}

bool Server::listen() { return http_->listen_after_bind(); }

void Server::stop() { http_->stop(); }

void Server::waitUntilReady() const { http_->wait_until_ready(); }

}  // namespace codia
