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


#include <gtest/gtest.h>

#include <atomic>
#include <sstream>
#include <thread>

#include "codia/cli.hpp"
#include "codia/service.hpp"
#include "httplib.h"
#include "json.hpp"
#include "support/paths.hpp"

namespace codia {
namespace {

using nlohmann::json;

Api api() { return Api(testing::shippedLexicon()); }

json body(const Reply& r) { return json::parse(r.body); }

TEST(ApiParse, ReturnsComlForValidText) {
  const Reply r = api().parse(json{{"text", testing::dataFile("coffee.cnl")}}.dump());
  ASSERT_EQ(r.status, 200);
  const json b = body(r);
  EXPECT_TRUE(b["ok"]);
  EXPECT_EQ(b["coml"], testing::dataFile("coffee.xml"));
  EXPECT_TRUE(b["diagnostics"].empty());
}

TEST(ApiParse, ReportsDiagnosticsWithSpans) {
  const json b = body(api().parse(R"({"text": "x :"})"));
  EXPECT_FALSE(b["ok"]);
  EXPECT_FALSE(b.contains("coml"));
  ASSERT_EQ(b["diagnostics"].size(), 1u);
  const json& d = b["diagnostics"][0];
  EXPECT_EQ(d["code"], "grammar");
  EXPECT_EQ(d["span"]["startLine"], 1);
  EXPECT_EQ(d["span"]["startColumn"], 4);
}

TEST(ApiParse, MalformedRequests) {
  EXPECT_EQ(api().parse("not json").status, 400);
  EXPECT_EQ(api().parse("[1, 2]").status, 400);
  EXPECT_EQ(api().parse("{}").status, 400);
  EXPECT_EQ(api().parse(R"({"text": 3})").status, 400);
  EXPECT_TRUE(body(api().parse("{}")).contains("error"));
}

TEST(ApiLinearize, ReturnsCanonicalText) {
  const json b = body(api().linearize(json{{"coml", testing::dataFile("coffee.xml")}}.dump()));
  EXPECT_TRUE(b["ok"]);
  EXPECT_EQ(b["text"], testing::dataFile("coffee.cnl"));
  const json bad = body(api().linearize(R"({"coml": "<document"})"));
  EXPECT_FALSE(bad["ok"]);
  EXPECT_EQ(bad["diagnostics"][0]["code"], "xml-syntax");
  EXPECT_EQ(api().linearize(R"({"text": "a"})").status, 400);
}

TEST(ApiValidate, GoldenTextHasOneClockPerLabel) {
  const json b = body(api().validate(json{{"text", testing::dataFile("coffee.cnl")}}.dump()));
  EXPECT_TRUE(b["ok"]);
  EXPECT_TRUE(b["diagnostics"].empty());
  EXPECT_EQ(b["clocks"].size(), 19u);
  EXPECT_NE(std::find(b["clocks"].begin(), b["clocks"].end(), "t_payRight"), b["clocks"].end());
}

TEST(ApiValidate, AcceptsComl) {
  const json b = body(api().validate(json{{"coml", testing::dataFile("coffee.xml")}}.dump()));
  EXPECT_TRUE(b["ok"]);
  EXPECT_EQ(b["clocks"].size(), 19u);
}

TEST(ApiValidate, DeletingRefundUnderlinesFourReferences) {
  const std::string golden = testing::dataFile("coffee.cnl");
  const json b =
      body(api().validate(json{{"text", golden.substr(0, golden.rfind("refund : "))}}.dump()));
  EXPECT_FALSE(b["ok"]);
  ASSERT_EQ(b["diagnostics"].size(), 4u);
  for (const json& d : b["diagnostics"]) EXPECT_EQ(d["code"], "unresolved-reference");
}

TEST(ApiValidate, NeedsExactlyOneInput) {
  EXPECT_EQ(api().validate("{}").status, 400);
  EXPECT_EQ(api().validate(R"({"text": "a", "coml": "b"})").status, 400);
  EXPECT_EQ(api().validate(R"({"coml": false})").status, 400);
}

TEST(ApiValidate, DiagnosticsMatchTheCliJsonMode) {
  const std::string text =
      "variables: x\n"
      "a : if variable y less than 3 Mary are required to pay\n"
      "b : see nowhere\n";
  for (const std::string& input : {text, std::string("a : Mary is required to pay otherwise see "
                                                     "b\nb : see a\nc : if q is done John may pay\n")}) {
    std::istringstream in(input);
    std::ostringstream out, err;
    runCli({"lint", "-", "-l", (testing::sourceDir() / "data" / "coffee.lex").string(), "--json"},
           in, out, err);
    const json service = body(api().validate(json{{"text", input}}.dump()))["diagnostics"];
    EXPECT_EQ(service, json::parse(err.str())) << input;
    EXPECT_FALSE(service.empty());
  }
}

TEST(ApiValidate, RepliesDependOnlyOnTheRequest) {
  const Api shared = api();
  const std::string req = json{{"text", testing::dataFile("coffee-original.cnl")}}.dump();
  const Reply first = shared.validate(req);
  shared.parse(R"({"text": "x :"})");
  shared.validate(R"({"text": "a : see b"})");
  EXPECT_EQ(shared.validate(req).body, first.body);
}

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServerOptions o;
    o.port = 0;
    o.corsOrigin = "http://editor.test";
    o.maxBodyBytes = 64 * 1024;
    server_ = std::make_unique<Server>(api(), o);
    port_ = server_->bind();
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen(); });
    server_->waitUntilReady();
  }
  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

  std::unique_ptr<Server> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, ValidateOverHttp) {
  auto res = client().Post("/api/validate", json{{"text", testing::dataFile("coffee.cnl")}}.dump(),
                           "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://editor.test");
  EXPECT_EQ(json::parse(res->body)["clocks"].size(), 19u);
}

TEST_F(ServerTest, ParseErrorOverHttp) {
  auto res = client().Post("/api/parse", R"({"text": "x :"})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["diagnostics"][0]["code"], "grammar");
}

TEST_F(ServerTest, BadJsonIs400) {
  auto res = client().Post("/api/linearize", "{", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_TRUE(json::parse(res->body).contains("error"));
}

TEST_F(ServerTest, OversizedBodyIs413) {
  const std::string big = json{{"text", std::string(100 * 1024, 'x')}}.dump();
  auto res = client().Post("/api/parse", big, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 413);
}

TEST_F(ServerTest, PreflightIsAnswered) {
  auto res = client().Options("/api/validate");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://editor.test");
  EXPECT_NE(res->get_header_value("Access-Control-Allow-Methods").find("POST"),
            std::string::npos);
}

TEST_F(ServerTest, UnknownRouteIs404) {
  auto res = client().Post("/api/compile", "{}", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
}

TEST_F(ServerTest, ConcurrentRequests) {
  std::vector<std::thread> workers;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&] {
      auto res = client().Post("/api/validate",
                               json{{"text", testing::dataFile("coffee.cnl")}}.dump(),
                               "application/json");
      if (res && res->status == 200) ++ok;
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(ok.load(), 8);
}

}  // namespace
}  // namespace codia
