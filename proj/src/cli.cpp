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

#include "codia/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "codia/diagnostic_json.hpp"
#include "codia/pipeline.hpp"
#include "codia/service.hpp"

namespace codia {
namespace {

struct Options {
  std::string input;
  std::string lexicon;
  std::string output;
  std::string format;
  bool autolabel = false;
  bool json = false;
  bool strict = false;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string corsOrigin = "*";
  std::string staticDir;
};

// Thrown for problems that end the run with kExitFailure.
struct Fatal {
  std::string message;
};

class Runner {
 public:
  Runner(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
      : o_(o), in_(in), out_(out), err_(err) {}

  int parse() {
    const Lexicon lex = lexicon();
    Loaded r = loadDocument(read(), Format::Cnl, lex, parseOptions());
    report(r.diagnostics);
    if (!r.document || hasErrors(r.diagnostics)) return kExitDiagnostics;
    write(toComl(*r.document));
    return kExitOk;
  }

  int verbalize() {
    const Lexicon lex = lexicon();
    Loaded r = loadDocument(read(), Format::Coml, lex);
    report(r.diagnostics);
    if (!r.document || hasErrors(r.diagnostics)) return kExitDiagnostics;
    write(linearize(*r.document, lex));
    return kExitOk;
  }

  int lint() {
    const Lexicon lex = lexicon();
    Loaded r = lintDocument(read(), format(), lex, parseOptions());
    report(r.diagnostics);
    const bool failed = !r.document || hasErrors(r.diagnostics) ||
                        (o_.strict && !r.diagnostics.empty());
    return failed ? kExitDiagnostics : kExitOk;
  }

  int clocks() {
    const Lexicon lex = lexicon();
    Loaded r = loadDocument(read(), format(), lex, parseOptions());
    report(r.diagnostics);
    if (!r.document || hasErrors(r.diagnostics)) return kExitDiagnostics;
    std::string text;
    for (const ClockName& c : generateClocks(*r.document)) text += c.str() + "\n";
    write(text);
    return kExitOk;
  }

  int serve() {
    ServerOptions so;
    so.host = o_.host;
    so.port = o_.port;
    so.corsOrigin = o_.corsOrigin;
    so.staticDir = o_.staticDir;
    Server server(Api(lexicon()), so);
    const int port = server.bind();
    if (port < 0) throw Fatal{"cannot bind " + o_.host + ":" + std::to_string(o_.port)};
    out_ << "listening on http://" << o_.host << ":" << port << std::endl;
    return server.listen() ? kExitOk : kExitFailure;
  }

 private:
  ParseOptions parseOptions() const {
    ParseOptions p;
    p.autolabel = o_.autolabel;
    return p;
  }

  Format format() const {
    if (o_.format == "cnl") return Format::Cnl;
    if (o_.format == "coml") return Format::Coml;
    const std::string ext = std::filesystem::path(o_.input).extension().string();
    return ext == ".xml" || ext == ".coml" ? Format::Coml : Format::Cnl;
  }

  Lexicon lexicon() const {
    std::string path = o_.lexicon;
    if (path.empty()) {
      if (const char* env = std::getenv("CODIA_LEXICON")) path = env;
    }
    if (path.empty()) throw Fatal{"no lexicon given; use -l or set CODIA_LEXICON"};
    try {
      return loadLexiconFile(path);
    } catch (const LexiconError& e) {
      throw Fatal{path + ": " + e.what()};
    }
  }

  std::string displayName() const { return o_.input == "-" ? "<stdin>" : o_.input; }

  std::string read() const {
    std::ostringstream buf;
    if (o_.input == "-") {
      buf << in_.rdbuf();
      return buf.str();
    }
    std::ifstream f(o_.input, std::ios::binary);
    if (!f) throw Fatal{"cannot read '" + o_.input + "'"};
    buf << f.rdbuf();
    return buf.str();
  }

  void write(const std::string& text) const {
    if (o_.output.empty() || o_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output, std::ios::binary);
    f << text;
    if (!f) throw Fatal{"cannot write '" + o_.output + "'"};
  }

  void report(const std::vector<Diagnostic>& ds) const {
    if (o_.json) {
      err_ << toJson(ds).dump(2) << "\n";
      return;
    }
    for (const Diagnostic& d : ds) err_ << formatDiagnostic(d, displayName()) << "\n";
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Parse, verbalize and check contracts written in controlled English.",
               "codia"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
  };
  auto lexicon = [&](CLI::App* sub) {
    sub->add_option("-l,--lexicon", o.lexicon, "lexicon file (default: $CODIA_LEXICON)");
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "output file (default: stdout)");
  };
  auto json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "print diagnostics as JSON");
  };
  auto autolabel = [&](CLI::App* sub) {
    sub->add_flag("--autolabel", o.autolabel, "name unlabeled bullets <parent>_<n>");
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "input format (default: by extension)")
        ->check(CLI::IsMember({"cnl", "coml"}));
  };

  CLI::App* parse = app.add_subcommand("parse", "CNL to COML");
  input(parse, "CNL file, or - for stdin");
  lexicon(parse);
  output(parse);
  autolabel(parse);
  json(parse);

  CLI::App* verbalize = app.add_subcommand("verbalize", "COML to canonical CNL");
  input(verbalize, "COML file, or - for stdin");
  lexicon(verbalize);
  output(verbalize);
  json(verbalize);

  CLI::App* lint = app.add_subcommand("lint", "parse and validate");
  input(lint, "CNL or COML file, or - for stdin");
  lexicon(lint);
  format(lint);
  autolabel(lint);
  json(lint);
  lint->add_flag("--strict", o.strict, "fail on warnings too");

  CLI::App* clocks = app.add_subcommand("clocks", "list the implicit clocks, sorted");
  input(clocks, "CNL or COML file, or - for stdin");
  lexicon(clocks);
  format(clocks);
  output(clocks);
  autolabel(clocks);
  json(clocks);

  CLI::App* serve = app.add_subcommand("serve", "run the HTTP service");
  lexicon(serve);
  serve->add_option("--host", o.host, "address to bind")->capture_default_str();
  serve->add_option("--port", o.port, "port, 0 for any free port")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));
  serve->add_option("--cors-origin", o.corsOrigin, "Access-Control-Allow-Origin value")
      ->capture_default_str();
  serve->add_option("--static", o.staticDir, "directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitFailure;
  }

  Runner runner(o, in, out, err);
  try {
    if (parse->parsed()) return runner.parse();
    if (verbalize->parsed()) return runner.verbalize();
    if (lint->parsed()) return runner.lint();
    if (clocks->parsed()) return runner.clocks();
    return runner.serve();
  } catch (const Fatal& f) {
    err << "codia: " << f.message << "\n";
    return kExitFailure;
  } catch (const LexiconError& e) {
    err << "codia: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace codia
