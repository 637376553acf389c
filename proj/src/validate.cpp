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

#include "codia/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace codia {
namespace {

struct Finding {
  Diagnostic diagnostic;
  bool located;
  std::string owner;
};

class Checker {
 public:
  Checker(const Document& doc, const SourceMap* sources) : doc_(doc), sources_(sources) {
    for (const Label& l : collectLabels(doc)) labels_.insert(l.str());
    for (std::size_t i = 0; i < doc.contracts().size(); ++i) {
      topIndex_.emplace(doc.contracts()[i].name().str(), i);
    }
    if (doc.variables()) {
      for (const Identifier& v : *doc.variables()) declared_.insert(v.str());
    }
  }

  std::vector<Diagnostic> run() {
    for (std::size_t top = 0; top < doc_.contracts().size(); ++top) {
      forEachContract(doc_.contracts()[top],
                      [&](const Contract& c) { checkBox(c, top); });
    }
    checkCycles();
    std::stable_sort(findings_.begin(), findings_.end(),
                     [](const Finding& a, const Finding& b) {
                       if (a.located != b.located) return a.located;
                       if (a.located) return a.diagnostic.span < b.diagnostic.span;
                       return a.owner < b.owner;
                     });
    std::vector<Diagnostic> out;
    for (Finding& f : findings_) out.push_back(std::move(f.diagnostic));
    return out;
  }

 private:
  void add(Severity severity, std::string_view c, std::string message, Site site,
           const std::string& owner, std::size_t index = 0) {
    std::optional<SourceSpan> span;
    if (sources_) span = sources_->find(site, owner, index);
    Diagnostic d = severity == Severity::Error
                       ? makeError(c, std::move(message), span.value_or(SourceSpan{}))
                       : makeWarning(c, std::move(message), span.value_or(SourceSpan{}));
    findings_.push_back({std::move(d), span.has_value(), owner});
  }

  void checkBox(const Contract& c, std::size_t top) {
    const std::string& owner = c.name().str();
    for (std::size_t i = 0; i < c.guards().size(); ++i) {
      if (const auto* d = std::get_if<DoneTest>(&c.guards()[i])) {
        if (!labels_.count(d->action.str())) {
          add(Severity::Error, code::kUnresolvedDone,
              "'" + d->action.str() + "' does not name a box", Site::Guard, owner, i);
        }
        continue;
      }
      const auto& cmp = std::get<Comparison>(c.guards()[i]);
      if (!declared_.count(cmp.variable.str())) {
        add(doc_.variables() ? Severity::Error : Severity::Warning,
            code::kUndeclaredVariable,
            "variable '" + cmp.variable.str() + "' is not declared", Site::Guard, owner, i);
      }
    }
    for (std::size_t i = 0; i < c.timing().size(); ++i) {
      const ClockName& clock = c.timing()[i].clock;
      if (!labels_.count(clock.box().str())) {
        add(Severity::Error, code::kUnresolvedClock,
            "clock '" + clock.str() + "' has no box '" + clock.box().str() + "'",
            Site::Timing, owner, i);
      }
    }
    if (const auto* x = std::get_if<CrossRef>(&c.body())) {
      if (!topIndex_.count(x->target.str())) {
        add(Severity::Error, code::kUnresolvedReference,
            "'" + x->target.str() + "' is not a top-level contract", Site::CrossRef, owner);
      }
    }
    if (c.reparation()) {
      if (const auto* ref = std::get_if<ReparationRef>(&*c.reparation())) {
        auto it = topIndex_.find(ref->target.str());
        if (it == topIndex_.end()) {
          add(Severity::Error, code::kUnresolvedReference,
              "'" + ref->target.str() + "' is not a top-level contract", Site::Reparation,
              owner);
        } else {
          edges_.push_back({top, it->second, owner});
        }
      }
    }
  }

  // Tarjan's algorithm over top-level contracts; one finding per cyclic
  // component, reported at the first edge that stays inside it.
  void checkCycles() {
    const std::size_t n = doc_.contracts().size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const Edge& e : edges_) adj[e.from].push_back(e.to);

    std::vector<int> index(n, -1), low(n, 0), component(n, -1);
    std::vector<bool> onStack(n, false);
    std::vector<std::size_t> stack;
    int counter = 0;
    int components = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      onStack[v] = true;
      for (std::size_t w : adj[v]) {
        if (index[w] < 0) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = false;
          component[w] = components;
        } while (w != v);
        ++components;
      }
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (index[v] < 0) visit(v);
    }

    std::vector<bool> reported(static_cast<std::size_t>(components), false);
    for (const Edge& e : edges_) {
      const int comp = component[e.from];
      if (component[e.to] != comp || reported[static_cast<std::size_t>(comp)]) continue;
      reported[static_cast<std::size_t>(comp)] = true;
      std::string members;
      for (std::size_t v = 0; v < n; ++v) {
        if (component[v] != comp) continue;
        if (!members.empty()) members += ", ";
        members += doc_.contracts()[v].name().str();
      }
      add(Severity::Error, code::kReparationCycle,
          "reparations form a cycle through " + members, Site::Reparation, e.owner);
    }
  }

  struct Edge {
    std::size_t from;
    std::size_t to;
    std::string owner;
  };

  const Document& doc_;
  const SourceMap* sources_;
  std::set<std::string> labels_;
  std::set<std::string> declared_;
  std::map<std::string, std::size_t> topIndex_;
  std::vector<Edge> edges_;
  std::vector<Finding> findings_;
};

}  // namespace

std::vector<Diagnostic> validateDocument(const Document& doc, const SourceMap* sources) {
  return Checker(doc, sources).run();
}

std::set<ClockName> generateClocks(const Document& doc) {
  std::set<ClockName> out;
  for (const Label& l : collectLabels(doc)) out.insert(clockNameFor(l));
  return out;
}

}  // namespace codia
