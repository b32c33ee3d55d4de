// Copyright 2026 The vsparse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <string>

#include "vsparse/errors.hpp"
#include "vsparse/wye_delta.hpp"

namespace vsparse {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) return parts;
    start = end + 1;
  }
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void Fail(const std::string& message) { throw ParseError(0, message); }

std::int32_t ParseId(std::string_view text) {
  std::int32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    Fail("bad id '" + std::string(text) + "'");
  }
  return value;
}

Rational ParseWeight(std::string_view text) {
  auto r = Rational::Parse(text);
  if (!r) Fail("bad weight '" + std::string(text) + "'");
  return *r;
}

std::string_view Field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) Fail("expected field '" + std::string(key) + "'");
  return token.substr(key.size());
}

std::vector<std::int32_t> ParseIds(std::string_view text) {
  std::vector<std::int32_t> ids;
  if (text == "-") return ids;
  for (auto part : Split(text, ',')) ids.push_back(ParseId(part));
  return ids;
}

template <typename Range, typename Fn>
std::string JoinOrDash(const Range& items, Fn fn) {
  if (items.empty()) return "-";
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += fn(item);
  }
  return out;
}

}  // namespace

std::string ReductionStep::ToLine() const {
  auto id = [](std::int32_t v) { return std::to_string(v); };
  std::string line = "step ";
  line += RuleName(rule);
  line += ' ';
  line += RewriteModeName(mode);
  line += " v=" + JoinOrDash(site.vertices, id);
  line += " e=" + JoinOrDash(site.edges, id);
  line += " new=" + JoinOrDash(writes, [](const EdgeWrite& w) {
            return std::to_string(w.edge) + ':' + std::to_string(w.tail) + '-' +
                   std::to_string(w.head) + ':' + w.weight.str();
          });
  line += " norm=";
  line += normalization ? std::to_string(normalization->edge) + ':' +
                              normalization->before.str() + ':' + normalization->after.str()
                        : "-";
  line += " add=" + (new_vertex == kNoVertex ? std::string("-") : std::to_string(new_vertex));
  return line;
}

ReductionStep ReductionStep::FromLine(std::string_view line) {
  const auto tok = Tokens(line);
  if (tok.size() != 8 || tok[0] != "step") Fail("expected 'step' and 7 fields");
  ReductionStep step;
  const auto rule = ParseRuleName(tok[1]);
  if (!rule) Fail("unknown rule '" + std::string(tok[1]) + "'");
  step.rule = *rule;
  if (tok[2] == "cut") {
    step.mode = RewriteMode::kCut;
  } else if (tok[2] == "distance") {
    step.mode = RewriteMode::kDistance;
  } else {
    Fail("unknown mode '" + std::string(tok[2]) + "'");
  }
  step.site.vertices = ParseIds(Field(tok[3], "v="));
  step.site.edges = ParseIds(Field(tok[4], "e="));
  const auto writes = Field(tok[5], "new=");
  if (writes != "-") {
    for (auto part : Split(writes, ',')) {
      const auto f = Split(part, ':');
      if (f.size() != 3) Fail("bad edge write '" + std::string(part) + "'");
      const auto ends = Split(f[1], '-');
      if (ends.size() != 2) Fail("bad endpoints '" + std::string(f[1]) + "'");
      step.writes.push_back({ParseId(f[0]), ParseId(ends[0]), ParseId(ends[1]), ParseWeight(f[2])});
    }
  }
  const auto norm = Field(tok[6], "norm=");
  if (norm != "-") {
    const auto f = Split(norm, ':');
    if (f.size() != 3) Fail("bad normalization '" + std::string(norm) + "'");
    step.normalization = Normalization{ParseId(f[0]), ParseWeight(f[1]), ParseWeight(f[2])};
  }
  const auto add = Field(tok[7], "add=");
  if (add != "-") step.new_vertex = ParseId(add);
  return step;
}

std::string StepLogToText(const std::vector<ReductionStep>& steps) {
  std::string out;
  for (const auto& s : steps) out += s.ToLine() + '\n';
  return out;
}

std::vector<ReductionStep> StepLogFromText(std::string_view text) {
  std::vector<ReductionStep> steps;
  int number = 0;
  for (auto line : Split(text, '\n')) {
    ++number;
    const auto tok = Tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    try {
      steps.push_back(ReductionStep::FromLine(line));
    } catch (const ParseError& e) {
      std::string message = e.what();
      message.erase(0, message.find(": ") + 2);
      throw ParseError(number, message);
    }
  }
  return steps;
}

}  // namespace vsparse
