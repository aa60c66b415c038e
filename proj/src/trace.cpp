/*
Copyright 2026 The pebblemp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "pebble/trace.hpp"

#include <charconv>
#include <sstream>

#include "pebble/errors.hpp"

namespace pebble {

namespace {

std::string endpoint(int e) { return e == 0 ? "M" : "p" + std::to_string(e); }

long parse_int(std::string_view s, std::size_t line_no) {
  long x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || x < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
  }
  return x;
}

std::pair<long, long> split_pair(std::string_view tok, std::size_t line_no) {
  auto colon = tok.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected <a>:<b>, got '" + std::string(tok) + "'");
  }
  return {parse_int(tok.substr(0, colon), line_no), parse_int(tok.substr(colon + 1), line_no)};
}

int parse_endpoint(std::string_view s, std::size_t line_no) {
  if (s == "M") return 0;
  if (s.size() >= 2 && s[0] == 'p') {
    long e = parse_int(s.substr(1), line_no);
    if (e >= 1) return static_cast<int>(e);
  }
  throw ParseError("line " + std::to_string(line_no) + ": bad endpoint '" + std::string(s) + "'");
}

}  // namespace

std::string format_rule(const TransitionRule &rule) {
  std::ostringstream os;
  os << to_string(rule.kind);
  switch (rule.kind) {
    case RuleKind::Delete:
      for (const Removal &rm : rule.removals) {
        if (rm.shade == 0) {
          os << " b:" << rm.node;
        } else {
          os << " r" << rm.shade << ":" << rm.node;
        }
      }
      break;
    case RuleKind::DirectComm:
      for (const Transfer &t : rule.transfers) os << " " << endpoint(t.from) << "->" << endpoint(t.to) << ":" << t.node;
      break;
    default:
      for (const Placement &p : rule.placements) os << " " << p.shade << ":" << p.node;
  }
  return os.str();
}

std::string serialize_strategy(const Strategy &strategy) {
  std::string out;
  for (const TransitionRule &rule : strategy.steps) {
    out += format_rule(rule);
    out += '\n';
  }
  return out;
}

Strategy parse_strategy(const std::string &text) {
  Strategy s;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    TransitionRule rule;
    std::string tok;
    if (kw == "compute" || kw == "save" || kw == "load") {
      rule.kind = kw == "compute" ? RuleKind::Compute : kw == "save" ? RuleKind::Save : RuleKind::Load;
      while (ls >> tok) {
        auto [shade, node] = split_pair(tok, line_no);
        rule.placements.push_back({static_cast<int>(shade), static_cast<NodeId>(node)});
      }
    } else if (kw == "delete") {
      rule.kind = RuleKind::Delete;
      while (ls >> tok) {
        std::string_view t = tok;
        if (t.starts_with("b:")) {
          rule.removals.push_back({0, static_cast<NodeId>(parse_int(t.substr(2), line_no))});
        } else if (t.starts_with("r")) {
          auto [shade, node] = split_pair(t.substr(1), line_no);
          if (shade < 1) throw ParseError("line " + std::to_string(line_no) + ": red shades are 1-based");
          rule.removals.push_back({static_cast<int>(shade), static_cast<NodeId>(node)});
        } else {
          throw ParseError("line " + std::to_string(line_no) + ": bad delete target '" + tok + "'");
        }
      }
    } else if (kw == "comm") {
      rule.kind = RuleKind::DirectComm;
      while (ls >> tok) {
        std::string_view t = tok;
        auto arrow = t.find("->");
        auto colon = t.rfind(':');
        if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow) {
          throw ParseError("line " + std::to_string(line_no) + ": bad comm token '" + tok + "'");
        }
        int from = parse_endpoint(t.substr(0, arrow), line_no);
        int to = parse_endpoint(t.substr(arrow + 2, colon - arrow - 2), line_no);
        rule.transfers.push_back({from, to, static_cast<NodeId>(parse_int(t.substr(colon + 1), line_no))});
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown step '" + kw + "'");
    }
    s.steps.push_back(std::move(rule));
  }
  return s;
}

}  // namespace pebble
