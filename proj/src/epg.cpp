// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/epg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "onionpeel/error.hpp"

namespace onionpeel {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
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

Label parse_label(std::string_view tok, std::size_t line_no) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": bad vertex id '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Embedding parse_epg(std::string_view text) {
  RotationSpec spec;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (!header) {
      if (tok.size() != 2 || tok[0] != "epg" || tok[1] != "1") {
        fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected header 'epg 1'");
      }
      header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() < 2) fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": missing vertex id");
      std::string_view id = tok[1];
      std::size_t next = 2;
      if (id.size() > 1 && id.back() == ':') {
        id.remove_suffix(1);
      } else if (tok.size() > 2 && tok[2] == ":") {
        next = 3;
      } else {
        fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected ':' after vertex id");
      }
      Label v = parse_label(id, line_no);
      if (spec.rotation.count(v)) {
        fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " declared twice");
      }
      spec.vertices.push_back(v);
      auto& row = spec.rotation[v];
      for (std::size_t i = next; i < tok.size(); ++i) row.push_back(parse_label(tok[i], line_no));
    } else if (tok[0] == "outer") {
      if (tok.size() != 3) fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": expected 'outer <u> <v>'");
      spec.outer_darts.emplace_back(parse_label(tok[1], line_no), parse_label(tok[2], line_no));
    } else {
      fail(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) fail(ErrorCode::kParseError, "missing header 'epg 1'");
  return Embedding::build(spec);
}

std::string write_epg(const Embedding& g) {
  std::ostringstream out;
  out << "epg 1\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out << "v " << g.label(static_cast<Vertex>(v)) << ":";
    for (Dart d : g.rotation(static_cast<Vertex>(v))) out << ' ' << g.label(g.target(d));
    out << '\n';
  }
  for (Dart d : g.outer_darts()) out << "outer " << g.label(g.origin(d)) << ' ' << g.label(g.target(d)) << '\n';
  return out.str();
}

std::string write_dot(const Embedding& g) {
  std::ostringstream out;
  out << "graph embedding {\n";
  auto faces = trace_faces(g);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    out << "  // face " << f << (faces[f].is_outer ? " (outer):" : ":");
    for (Dart d : faces[f].darts) out << ' ' << g.label(g.origin(d));
    out << '\n';
  }
  auto outer = outer_vertex_mask(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out << "  " << g.label(static_cast<Vertex>(v));
    if (outer[v]) out << " [shape=doublecircle]";
    out << ";\n";
  }
  std::vector<std::pair<Label, Label>> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.dart_key(static_cast<Dart>(2 * e));
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace onionpeel
