// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0
//
// onionpeel: command-line front end over the C API.

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "onionpeel/onionpeel.h"

namespace {

using Json = nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmbeddingDeleter {
  void operator()(op_embedding* g) const { op_embedding_free(g); }
};
using EmbeddingPtr = std::unique_ptr<op_embedding, EmbeddingDeleter>;

struct StringDeleter {
  void operator()(char* s) const { op_free_string(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(op_status s) {
  if (s != OP_OK) throw DomainError(op_last_error());
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct Options {
  std::string in;
  std::string out;
  std::string json;
  std::string dot;
  std::uint64_t seed = 0;
  int width = 4;
  int budget_edges = 9;
  int budget_vertices = 7;
  std::uint64_t budget_chords = 1000000;
  bool slow = false;
  bool timings = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// Writes to `path`, or to `fallback` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
  } else {
    write_file(path, text);
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw DomainError("Internal: SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

EmbeddingPtr parse(const std::string& text) {
  op_embedding* g = nullptr;
  check(op_embedding_parse(text.c_str(), &g));
  return EmbeddingPtr(g);
}

std::string epg(const op_embedding* g) {
  char* s = nullptr;
  check(op_embedding_to_epg(g, &s));
  return take(s);
}

void maybe_dot(const Options& o, const op_embedding* g) {
  if (o.dot.empty()) return;
  char* s = nullptr;
  check(op_embedding_to_dot(g, &s));
  write_file(o.dot, take(s));
}

void cmd_gen(const Options& o, const std::string& family, int parameter) {
  op_embedding* raw = nullptr;
  check(op_generate(family.c_str(), parameter, o.width, o.seed, &raw));
  EmbeddingPtr g(raw);
  emit(o.out, epg(g.get()), std::cout);
  maybe_dot(o, g.get());
}

void cmd_peel(const Options& o) {
  EmbeddingPtr g = parse(read_input(o.in));
  char* s = nullptr;
  check(op_peel_json(g.get(), &s));
  emit(o.json, take(s), std::cout);
}

void cmd_forest(const Options& o) {
  EmbeddingPtr g = parse(read_input(o.in));
  op_embedding* sat = nullptr;
  char* s = nullptr;
  check(op_forest_json(g.get(), &sat, &s));
  EmbeddingPtr saturated(sat);
  std::string report = take(s);
  if (!o.out.empty()) write_file(o.out, epg(saturated.get()));
  emit(o.json, report, std::cout);
}

void cmd_convert(const Options& o, bool full) {
  EmbeddingPtr g = parse(read_input(o.in));
  op_embedding* raw = nullptr;
  char* s = nullptr;
  check(full ? op_to_triangulation(g.get(), &raw, &s) : op_to_disk(g.get(), &raw, &s));
  EmbeddingPtr result(raw);
  std::string trace = take(s);
  emit(o.out, epg(result.get()), std::cout);
  emit(o.json, trace, std::cerr);
  maybe_dot(o, result.get());
}

void cmd_bd(const Options& o) {
  EmbeddingPtr g = parse(read_input(o.in));
  op_embedding* raw = nullptr;
  char* s = nullptr;
  check(op_bd_json(g.get(), &raw, &s));
  EmbeddingPtr disk(raw);
  std::string report = take(s);
  if (!o.out.empty()) write_file(o.out, epg(disk.get()));
  emit(o.json, report, std::cout);
}

void cmd_pipeline(const Options& o) {
  const std::string input = read_input(o.in);
  EmbeddingPtr g = parse(input);
  char* s = nullptr;
  check(op_pipeline_json(g.get(), o.timings ? 1 : 0, &s));
  Json report = Json::parse(take(s));
  report["input_digest"] = "sha256:" + sha256_hex(input);
  emit(o.json, report.dump(2) + "\n", std::cout);
}

void cmd_oracle(const Options& o, const std::string& which, int k) {
  Json report;
  if (which == "theorem1") {
    if (k < 1) throw UsageError("theorem1 needs K >= 1");
    if (k >= 3 && !o.slow) throw UsageError("theorem1 with K >= 3 needs --slow");
    char* s = nullptr;
    check(op_certify_theorem1(k, o.budget_chords, 0, &s));
    report = Json::parse(take(s));
  } else {
    EmbeddingPtr g = parse(read_input(o.in));
    std::size_t v = 0;
    std::size_t e = 0;
    check(op_embedding_counts(g.get(), &v, &e, nullptr));
    int value = 0;
    if (which == "bw") {
      check(op_oracle_branchwidth(g.get(), o.budget_edges, &value));
      report = {{"oracle", "branchwidth"}, {"value", value}};
    } else {
      check(op_oracle_outerplanarity(g.get(), o.budget_vertices, &value));
      report = {{"oracle", "outerplanarity"}, {"value", value}};
    }
    report["vertices"] = v;
    report["edges"] = e;
  }
  emit(o.json, report.dump(2) + "\n", std::cout);
}

void cmd_verify(const Options& o, const std::string& artifact_path) {
  EmbeddingPtr g = parse(read_input(o.in));
  std::string artifact;
  if (!artifact_path.empty()) artifact = read_input(artifact_path);
  char* s = nullptr;
  check(op_verify(g.get(), artifact_path.empty() ? nullptr : artifact.c_str(), &s));
  emit(o.json, take(s), std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-outerplanar triangulation and branch decomposition toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--in", o.in, "input EPG file (default: stdin)");
  app.add_option("--out", o.out, "output EPG file");
  app.add_option("--json", o.json, "output JSON file");
  app.add_option("--dot", o.dot, "also write the resulting graph as DOT");
  app.add_option("--seed", o.seed, "seed for the random family");
  app.add_option("--width", o.width, "ring width for the random family")->check(CLI::PositiveNumber);
  app.add_option("--budget-edges", o.budget_edges, "edge cap for the branchwidth oracle")->check(CLI::PositiveNumber);
  app.add_option("--budget-vertices", o.budget_vertices, "vertex cap for the outerplanarity oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-chords", o.budget_chords, "cap on triangulations per face")->check(CLI::PositiveNumber);
  app.add_flag("--slow", o.slow, "allow theorem1 with K >= 3");
  app.add_flag("--timings", o.timings, "add per-stage timings to the pipeline report");

  std::string family;
  int parameter = 0;
  auto* gen = app.add_subcommand("gen", "generate a graph family as EPG");
  gen->add_option("family", family, "nested|counterexample|cycle|wheel|path|k4minus|random")->required();
  gen->add_option("param", parameter, "size parameter (k4minus ignores it)");

  auto* peel = app.add_subcommand("peel", "onion peels as JSON");
  auto* forest = app.add_subcommand("forest", "saturate and build the outer-face-rooted BFS forest");
  auto* disk = app.add_subcommand("disk", "convert to a triangulated disk");
  auto* tri = app.add_subcommand("triangulate", "convert to a full triangulation");
  auto* bd = app.add_subcommand("bd", "branch decomposition of the triangulated disk");
  auto* pipeline = app.add_subcommand("pipeline", "disk, forest, branch decomposition and bounds");

  std::string which;
  int k = 0;
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->add_option("which", which, "bw|outerplanarity|theorem1")
      ->required()
      ->check(CLI::IsMember({"bw", "outerplanarity", "theorem1"}));
  oracle->add_option("K", k, "theorem1 parameter");

  std::string artifact;
  auto* verify = app.add_subcommand("verify", "re-check a graph and optionally a JSON artifact");
  verify->add_option("artifact", artifact, "JSON artifact emitted by another command");

  // Global options are accepted after the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (gen->parsed()) {
      cmd_gen(o, family, parameter);
    } else if (peel->parsed()) {
      cmd_peel(o);
    } else if (forest->parsed()) {
      cmd_forest(o);
    } else if (disk->parsed()) {
      cmd_convert(o, false);
    } else if (tri->parsed()) {
      cmd_convert(o, true);
    } else if (bd->parsed()) {
      cmd_bd(o);
    } else if (pipeline->parsed()) {
      cmd_pipeline(o);
    } else if (oracle->parsed()) {
      cmd_oracle(o, which, k);
    } else if (verify->parsed()) {
      cmd_verify(o, artifact);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return kDomainError;
  }
  std::cout.flush();
  return 0;
}
