// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include "onionpeel/onionpeel.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "onionpeel/branch.hpp"
#include "onionpeel/epg.hpp"
#include "onionpeel/error.hpp"
#include "onionpeel/generators.hpp"
#include "onionpeel/oracles.hpp"
#include "onionpeel/report.hpp"

struct op_embedding {
  onionpeel::Embedding g;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
op_status guarded(Fn fn) {
  try {
    fn();
    last_error.clear();
    return OP_OK;
  } catch (const onionpeel::Error& e) {
    last_error = e.what();
    return static_cast<op_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OP_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return OP_INTERNAL;
  }
}

op_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return OP_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  if (out) *out = copy_string(s);
}

void put_embedding(op_embedding** out, onionpeel::Embedding g) {
  if (out) *out = new op_embedding{std::move(g)};
}

}  // namespace

extern "C" {

const char* op_version(void) { return "0.1.0"; }

const char* op_status_name(op_status status) {
  switch (status) {
    case OP_OK: return "Ok";
    case OP_NULL_ARGUMENT: return "NullArgument";
    case OP_OUT_OF_MEMORY: return "OutOfMemory";
    default: break;
  }
  if (status >= OP_PARSE_ERROR && status <= OP_INTERNAL) {
    return onionpeel::error_name(static_cast<onionpeel::ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* op_last_error(void) { return last_error.c_str(); }

void op_free_string(char* s) { std::free(s); }

op_status op_embedding_parse(const char* epg_text, op_embedding** out) {
  if (!epg_text || !out) return null_argument("epg_text/out");
  *out = nullptr;
  return guarded([&] { put_embedding(out, onionpeel::parse_epg(epg_text)); });
}

void op_embedding_free(op_embedding* g) { delete g; }

op_status op_embedding_to_epg(const op_embedding* g, char** out) {
  if (!g || !out) return null_argument("g/out");
  return guarded([&] { put_string(out, onionpeel::write_epg(g->g)); });
}

op_status op_embedding_to_dot(const op_embedding* g, char** out) {
  if (!g || !out) return null_argument("g/out");
  return guarded([&] { put_string(out, onionpeel::write_dot(g->g)); });
}

op_status op_embedding_counts(const op_embedding* g, size_t* vertices, size_t* edges, size_t* faces) {
  if (!g) return null_argument("g");
  return guarded([&] {
    if (vertices) *vertices = g->g.num_vertices();
    if (edges) *edges = g->g.num_edges();
    if (faces) *faces = onionpeel::trace_faces(g->g).size();
  });
}

op_status op_generate(const char* family, int parameter, int width, uint64_t seed, op_embedding** out) {
  if (!family || !out) return null_argument("family/out");
  *out = nullptr;
  return guarded([&] {
    onionpeel::GadgetSpec spec{onionpeel::parse_family(family), parameter, width, seed};
    put_embedding(out, onionpeel::generate(spec));
  });
}

op_status op_peel_count(const op_embedding* g, int* k) {
  if (!g || !k) return null_argument("g/k");
  return guarded([&] { *k = onionpeel::onion_peels(g->g).k(); });
}

op_status op_peel_json(const op_embedding* g, char** json) {
  if (!g || !json) return null_argument("g/json");
  return guarded([&] { put_string(json, onionpeel::dump(onionpeel::peel_json(g->g, onionpeel::onion_peels(g->g)))); });
}

op_status op_forest_json(const op_embedding* g, op_embedding** saturated, char** json) {
  if (!g || !json) return null_argument("g/json");
  if (saturated) *saturated = nullptr;
  return guarded([&] {
    onionpeel::Embedding sat = onionpeel::saturate_inward_neighbors(g->g);
    onionpeel::RootedForest f = onionpeel::build_rooted_forest(sat);
    onionpeel::ForestBound b = onionpeel::verify_forest_bound(sat, f);
    const int k_in = onionpeel::onion_peels(g->g).k();
    if (b.height + 1 > k_in) {
      onionpeel::fail(onionpeel::ErrorCode::kBoundViolated, "forest height exceeds k - 1");
    }
    put_string(json, onionpeel::dump(onionpeel::forest_json(sat, f, b.k)));
    put_embedding(saturated, std::move(sat));
  });
}

namespace {

op_status conversion(const op_embedding* g, op_embedding** out, char** trace_json, bool full) {
  if (!g || !out) return null_argument("g/out");
  *out = nullptr;
  if (trace_json) *trace_json = nullptr;
  return guarded([&] {
    const int k_in = onionpeel::onion_peels(g->g).k();
    auto [result, trace] = full ? onionpeel::to_full_triangulation(g->g) : onionpeel::to_triangulated_disk(g->g);
    const int k_out = onionpeel::onion_peels(result).k();
    if (k_out > (full ? k_in + 1 : k_in)) {
      onionpeel::fail(onionpeel::ErrorCode::kBoundViolated, "conversion raised the peel count");
    }
    std::string text = onionpeel::dump(onionpeel::trace_json(trace, k_in, k_out));
    put_string(trace_json, text);
    put_embedding(out, std::move(result));
  });
}

}  // namespace

op_status op_to_disk(const op_embedding* g, op_embedding** disk, char** trace_json) {
  return conversion(g, disk, trace_json, false);
}

op_status op_to_triangulation(const op_embedding* g, op_embedding** out, char** trace_json) {
  return conversion(g, out, trace_json, true);
}

op_status op_bd_json(const op_embedding* g, op_embedding** disk, char** json) {
  if (!g || !json) return null_argument("g/json");
  if (disk) *disk = nullptr;
  return guarded([&] {
    onionpeel::PipelineResult r = onionpeel::decompose(g->g);
    onionpeel::DualTree tree = onionpeel::build_dual_tree(r.disk, r.forest);
    put_string(json, onionpeel::dump(onionpeel::bd_json(r.disk, tree, r.bd, r.certificate)));
    put_embedding(disk, std::move(r.disk));
  });
}

op_status op_pipeline_json(const op_embedding* g, int with_timings, char** json) {
  if (!g || !json) return null_argument("g/json");
  return guarded([&] { put_string(json, onionpeel::dump(onionpeel::pipeline_json(g->g, with_timings != 0))); });
}

op_status op_oracle_branchwidth(const op_embedding* g, int max_edges, int* out) {
  if (!g || !out) return null_argument("g/out");
  return guarded([&] {
    onionpeel::OracleBudget b;
    if (max_edges > 0) b.max_edges = max_edges;
    *out = onionpeel::brute_branchwidth(onionpeel::underlying_graph(g->g), b);
  });
}

op_status op_oracle_outerplanarity(const op_embedding* g, int max_vertices, int* out) {
  if (!g || !out) return null_argument("g/out");
  return guarded([&] {
    onionpeel::OracleBudget b;
    if (max_vertices > 0) b.max_vertices = max_vertices;
    *out = onionpeel::brute_outerplanarity(onionpeel::underlying_graph(g->g), b);
  });
}

op_status op_certify_theorem1(int k, uint64_t max_chord_sets, int threads, char** json) {
  if (!json) return null_argument("json");
  return guarded([&] {
    onionpeel::OracleBudget b;
    if (max_chord_sets > 0) b.max_chord_sets = max_chord_sets;
    put_string(json, onionpeel::dump(onionpeel::theorem1_json(onionpeel::certify_theorem1(k, b, threads))));
  });
}

op_status op_verify(const op_embedding* g, const char* artifact_json, char** json) {
  if (!g || !json) return null_argument("g/json");
  return guarded([&] {
    onionpeel::Json result;
    if (artifact_json) {
      onionpeel::Json a;
      try {
        a = onionpeel::Json::parse(artifact_json);
      } catch (const onionpeel::Json::exception& e) {
        onionpeel::fail(onionpeel::ErrorCode::kInvalidArtifact, std::string("not JSON: ") + e.what());
      }
      result = onionpeel::verify_artifact(g->g, &a);
    } else {
      result = onionpeel::verify_artifact(g->g, nullptr);
    }
    put_string(json, onionpeel::dump(result));
  });
}

int op_treewidth_bound(int bw) { return bw < 0 ? -1 : onionpeel::treewidth_bound(bw); }

}  // extern "C"
