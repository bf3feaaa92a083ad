// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "onionpeel/embedding.hpp"

namespace onionpeel {

// EPG text format:
//
//   epg 1
//   v <id>: <neighbor> <neighbor> ...     full rotation of <id>
//   outer <u> <v>                        outer dart, one per component
//
// Whitespace separated, '#' starts a comment. Output is canonical: vertices
// ascending, each rotation starting at its smallest neighbor.
Embedding parse_epg(std::string_view text);
std::string write_epg(const Embedding& g);

/// Graphviz rendering; face walks are listed as comments.
std::string write_dot(const Embedding& g);

}  // namespace onionpeel
