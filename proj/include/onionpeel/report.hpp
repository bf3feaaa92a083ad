// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

#include "onionpeel/branch.hpp"
#include "onionpeel/embedding.hpp"
#include "onionpeel/oracles.hpp"
#include "onionpeel/peel.hpp"
#include "onionpeel/triangulate.hpp"

namespace onionpeel {

using Json = nlohmann::json;

/// {"k", "layers": [[labels]]}
Json peel_json(const Embedding& g, const PeelDecomposition& peels);

/// {"height", "k", "roots": [labels], "vertices": [{"v", "parent", "depth"}]}
Json forest_json(const Embedding& g, const RootedForest& forest, int k);
RootedForest forest_from_json(const Embedding& g, const Json& j);

/// {"added": [[u, v, stage]], "k_in", "k_out"}
Json trace_json(const DiskConversionTrace& trace, int k_in, int k_out);

/// {"nodes", "arcs", "assignment": {"u-v": leaf}, "width", "bounds": {"2h", "tw"}}
Json bd_json(const Embedding& disk, const DualTree& tree, const BranchDecomposition& bd,
             const WidthCertificate& cert);
BranchDecomposition bd_from_json(const Json& j);

/// Runs the whole chain and reports k_in, k_out, forest height, width and
/// bounds. Stage timings only when asked, so reports stay reproducible.
Json pipeline_json(const Embedding& g, bool timings);

Json theorem1_json(const Theorem1Report& r);

/// Re-checks `artifact` (peel, forest, trace, bd, pipeline or theorem1
/// report) against `g`; with no artifact, validates and summarizes `g`.
/// Throws InvalidArtifact or BoundViolated on a mismatch.
Json verify_artifact(const Embedding& g, const Json* artifact);

/// Two-space indent plus trailing newline.
std::string dump(const Json& j);

}  // namespace onionpeel
