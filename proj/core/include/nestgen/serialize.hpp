#pragma once

// JSON forms of diagrams, level distributions and sequences. Counts are
// always decimal strings.

#include <nlohmann/json.hpp>
#include <vector>

#include "nestgen/arcdiag.hpp"
#include "nestgen/bigint.hpp"
#include "nestgen/gentree.hpp"
#include "nestgen/refdata.hpp"

namespace nestgen {

using Json = nlohmann::json;

/// {"n", "closed_arcs": [[l,r],...], "open_arcs": [...]}, plus "blocks"
/// when `with_blocks` and no semi-arc is open.
Json to_json(const OpenPartitionDiagram& d, bool with_blocks = true);
/// {"n", "upper_arcs", "fixed_points", "lower_arcs", "upper_open",
/// "lower_open"}, plus "permutation" when closed. Upper arcs listed here
/// are the non-degenerate ones.
Json to_json(const OpenPermutationDiagram& d, bool with_permutation = true);

/// Throws InvalidInput on malformed documents.
OpenPartitionDiagram partition_diagram_from_json(const Json& j);
OpenPermutationDiagram permutation_diagram_from_json(const Json& j);

/// {"n", "labels": [{"label": [...], "count": "..."}]}
Json to_json(const LevelDistribution& level);
LevelDistribution level_from_json(const Json& j);

Json to_json(const std::vector<BigInt>& values);
std::vector<BigInt> big_ints_from_json(const Json& j);

Json to_json(const ReferenceSequence& seq);

}  // namespace nestgen
